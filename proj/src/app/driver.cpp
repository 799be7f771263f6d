#include "qgep/app/driver.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "qgep/hamiltonian/models.hpp"
#include "qgep/oracle/oracle.hpp"
#include "qgep/quantum/circuit_text.hpp"

namespace qgep::app {

namespace {

hamiltonian::PauliSum build_hamiltonian(const RunSpec& spec, const std::optional<hamiltonian::Graph>& graph)
{
    using Kind = HamiltonianSource::Kind;
    const auto& src = spec.hamiltonian;
    hamiltonian::PauliSum h;
    if (graph) {
        h = hamiltonian::ising_from_graph(*graph);
    } else if (src.kind == Kind::XX) {
        h = hamiltonian::xx_chain(src.sites, src.jx, src.boundary);
    } else if (src.kind == Kind::Heisenberg2D) {
        h = hamiltonian::heisenberg_2d(src.rows, src.cols);
    } else {
        h = hamiltonian::load_pauli_sum(src.path.string());
    }
    h.shift = spec.energy_shift;
    h.scale = spec.energy_scale;
    return h;
}

std::optional<double> reference_energy(const RunSpec& spec, const Session& s)
{
    if (spec.run_type != fitness::ProblemKind::GroundState) {
        return std::nullopt;
    }
    const auto& h = s.provider->problem().hamiltonian;
    if (spec.exact_energy) {
        return h.transform(*spec.exact_energy);
    }
    if (s.graph && s.graph->vertex_count() <= oracle::kMaxEnumerationVertices) {
        return h.transform(oracle::exhaustive_ising_ground(*s.graph).ground_energy);
    }
    if (h.n_bits <= oracle::kMaxDenseQubits) {
        return h.transform(oracle::exact_ground_energy(h));
    }
    return std::nullopt;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

std::string format_real(double v)
{
    return fmt::format("{:.12g}", v == 0.0 ? 0.0 : v);
}

} // namespace

Session prepare(const RunSpec& spec)
{
    Session s;
    s.spec = spec;
    int n_bits = spec.n_bits;
    if (!spec.graph_file.empty()) {
        s.graph = hamiltonian::load_graph(spec.graph_file.string());
        if (n_bits != 0 && n_bits != s.graph->vertex_count()) {
            throw InputError("NumBits", 0, "graph has " + std::to_string(s.graph->vertex_count()) + " vertices");
        }
        n_bits = s.graph->vertex_count();
    }

    fitness::Problem problem;
    if (spec.run_type == fitness::ProblemKind::GroundState) {
        auto h = build_hamiltonian(spec, s.graph);
        if (n_bits != 0 && n_bits != h.n_bits) {
            throw InputError("NumBits", 0, "Hamiltonian acts on " + std::to_string(h.n_bits) + " qubits");
        }
        n_bits = h.n_bits;
        if (n_bits < 1 || n_bits > quantum::kMaxQubits) {
            throw InputError("NumBits", 0, "qubit count outside the simulator range");
        }
        auto initial = parse_state(spec.initial_state, n_bits);
        problem = fitness::Problem::ground_state(std::move(h), std::move(initial), spec.optimizer);
    } else {
        auto pairs = load_training_pairs(spec.training_pairs, n_bits);
        problem = fitness::Problem::function_fit(n_bits, std::move(pairs), spec.optimizer);
    }

    auto gates = quantum::build_gate_set(n_bits, spec.gates, spec.phase);
    s.provider = std::make_unique<fitness::CircuitFitness>(std::move(gates), std::move(problem), spec.canonicalize);
    s.reference = reference_energy(spec, s);
    s.spec.n_bits = n_bits;
    return s;
}

RunOutcome run(const RunSpec& spec, std::ostream& log)
{
    const Session session = prepare(spec);
    const auto& provider = *session.provider;
    RunOutcome outcome;
    outcome.reference = session.reference;

    std::string trace = "generation,best_fitness,worst_fitness,delta_e_best,delta_e_pop\n";
    auto on_generation = [&](const gep::GenerationStats& st, const gep::Population&) {
        std::string de_best;
        std::string de_pop;
        if (session.reference) {
            de_best = format_real(-st.best_fitness - *session.reference);
            de_pop = format_real(st.spread);
        }
        trace += fmt::format("{},{},{},{},{}\n", st.generation, format_real(st.best_fitness),
                             format_real(st.worst_fitness), de_best, de_pop);
    };
    outcome.evolution = gep::run_evolution(spec.evolution, provider, on_generation);

    std::set<std::string> seen;
    std::string best_text = "# rank fitness circuit\n";
    for (const auto& ind : outcome.evolution.population) {
        if (static_cast<int>(outcome.top.size()) >= spec.top_circuits) {
            break;
        }
        auto eval = provider.evaluate(ind.gene);
        const std::string text = quantum::circuit_to_string(quantum::bind(eval.circuit, eval.params));
        if (!seen.insert(text).second) {
            continue;
        }
        best_text += fmt::format("{} {} {}\n", outcome.top.size() + 1, format_real(eval.value), text);
        outcome.top.push_back(std::move(eval));
    }

    std::filesystem::create_directories(spec.output_dir);
    write_file(spec.output_dir / "trace.csv", trace);
    write_file(spec.output_dir / "best.circ", best_text);

    if (session.graph) {
        const auto& best = outcome.top.front();
        const auto state =
            quantum::apply_circuit(provider.problem().initial, best.circuit, best.params);
        outcome.cuts = hamiltonian::maxcut_from_state(state, *session.graph, spec.epsilon);
        write_file(spec.output_dir / "maxcut.txt", hamiltonian::format_cut_readings(outcome.cuts));
    }

    const auto& last = outcome.evolution.trace.back();
    log << fmt::format("generations {} best_fitness {}{}\n", last.generation, format_real(last.best_fitness),
                       outcome.evolution.early_stopped ? " (early stop)" : "");
    if (!outcome.top.empty()) {
        log << "best circuit: " << quantum::circuit_to_string(quantum::bind(outcome.top[0].circuit, outcome.top[0].params))
            << "\n";
    }
    outcome.exit_code = outcome.evolution.early_stopped ? kExitEarlyStop : kExitOk;
    return outcome;
}

VerifyReport verify(const RunSpec& spec, std::ostream& out)
{
    if (spec.run_type != fitness::ProblemKind::GroundState) {
        throw InputError("RunType", 0, "verify needs a GroundState run");
    }
    const RunOutcome outcome = run(spec, out);
    if (!outcome.reference) {
        throw oracle::CapExceeded("no exact reference: problem exceeds the oracle caps and ExactEnergy is unset");
    }
    VerifyReport report;
    report.oracle_energy = *outcome.reference;
    report.best_fitness = outcome.evolution.best().fitness;
    report.gap = -report.best_fitness - report.oracle_energy;

    out << fmt::format("oracle_energy {}\n", format_real(report.oracle_energy));
    out << fmt::format("best_fitness {}\n", format_real(report.best_fitness));
    out << fmt::format("gap {}\n", format_real(report.gap));

    if (!spec.graph_file.empty()) {
        const auto graph = hamiltonian::load_graph(spec.graph_file.string());
        report.oracle_maxcut = oracle::brute_force_maxcut(graph).value;
        int best = 0;
        for (const auto& r : outcome.cuts) {
            best = std::max(best, r.cut);
        }
        report.best_cut = best;
        out << fmt::format("oracle_maxcut {}\nbest_cut {}\n", *report.oracle_maxcut, *report.best_cut);
    }
    return report;
}

} // namespace qgep::app
