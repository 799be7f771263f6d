#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qgep/fitness/circuit_fitness.hpp"
#include "qgep/hamiltonian/models.hpp"
#include "qgep/oracle/oracle.hpp"
#include "qgep/quantum/circuit_text.hpp"

using namespace qgep;
using namespace qgep::fitness;
using namespace qgep::quantum;
using hamiltonian::Boundary;
using std::numbers::pi;

namespace {

hamiltonian::PauliSum z0()
{
    hamiltonian::PauliSum h;
    h.n_bits = 1;
    h.terms.push_back({1.0, {{0, hamiltonian::Pauli::Z}}});
    return h;
}

} // namespace

TEST_CASE("single slot against Z")
{
    const auto problem = Problem::ground_state(z0(), basis_state(1, 0));
    const QuantumCircuit c{1, {make_gate(GateKind::Ry, 0, SlotRef{0})}};
    const auto r = optimize_params(c, problem);
    REQUIRE(r.params.size() == 1);
    CHECK(r.params[0] == doctest::Approx(pi));
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(prefitness(c, r.params, problem) == doctest::Approx(1.0));

    // nothing to optimize: the input already scores -<Z> = -1
    const auto empty = optimize_params({1, {}}, problem);
    CHECK(empty.params.empty());
    CHECK(empty.value == doctest::Approx(-1.0));
}

TEST_CASE("XX chain circuit reaches the ground energy")
{
    const auto problem =
        Problem::ground_state(hamiltonian::xx_chain(4, 1.0, Boundary::Periodic), basis_state(4, 0));
    const auto c = parse_circuit("Ry0:phi0 Ry1:phi1 Ry2:phi2 Ry3:phi3", 4);
    const auto r = optimize_params(c, problem);
    CHECK(r.value == doctest::Approx(4.0));
    CHECK(r.value <= 4.0 + 1e-8);
}

TEST_CASE("function fit scores mean fidelity")
{
    std::vector<TrainingPair> pairs{{basis_state(2, 0), basis_state(2, 3)}, {basis_state(2, 1), basis_state(2, 2)}};
    const auto problem = Problem::function_fit(2, pairs);
    CHECK(optimize_params({2, {}}, problem).value == doctest::Approx(0.0));
    const auto x1 = parse_circuit("X1", 2);
    CHECK(optimize_params(x1, problem).value == doctest::Approx(0.0));
    const auto flip_both = parse_circuit("Ry0:phi0 Ry1:phi1", 2);
    CHECK(optimize_params(flip_both, problem).value == doctest::Approx(1.0));

    const auto half = parse_circuit("Ry1:phi0", 2);
    CHECK(optimize_params(half, problem).value == doctest::Approx(0.0));
    const auto h0 = parse_circuit("H0 X1", 2);
    CHECK(optimize_params(h0, problem).value == doctest::Approx(0.5));
}

TEST_CASE("problem validation")
{
    CHECK_THROWS(Problem::function_fit(2, {}).validate());
    CHECK_THROWS(Problem::function_fit(2, {{basis_state(2, 0), basis_state(3, 0)}}).validate());
    StateVector unnormalized(1);
    unnormalized[0] = 2.0;
    CHECK_THROWS(Problem::ground_state(z0(), unnormalized).validate());
    CHECK_THROWS(Problem::ground_state(z0(), basis_state(2, 0)).validate());
    OptimizerSettings s;
    s.grid.clear();
    CHECK_THROWS(s.validate());
}

TEST_CASE("MaxCut on the square")
{
    const auto g = hamiltonian::cycle_graph(4);
    const auto problem = Problem::ground_state(hamiltonian::ising_from_graph(g), basis_state(4, 0));
    const auto c = parse_circuit("Ry0:phi0 Ry2:phi1", 4);
    const auto r = optimize_params(c, problem);
    CHECK(r.value == doctest::Approx(4.0));
}

TEST_CASE("fitness never exceeds the variational bound")
{
    const auto h = hamiltonian::heisenberg_2d(1, 3);
    const double bound = -oracle::exact_ground_energy(h);
    const auto set = build_gate_set(3, {kAllGateKinds.begin(), kAllGateKinds.end()});
    OptimizerSettings settings;
    settings.refine = true;
    CircuitFitness provider(set, Problem::ground_state(h, basis_state(3, 0), settings), true);
    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        const auto gene = provider.canonicalize(gep::random_gene(set.primitives, 6, rng));
        CHECK(provider.fitness(gene) <= bound + 1e-8);
    }
}

TEST_CASE("finite differences converge")
{
    const auto problem =
        Problem::ground_state(hamiltonian::xx_chain(3, 1.0, Boundary::Open), basis_state(3, 0));
    const auto c = parse_circuit("Ry0:phi0 H1 CNOT1,2 Ry2:phi1 Ry1:phi2", 3);
    const std::vector<double> at{0.3, 1.1, -0.4};
    const auto coarse = finite_difference_gradient(c, at, problem, 1e-3);
    const auto fine = finite_difference_gradient(c, at, problem, 5e-4);
    REQUIRE(coarse.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        // central differences: halving the step shrinks the error fourfold
        CHECK(std::abs(coarse[k] - fine[k]) < 1e-6);
    }

    // analytic derivative for a single slot against Z: d/dt cos(t) = -sin(t)
    const auto zp = Problem::ground_state(z0(), basis_state(1, 0));
    const QuantumCircuit one{1, {make_gate(GateKind::Ry, 0, SlotRef{0})}};
    const auto g = finite_difference_gradient(one, {0.7}, zp, 1e-4);
    CHECK(g[0] == doctest::Approx(std::sin(0.7)).epsilon(1e-7));
}

TEST_CASE("gradient refinement improves an off-grid optimum")
{
    hamiltonian::PauliSum h;
    h.n_bits = 1;
    h.terms.push_back({1.0, {{0, hamiltonian::Pauli::Z}}});
    h.terms.push_back({0.3, {{0, hamiltonian::Pauli::X}}});
    const double best = std::sqrt(1.0 + 0.09);
    const QuantumCircuit c{1, {make_gate(GateKind::Ry, 0, SlotRef{0})}};

    OptimizerSettings grid_only;
    const auto coarse = optimize_params(c, Problem::ground_state(h, basis_state(1, 0), grid_only));
    CHECK(coarse.value < best - 1e-3);

    OptimizerSettings refine;
    refine.refine = true;
    const auto fine = optimize_params(c, Problem::ground_state(h, basis_state(1, 0), refine));
    CHECK(fine.value == doctest::Approx(best).epsilon(1e-8));
    CHECK(fine.value <= best + 1e-12);
}

TEST_CASE("circuit fitness decodes and memoizes")
{
    const auto set = build_gate_set(4, {GateKind::Ry, GateKind::P});
    const auto problem =
        Problem::ground_state(hamiltonian::xx_chain(4, 1.0, Boundary::Periodic), basis_state(4, 0));
    CircuitFitness provider(set, problem, false);
    const auto gene = gep::parse_gene("Ry3 Ry2 Ry1 Ry0 psi psi psi psi psi", set.primitives);
    const auto eval = provider.evaluate(gene);
    CHECK(circuit_to_string(eval.circuit) == "Ry0:phi0 Ry1:phi1 Ry2:phi2 Ry3:phi3");
    CHECK(eval.value == doctest::Approx(4.0));
    CHECK(provider.fitness(gene) == eval.value);
    CHECK(provider.fitness(gene) == eval.value);

    CircuitFitness canon(set, problem, true);
    const auto messy = gep::parse_gene("Ry0 Ry3 P2 P2 Ry2 Ry1 Ry0 psi psi", set.primitives);
    const auto cleaned = canon.canonicalize(messy);
    CHECK(gep::is_valid(cleaned, set.primitives));
    CHECK(canon.circuit_of(cleaned).gates.size() <= canon.circuit_of(messy).gates.size());
    CHECK(canon.fitness(cleaned) == doctest::Approx(canon.fitness(messy)));
}

TEST_CASE("sweep results are exact evaluations")
{
    const auto h = hamiltonian::heisenberg_2d(2, 2);
    const auto problem = Problem::ground_state(h, basis_state(4, 0));
    const auto set = build_gate_set(4, {GateKind::Ry, GateKind::H, GateKind::CNOT});
    Rng rng(19);
    int swept = 0;
    for (int i = 0; i < 1000 && swept < 40; ++i) {
        const auto c = gene_to_circuit(gep::random_gene(set.primitives, 10, rng), set);
        if (c.num_slots() < 3) {
            continue;
        }
        ++swept;
        const auto r = optimize_params(c, problem);
        CHECK(r.value == prefitness(c, r.params, problem));
        for (double start : problem.optimizer.grid) {
            const std::vector<double> uniform(r.params.size(), start);
            CHECK(r.value >= prefitness(c, uniform, problem) - 1e-12);
        }
    }
    CHECK(swept == 40);
}
