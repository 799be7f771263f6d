#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "qgep/app/run_spec.hpp"
#include "qgep/fitness/circuit_fitness.hpp"
#include "qgep/hamiltonian/graph.hpp"
#include "qgep/hamiltonian/maxcut.hpp"

namespace qgep::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEarlyStop = 3;

/// Problem assembled from a RunSpec.
struct Session {
    RunSpec spec;
    std::optional<hamiltonian::Graph> graph;
    std::unique_ptr<fitness::CircuitFitness> provider;
    /// Exact ground energy of the shifted/scaled Hamiltonian, when known.
    std::optional<double> reference;
};

Session prepare(const RunSpec& spec);

struct RunOutcome {
    gep::EvolutionResult evolution;
    std::optional<double> reference;
    std::vector<fitness::Evaluation> top;
    std::vector<hamiltonian::CutReading> cuts;
    int exit_code = kExitOk;
};

/// Runs the evolution and writes trace.csv, best.circ and (for graphs)
/// maxcut.txt into spec.output_dir.
RunOutcome run(const RunSpec& spec, std::ostream& log);

struct VerifyReport {
    double oracle_energy = 0.0;
    double best_fitness = 0.0;
    double gap = 0.0;
    std::optional<int> oracle_maxcut;
    std::optional<int> best_cut;
};

/// Runs, then compares the best fitness with the oracle.
VerifyReport verify(const RunSpec& spec, std::ostream& out);

} // namespace qgep::app
