#pragma once

#include <span>
#include <vector>

#include "qgep/hamiltonian/pauli_sum.hpp"
#include "qgep/quantum/circuit.hpp"

namespace qgep::fitness {

enum class ProblemKind { FunctionFit, GroundState };

struct TrainingPair {
    quantum::StateVector input;
    quantum::StateVector output;
};

struct OptimizerSettings {
    /// Angles tried for every slot.
    std::vector<double> grid = uniform_grid(8);
    /// Gradient ascent after the grid search.
    bool refine = false;
    double fd_step = 1e-4;
    int refine_iterations = 100;
    double tolerance = 1e-8;
    /// Cap on coordinate sweeps per start.
    int sweep_passes = 100;
    /// Grids with |grid|^K up to this size are searched exhaustively.
    std::size_t exhaustive_limit = 256;

    /// `points` equally spaced angles in [0, 2pi).
    static std::vector<double> uniform_grid(int points);
    void validate() const;
};

struct Problem {
    ProblemKind kind = ProblemKind::GroundState;
    int n_bits = 0;
    std::vector<TrainingPair> pairs;      // FunctionFit
    hamiltonian::PauliSum hamiltonian;    // GroundState
    quantum::StateVector initial;         // GroundState
    OptimizerSettings optimizer;

    static Problem function_fit(int n_bits, std::vector<TrainingPair> pairs, OptimizerSettings settings = {});
    static Problem ground_state(hamiltonian::PauliSum h, quantum::StateVector initial,
                                OptimizerSettings settings = {});

    /// Throws std::invalid_argument on inconsistent sizes or unnormalized states.
    void validate() const;

    /// Input states the circuit acts on: the pair inputs or the single initial state.
    std::vector<const quantum::StateVector*> inputs() const;

    /// Pre-fitness of output states produced from inputs(): mean squared
    /// overlap with the targets, or minus the (shifted, scaled) energy.
    double score(std::span<const quantum::StateVector> outputs) const;
};

double prefitness(const quantum::QuantumCircuit& circuit, std::span<const double> params, const Problem& problem);

} // namespace qgep::fitness
