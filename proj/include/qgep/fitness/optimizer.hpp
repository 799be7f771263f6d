#pragma once

#include <vector>

#include "qgep/fitness/problem.hpp"

namespace qgep::fitness {

struct OptimizationResult {
    std::vector<double> params;
    double value = 0.0;
};

/// Maximizes the pre-fitness over the circuit's parameter slots.
///
/// Small searches (|grid|^K <= exhaustive_limit) enumerate the grid. Larger
/// ones run coordinate sweeps over the grid from every uniform start (all
/// slots at the same grid angle), sweeping until a full pass brings no
/// improvement. Gradient ascent with central finite differences then
/// refines the best point when enabled. Deterministic; returns the best
/// point seen.
OptimizationResult optimize_params(const quantum::QuantumCircuit& circuit, const Problem& problem);

/// Central-difference gradient of the pre-fitness.
std::vector<double> finite_difference_gradient(const quantum::QuantumCircuit& circuit,
                                               const std::vector<double>& params, const Problem& problem,
                                               double step);

} // namespace qgep::fitness
