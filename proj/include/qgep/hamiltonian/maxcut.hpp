#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgep/hamiltonian/graph.hpp"
#include "qgep/quantum/state_vector.hpp"

namespace qgep::hamiltonian {

/// Default weight threshold for reading cuts off a state.
inline constexpr double kDefaultCutThreshold = 1e-4;

struct CutReading {
    std::uint64_t index = 0;
    std::string bits;  // most significant qubit first
    double weight = 0.0;
    int cut = 0;
    std::vector<int> side_one;   // vertices whose qubit is |1> (spin -1)
    std::vector<int> side_zero;
};

/// Basis states with |amplitude|^2 > epsilon, heaviest first (ties by index).
std::vector<CutReading> maxcut_from_state(const quantum::StateVector& state, const Graph& g, double epsilon);

std::string format_cut_readings(const std::vector<CutReading>& readings);

} // namespace qgep::hamiltonian
