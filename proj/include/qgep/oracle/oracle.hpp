#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qgep/hamiltonian/graph.hpp"
#include "qgep/hamiltonian/pauli_sum.hpp"

namespace qgep::oracle {

inline constexpr int kMaxEnumerationVertices = 24;
inline constexpr int kMaxDenseQubits = 10;

struct CapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IsingGround {
    double ground_energy = 0.0;
    /// Minimizing basis indices (bit i set <=> S_i = -1), ascending.
    std::vector<std::uint64_t> minimizers;
};

/// Enumerates all 2^n spin assignments of sum_{(i,j) in E} S_i S_j.
IsingGround exhaustive_ising_ground(const hamiltonian::Graph& g);

struct MaxCut {
    int value = 0;
    std::vector<std::uint64_t> maximizers;
};

/// Enumerates all 2^n bipartitions by counting crossing edges.
MaxCut brute_force_maxcut(const hamiltonian::Graph& g);

/// Smallest eigenvalue of the dense matrix of the bare operator (shift and
/// scale not applied).
double exact_ground_energy(const hamiltonian::PauliSum& h);

} // namespace qgep::oracle
