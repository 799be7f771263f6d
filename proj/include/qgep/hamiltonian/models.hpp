#pragma once

#include "qgep/hamiltonian/graph.hpp"
#include "qgep/hamiltonian/pauli_sum.hpp"

namespace qgep::hamiltonian {

enum class Boundary { Open, Periodic };

/// sum over edges of Z_i Z_j. With S_i = 1 - 2*bit_i, a basis state b has
/// energy |E| - 2 cut(b).
PauliSum ising_from_graph(const Graph& g);

/// Jx sum_i X_i X_{i+1}, closing the ring when periodic. Needs n >= 2.
PauliSum xx_chain(int n, double jx, Boundary boundary);

/// X_iX_j + Y_iY_j + Z_iZ_j on every nearest-neighbor bond of an open
/// rows x cols grid; site (r, c) is qubit r*cols + c.
PauliSum heisenberg_2d(int rows, int cols);

} // namespace qgep::hamiltonian
