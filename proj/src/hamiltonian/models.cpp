#include "qgep/hamiltonian/models.hpp"

#include <stdexcept>

namespace qgep::hamiltonian {

namespace {

PauliTerm two_site(double c, Pauli p, int i, int j)
{
    PauliTerm t;
    t.coefficient = c;
    t.factors = {{i, p}, {j, p}};
    return t;
}

} // namespace

PauliSum ising_from_graph(const Graph& g)
{
    PauliSum h;
    h.n_bits = g.vertex_count();
    for (auto [i, j] : g.edges()) {
        h.terms.push_back(two_site(1.0, Pauli::Z, i, j));
    }
    return h;
}

PauliSum xx_chain(int n, double jx, Boundary boundary)
{
    if (n < 2) {
        throw std::invalid_argument("XX chain needs at least two sites");
    }
    PauliSum h;
    h.n_bits = n;
    for (int i = 0; i + 1 < n; ++i) {
        h.terms.push_back(two_site(jx, Pauli::X, i, i + 1));
    }
    // a two-site ring would repeat its only bond
    if (boundary == Boundary::Periodic && n > 2) {
        h.terms.push_back(two_site(jx, Pauli::X, n - 1, 0));
    }
    return h;
}

PauliSum heisenberg_2d(int rows, int cols)
{
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("lattice dimensions must be positive");
    }
    PauliSum h;
    h.n_bits = rows * cols;
    auto bond = [&](int a, int b) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            h.terms.push_back(two_site(1.0, p, a, b));
        }
    };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int site = r * cols + c;
            if (c + 1 < cols) {
                bond(site, site + 1);
            }
            if (r + 1 < rows) {
                bond(site, site + cols);
            }
        }
    }
    return h;
}

} // namespace qgep::hamiltonian
