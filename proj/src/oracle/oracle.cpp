#include "qgep/oracle/oracle.hpp"

#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

namespace qgep::oracle {

namespace {

void check_vertices(const hamiltonian::Graph& g)
{
    if (g.vertex_count() > kMaxEnumerationVertices) {
        throw CapExceeded("enumeration limited to " + std::to_string(kMaxEnumerationVertices) + " vertices");
    }
}

using Dense = Eigen::MatrixXcd;

Dense pauli_matrix(hamiltonian::Pauli p)
{
    const std::complex<double> i{0.0, 1.0};
    Dense m(2, 2);
    switch (p) {
    case hamiltonian::Pauli::X:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case hamiltonian::Pauli::Y:
        m << 0.0, -i, i, 0.0;
        break;
    case hamiltonian::Pauli::Z:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    }
    return m;
}

Dense kron(const Dense& a, const Dense& b)
{
    Dense out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

// Qubit n-1 is the leftmost Kronecker factor, so qubit 0 is the least
// significant bit of the row index.
Dense term_matrix(const hamiltonian::PauliTerm& t, int n_bits)
{
    Dense out = Dense::Identity(1, 1);
    for (int q = n_bits - 1; q >= 0; --q) {
        const auto it = t.factors.find(q);
        out = kron(out, it == t.factors.end() ? Dense::Identity(2, 2) : pauli_matrix(it->second));
    }
    return out;
}

} // namespace

IsingGround exhaustive_ising_ground(const hamiltonian::Graph& g)
{
    check_vertices(g);
    const std::uint64_t count = std::uint64_t{1} << g.vertex_count();
    IsingGround best;
    long best_energy = std::numeric_limits<long>::max();
    for (std::uint64_t b = 0; b < count; ++b) {
        long energy = 0;
        for (auto [i, j] : g.edges()) {
            const long si = ((b >> i) & 1U) ? -1 : 1;
            const long sj = ((b >> j) & 1U) ? -1 : 1;
            energy += si * sj;
        }
        if (energy < best_energy) {
            best_energy = energy;
            best.minimizers.clear();
        }
        if (energy == best_energy) {
            best.minimizers.push_back(b);
        }
    }
    best.ground_energy = static_cast<double>(best_energy);
    return best;
}

MaxCut brute_force_maxcut(const hamiltonian::Graph& g)
{
    check_vertices(g);
    const std::uint64_t count = std::uint64_t{1} << g.vertex_count();
    MaxCut best;
    best.value = -1;
    for (std::uint64_t b = 0; b < count; ++b) {
        int cut = 0;
        for (auto [i, j] : g.edges()) {
            if (((b >> i) & 1U) != ((b >> j) & 1U)) {
                ++cut;
            }
        }
        if (cut > best.value) {
            best.value = cut;
            best.maximizers.clear();
        }
        if (cut == best.value) {
            best.maximizers.push_back(b);
        }
    }
    return best;
}

double exact_ground_energy(const hamiltonian::PauliSum& h)
{
    if (h.n_bits > kMaxDenseQubits) {
        throw CapExceeded("dense diagonalization limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << h.n_bits;
    Dense m = Dense::Zero(dim, dim);
    for (const auto& t : h.terms) {
        m += t.coefficient * term_matrix(t, h.n_bits);
    }
    Eigen::SelfAdjointEigenSolver<Dense> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver did not converge");
    }
    return solver.eigenvalues().minCoeff();
}

} // namespace qgep::oracle
