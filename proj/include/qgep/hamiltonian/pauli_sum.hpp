#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgep/quantum/kernels.hpp"
#include "qgep/quantum/state_vector.hpp"

namespace qgep::hamiltonian {

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

struct PauliTerm {
    double coefficient = 0.0;
    /// qubit -> Pauli factor; absent qubits carry the identity.
    std::map<int, Pauli> factors;

    quantum::PauliMask mask() const;
    /// "Z0 Z3"; empty for the identity.
    std::string label() const;

    friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// H' = scale * (sum_k c_k P_k - shift). Hermitian by construction.
struct PauliSum {
    int n_bits = 0;
    std::vector<PauliTerm> terms;
    double shift = 0.0;
    double scale = 1.0;

    /// Throws std::invalid_argument for bad qubits or non-finite numbers.
    void validate() const;
    /// Applies the shift and scale to an energy of the bare operator.
    double transform(double raw) const { return scale * (raw - shift); }

    friend bool operator==(const PauliSum&, const PauliSum&) = default;
};

/// <psi|H'|psi>, term by term with the mask kernel.
double expectation(const PauliSum& h, const quantum::StateVector& state);

/// Same quantity through the scratch-copy reference kernel.
double expectation_reference(const PauliSum& h, const quantum::StateVector& state);

/// Text format: header "nbits <N>", then "coefficient [P<q> ...]" per term
/// (e.g. "1.0 Z0 Z1"; a bare coefficient is an identity term). Optional
/// "shift <e0>" and "scale <s>" lines. '#' starts a comment.
PauliSum parse_pauli_sum(const std::string& text);
PauliSum load_pauli_sum(const std::string& path);
std::string format_pauli_sum(const PauliSum& h);
void save_pauli_sum(const PauliSum& h, const std::string& path);

} // namespace qgep::hamiltonian
