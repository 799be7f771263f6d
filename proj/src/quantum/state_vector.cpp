#include "qgep/quantum/state_vector.hpp"

#include <cmath>

namespace qgep::quantum {

namespace {

void check_bits(int n_bits)
{
    if (n_bits < 0 || n_bits > kMaxQubits) {
        throw SimulationError("qubit count " + std::to_string(n_bits) + " outside [0, " +
                              std::to_string(kMaxQubits) + "]");
    }
}

} // namespace

StateVector::StateVector(int n_bits) : n_bits_(n_bits)
{
    check_bits(n_bits);
    amps_.assign(std::size_t{1} << n_bits, Amplitude{0.0, 0.0});
}

StateVector::StateVector(int n_bits, std::vector<Amplitude> amplitudes)
    : n_bits_(n_bits), amps_(std::move(amplitudes))
{
    check_bits(n_bits);
    if (amps_.size() != (std::size_t{1} << n_bits)) {
        throw SimulationError("amplitude count does not match 2^n_bits");
    }
}

double StateVector::norm_squared() const
{
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

void StateVector::normalize()
{
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw SimulationError("cannot normalize the zero vector");
    }
    for (auto& a : amps_) {
        a /= n;
    }
}

StateVector basis_state(int n_bits, std::uint64_t index)
{
    StateVector s(n_bits);
    if (index >= s.dim()) {
        throw SimulationError("basis index " + std::to_string(index) + " out of range for " +
                              std::to_string(n_bits) + " qubits");
    }
    s[index] = 1.0;
    return s;
}

Amplitude inner_product(const StateVector& a, const StateVector& b)
{
    if (a.dim() != b.dim()) {
        throw SimulationError("inner product of states with different sizes");
    }
    Amplitude sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b)
{
    return std::norm(inner_product(a, b));
}

std::string bitstring(std::uint64_t index, int n_bits)
{
    std::string out(static_cast<std::size_t>(n_bits), '0');
    for (int q = 0; q < n_bits; ++q) {
        if ((index >> q) & 1U) {
            out[static_cast<std::size_t>(n_bits - 1 - q)] = '1';
        }
    }
    return out;
}

} // namespace qgep::quantum
