#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgep::quantum {

using Amplitude = std::complex<double>;

/// Dense simulator cap (2^24 amplitudes, 256 MiB).
inline constexpr int kMaxQubits = 24;

struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense N-qubit state. Qubit i of basis index b is (b >> i) & 1, so qubit 0
/// is the least significant bit.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(int n_bits);
    StateVector(int n_bits, std::vector<Amplitude> amplitudes);

    int n_bits() const { return n_bits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    void normalize();

private:
    int n_bits_ = 0;
    std::vector<Amplitude> amps_;
};

StateVector basis_state(int n_bits, std::uint64_t index);

/// <a|b>
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// Basis index printed most significant qubit first: (8, 3) -> "00000011".
std::string bitstring(std::uint64_t index, int n_bits);

} // namespace qgep::quantum
