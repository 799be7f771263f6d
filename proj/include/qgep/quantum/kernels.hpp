#pragma once

#include <cstdint>
#include <span>

#include "qgep/quantum/gates.hpp"

namespace qgep::quantum {

/// Tensor product of Pauli operators as bit masks. `flip` marks X and Y
/// qubits, `phase` marks Z and Y qubits, `y_count` counts Y factors. Then
/// P|b> = i^y_count (-1)^popcount(b & phase) |b ^ flip>.
struct PauliMask {
    std::uint64_t flip = 0;
    std::uint64_t phase = 0;
    int y_count = 0;
};

/// Amplitude-level kernels. The `_serial` variants are the reference
/// implementations; the `_parallel` variants use OpenMP and are checked
/// against them. Gate kernels write each amplitude from a fixed formula, so
/// both variants are bit-identical. The parallel expectation reduces over
/// fixed-size blocks and sums the blocks in order, making it reproducible
/// for any thread count.
namespace kernels {

/// States below this dimension never spawn threads.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

void apply_1q_serial(std::span<Amplitude> amps, int qubit, const GateMatrix& u);
void apply_1q_parallel(std::span<Amplitude> amps, int qubit, const GateMatrix& u);

/// Dense 4x4 action on the ordered pair (a, b).
void apply_2q_serial(std::span<Amplitude> amps, int a, int b, const GateMatrix& u);
void apply_2q_parallel(std::span<Amplitude> amps, int a, int b, const GateMatrix& u);

void apply_cnot_serial(std::span<Amplitude> amps, int control, int target);
void apply_cnot_parallel(std::span<Amplitude> amps, int control, int target);

/// Reference: applies the string factor by factor to a scratch copy, then
/// takes <psi|scratch>.
double pauli_expectation_serial(std::span<const Amplitude> amps, int n_bits, PauliMask p);
/// Mask formula with a blocked reduction.
double pauli_expectation_parallel(std::span<const Amplitude> amps, PauliMask p);

} // namespace kernels

} // namespace qgep::quantum
