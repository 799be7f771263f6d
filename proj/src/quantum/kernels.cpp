#include "qgep/quantum/kernels.hpp"

#include <bit>
#include <vector>

namespace qgep::quantum::kernels {

namespace {

constexpr std::size_t kBlock = 4096;

inline std::size_t insert_zero(std::size_t i, int bit)
{
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

// index with zeros inserted at two distinct bit positions (lo < hi)
inline std::size_t insert_two_zeros(std::size_t i, int lo, int hi)
{
    return insert_zero(insert_zero(i, lo), hi);
}

inline void pair_update(std::span<Amplitude> amps, std::size_t i0, std::size_t i1, const GateMatrix& u)
{
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = u.m[0] * a0 + u.m[1] * a1;
    amps[i1] = u.m[2] * a0 + u.m[3] * a1;
}

inline void quad_update(std::span<Amplitude> amps, std::size_t base, std::size_t ma, std::size_t mb,
                        const GateMatrix& u)
{
    const std::size_t idx[4] = {base, base | mb, base | ma, base | ma | mb};
    Amplitude in[4];
    for (int k = 0; k < 4; ++k) {
        in[k] = amps[idx[k]];
    }
    for (int r = 0; r < 4; ++r) {
        Amplitude acc{0.0, 0.0};
        for (int c = 0; c < 4; ++c) {
            acc += u.at(r, c) * in[c];
        }
        amps[idx[r]] = acc;
    }
}

inline Amplitude pauli_coefficient(int y_count)
{
    switch (y_count & 3) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

inline Amplitude masked_sum(std::span<const Amplitude> amps, PauliMask p, std::size_t begin, std::size_t end)
{
    Amplitude acc{0.0, 0.0};
    for (std::size_t b = begin; b < end; ++b) {
        const Amplitude term = std::conj(amps[b ^ p.flip]) * amps[b];
        if (std::popcount(static_cast<std::uint64_t>(b) & p.phase) & 1) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return acc;
}

} // namespace

void apply_1q_serial(std::span<Amplitude> amps, int qubit, const GateMatrix& u)
{
    const std::size_t half = amps.size() / 2;
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(i, qubit);
        pair_update(amps, i0, i0 | mask, u);
    }
}

void apply_1q_parallel(std::span<Amplitude> amps, int qubit, const GateMatrix& u)
{
    const auto half = static_cast<std::ptrdiff_t>(amps.size() / 2);
    const std::size_t mask = std::size_t{1} << qubit;
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(static_cast<std::size_t>(i), qubit);
        pair_update(amps, i0, i0 | mask, u);
    }
}

void apply_2q_serial(std::span<Amplitude> amps, int a, int b, const GateMatrix& u)
{
    const std::size_t quarter = amps.size() / 4;
    const int lo = a < b ? a : b;
    const int hi = a < b ? b : a;
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    for (std::size_t i = 0; i < quarter; ++i) {
        quad_update(amps, insert_two_zeros(i, lo, hi), ma, mb, u);
    }
}

void apply_2q_parallel(std::span<Amplitude> amps, int a, int b, const GateMatrix& u)
{
    const auto quarter = static_cast<std::ptrdiff_t>(amps.size() / 4);
    const int lo = a < b ? a : b;
    const int hi = a < b ? b : a;
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < quarter; ++i) {
        quad_update(amps, insert_two_zeros(static_cast<std::size_t>(i), lo, hi), ma, mb, u);
    }
}

void apply_cnot_serial(std::span<Amplitude> amps, int control, int target)
{
    const std::size_t quarter = amps.size() / 4;
    const int lo = control < target ? control : target;
    const int hi = control < target ? target : control;
    const std::size_t mc = std::size_t{1} << control;
    const std::size_t mt = std::size_t{1} << target;
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_two_zeros(i, lo, hi) | mc;
        std::swap(amps[base], amps[base | mt]);
    }
}

void apply_cnot_parallel(std::span<Amplitude> amps, int control, int target)
{
    const auto quarter = static_cast<std::ptrdiff_t>(amps.size() / 4);
    const int lo = control < target ? control : target;
    const int hi = control < target ? target : control;
    const std::size_t mc = std::size_t{1} << control;
    const std::size_t mt = std::size_t{1} << target;
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_two_zeros(static_cast<std::size_t>(i), lo, hi) | mc;
        std::swap(amps[base], amps[base | mt]);
    }
}

double pauli_expectation_serial(std::span<const Amplitude> amps, int n_bits, PauliMask p)
{
    std::vector<Amplitude> scratch(amps.begin(), amps.end());
    for (int q = 0; q < n_bits; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        const bool flips = (p.flip & bit) != 0;
        const bool phases = (p.phase & bit) != 0;
        if (!flips && !phases) {
            continue;
        }
        const GateKind kind = flips ? (phases ? GateKind::Y : GateKind::X) : GateKind::Z;
        apply_1q_serial(scratch, q, gate_matrix(kind));
    }
    Amplitude sum{0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        sum += std::conj(amps[i]) * scratch[i];
    }
    return sum.real();
}

double pauli_expectation_parallel(std::span<const Amplitude> amps, PauliMask p)
{
    const std::size_t dim = amps.size();
    if (dim <= kBlock) {
        return (pauli_coefficient(p.y_count) * masked_sum(amps, p, 0, dim)).real();
    }
    const std::size_t blocks = (dim + kBlock - 1) / kBlock;
    std::vector<Amplitude> partial(blocks);
    const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
    for (std::ptrdiff_t blk = 0; blk < nb; ++blk) {
        const std::size_t begin = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t end = begin + kBlock < dim ? begin + kBlock : dim;
        partial[static_cast<std::size_t>(blk)] = masked_sum(amps, p, begin, end);
    }
    Amplitude sum{0.0, 0.0};
    for (const auto& s : partial) {
        sum += s;
    }
    return (pauli_coefficient(p.y_count) * sum).real();
}

} // namespace qgep::quantum::kernels
