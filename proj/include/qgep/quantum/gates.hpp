#pragma once

#include <array>
#include <numbers>
#include <optional>
#include <string_view>
#include <variant>

#include "qgep/quantum/state_vector.hpp"

namespace qgep::quantum {

enum class GateKind { H, X, Y, Z, P, Ry, CNOT };

inline constexpr std::array kAllGateKinds{GateKind::H, GateKind::X,  GateKind::Y,   GateKind::Z,
                                          GateKind::P, GateKind::Ry, GateKind::CNOT};

/// Default phase of P, making P = diag(1, i).
inline constexpr double kDefaultPhase = std::numbers::pi / 2.0;

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
int qubit_count(GateKind kind);
bool is_self_inverse(GateKind kind);

/// Row-major 2x2 or 4x4 unitary. For two-qubit gates on the ordered pair
/// (a, b) the local index is 2*bit_a + bit_b; CNOT uses a as control.
struct GateMatrix {
    int dim = 2;
    std::array<Amplitude, 16> m{};

    const Amplitude& at(int r, int c) const { return m[static_cast<std::size_t>(r * dim + c)]; }
    Amplitude& at(int r, int c) { return m[static_cast<std::size_t>(r * dim + c)]; }
};

/// Ry needs an angle; P takes an optional phase; other kinds take none.
GateMatrix gate_matrix(GateKind kind, std::optional<double> angle = std::nullopt);

/// Index into the circuit's parameter vector.
struct SlotRef {
    int index = 0;
    friend bool operator==(SlotRef, SlotRef) = default;
};

/// No parameter, a fixed angle in radians, or a parameter slot.
using GateParam = std::variant<std::monostate, double, SlotRef>;

struct GateInstance {
    GateKind kind = GateKind::X;
    std::array<int, 2> qubits{0, -1};
    GateParam param;

    int arity() const { return qubit_count(kind); }
    int min_qubit() const;
    int max_qubit() const;
    bool overlaps(const GateInstance& other) const;

    friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

GateInstance make_gate(GateKind kind, int q0, GateParam param = {});
GateInstance make_pair_gate(GateKind kind, int q0, int q1);

} // namespace qgep::quantum
