#include "qgep/quantum/gates.hpp"

#include <algorithm>
#include <cmath>

namespace qgep::quantum {

std::string_view gate_name(GateKind kind)
{
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Y:
        return "Y";
    case GateKind::Z:
        return "Z";
    case GateKind::P:
        return "P";
    case GateKind::Ry:
        return "Ry";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name)
{
    for (auto kind : kAllGateKinds) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

int qubit_count(GateKind kind)
{
    return kind == GateKind::CNOT ? 2 : 1;
}

bool is_self_inverse(GateKind kind)
{
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
        return true;
    default:
        return false;
    }
}

GateMatrix gate_matrix(GateKind kind, std::optional<double> angle)
{
    const bool wants_angle = kind == GateKind::Ry;
    if (wants_angle && !angle) {
        throw SimulationError("Ry needs an angle");
    }
    if (!wants_angle && kind != GateKind::P && angle) {
        throw SimulationError(std::string(gate_name(kind)) + " takes no angle");
    }

    const Amplitude i{0.0, 1.0};
    GateMatrix g;
    g.dim = 2;
    switch (kind) {
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        g.m = {r, r, r, -r};
        break;
    }
    case GateKind::X:
        g.m = {0.0, 1.0, 1.0, 0.0};
        break;
    case GateKind::Y:
        g.m = {0.0, -i, i, 0.0};
        break;
    case GateKind::Z:
        g.m = {1.0, 0.0, 0.0, -1.0};
        break;
    case GateKind::P: {
        const double phase = angle.value_or(kDefaultPhase);
        // exact i for the default phase
        const Amplitude e = phase == kDefaultPhase ? i : std::polar(1.0, phase);
        g.m = {1.0, 0.0, 0.0, e};
        break;
    }
    case GateKind::Ry: {
        const double c = std::cos(*angle / 2.0);
        const double s = std::sin(*angle / 2.0);
        g.m = {c, -s, s, c};
        break;
    }
    case GateKind::CNOT:
        g.dim = 4;
        g.m = {};
        g.at(0, 0) = 1.0;
        g.at(1, 1) = 1.0;
        g.at(2, 3) = 1.0;
        g.at(3, 2) = 1.0;
        break;
    }
    return g;
}

int GateInstance::min_qubit() const
{
    return arity() == 1 ? qubits[0] : std::min(qubits[0], qubits[1]);
}

int GateInstance::max_qubit() const
{
    return arity() == 1 ? qubits[0] : std::max(qubits[0], qubits[1]);
}

bool GateInstance::overlaps(const GateInstance& other) const
{
    for (int a = 0; a < arity(); ++a) {
        for (int b = 0; b < other.arity(); ++b) {
            if (qubits[static_cast<std::size_t>(a)] == other.qubits[static_cast<std::size_t>(b)]) {
                return true;
            }
        }
    }
    return false;
}

GateInstance make_gate(GateKind kind, int q0, GateParam param)
{
    GateInstance g;
    g.kind = kind;
    g.qubits = {q0, -1};
    g.param = param;
    return g;
}

GateInstance make_pair_gate(GateKind kind, int q0, int q1)
{
    GateInstance g;
    g.kind = kind;
    g.qubits = {q0, q1};
    return g;
}

} // namespace qgep::quantum
