#include "qgep/quantum/canonicalize.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace qgep::quantum {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kAngleEps = 1e-12;

bool out_of_order(const GateInstance& a, const GateInstance& b)
{
    return std::pair(a.min_qubit(), a.max_qubit()) > std::pair(b.min_qubit(), b.max_qubit());
}

bool sort_pass(std::vector<GateInstance>& gates)
{
    bool changed = false;
    for (std::size_t i = 0; i + 1 < gates.size(); ++i) {
        if (!gates[i].overlaps(gates[i + 1]) && out_of_order(gates[i], gates[i + 1])) {
            std::swap(gates[i], gates[i + 1]);
            changed = true;
        }
    }
    return changed;
}

bool cancels(const GateInstance& a, const GateInstance& b)
{
    return a.kind == b.kind && is_self_inverse(a.kind) && a.qubits == b.qubits;
}

bool is_identity_angle(double radians)
{
    const double r = normalize_angle(radians);
    return r < kAngleEps || std::abs(r - 2.0 * std::numbers::pi) < kAngleEps || kFourPi - r < kAngleEps;
}

bool reduce_pass(std::vector<GateInstance>& gates)
{
    bool changed = false;
    std::vector<GateInstance> out;
    out.reserve(gates.size());
    for (const auto& g : gates) {
        if (!out.empty()) {
            GateInstance& last = out.back();
            if (cancels(last, g)) {
                out.pop_back();
                changed = true;
                continue;
            }
            if (last.kind == GateKind::Ry && g.kind == GateKind::Ry && last.qubits[0] == g.qubits[0]) {
                const auto* a = std::get_if<double>(&last.param);
                const auto* b = std::get_if<double>(&g.param);
                changed = true;
                if (a && b) {
                    const double sum = normalize_angle(*a + *b);
                    if (is_identity_angle(sum)) {
                        out.pop_back();
                    } else {
                        last.param = sum;
                    }
                } else if (a) {
                    last.param = g.param;
                }
                continue;
            }
        }
        if (g.kind == GateKind::Ry) {
            if (const auto* a = std::get_if<double>(&g.param); a && is_identity_angle(*a)) {
                changed = true;
                continue;
            }
        }
        out.push_back(g);
    }
    gates = std::move(out);
    return changed;
}

void renumber_slots(std::vector<GateInstance>& gates)
{
    std::map<int, int> remap;
    for (auto& g : gates) {
        if (auto* slot = std::get_if<SlotRef>(&g.param)) {
            auto [it, inserted] = remap.try_emplace(slot->index, static_cast<int>(remap.size()));
            slot->index = it->second;
        }
    }
}

} // namespace

double normalize_angle(double radians)
{
    double r = std::fmod(radians, kFourPi);
    if (r < 0.0) {
        r += kFourPi;
    }
    if (r >= kFourPi) {
        r -= kFourPi;
    }
    return r;
}

QuantumCircuit canonicalize(const QuantumCircuit& circuit)
{
    QuantumCircuit out = circuit;
    bool changed = true;
    while (changed) {
        changed = false;
        while (sort_pass(out.gates)) {
            changed = true;
        }
        if (reduce_pass(out.gates)) {
            changed = true;
        }
    }
    renumber_slots(out.gates);
    return out;
}

} // namespace qgep::quantum
