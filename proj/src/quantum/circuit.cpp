#include "qgep/quantum/circuit.hpp"

#include <algorithm>
#include <string>

#include "qgep/quantum/kernels.hpp"

namespace qgep::quantum {

int QuantumCircuit::num_slots() const
{
    int k = 0;
    for (const auto& g : gates) {
        if (const auto* slot = std::get_if<SlotRef>(&g.param)) {
            k = std::max(k, slot->index + 1);
        }
    }
    return k;
}

void QuantumCircuit::validate() const
{
    std::vector<bool> seen(static_cast<std::size_t>(num_slots()), false);
    for (const auto& g : gates) {
        for (int k = 0; k < g.arity(); ++k) {
            const int q = g.qubits[static_cast<std::size_t>(k)];
            if (q < 0 || q >= n_bits) {
                throw SimulationError("gate " + std::string(gate_name(g.kind)) + " on qubit " +
                                      std::to_string(q) + " outside a " + std::to_string(n_bits) +
                                      "-qubit register");
            }
        }
        if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
            throw SimulationError("two-qubit gate with repeated qubit");
        }
        if (const auto* slot = std::get_if<SlotRef>(&g.param)) {
            if (slot->index < 0) {
                throw SimulationError("negative parameter slot");
            }
            seen[static_cast<std::size_t>(slot->index)] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw SimulationError("parameter slots are not numbered without gaps");
    }
}

std::optional<double> resolve_angle(const GateInstance& gate, std::span<const double> params)
{
    if (const auto* fixed = std::get_if<double>(&gate.param)) {
        return *fixed;
    }
    if (const auto* slot = std::get_if<SlotRef>(&gate.param)) {
        if (slot->index < 0 || static_cast<std::size_t>(slot->index) >= params.size()) {
            throw SimulationError("parameter slot " + std::to_string(slot->index) + " out of range");
        }
        return params[static_cast<std::size_t>(slot->index)];
    }
    return std::nullopt;
}

void apply_gate_inplace(StateVector& state, const GateInstance& gate, std::span<const double> params)
{
    for (int k = 0; k < gate.arity(); ++k) {
        const int q = gate.qubits[static_cast<std::size_t>(k)];
        if (q < 0 || q >= state.n_bits()) {
            throw SimulationError("gate qubit " + std::to_string(q) + " out of range");
        }
    }
    auto amps = state.amplitudes();
    if (gate.kind == GateKind::CNOT) {
        if (gate.qubits[0] == gate.qubits[1]) {
            throw SimulationError("CNOT control equals target");
        }
        kernels::apply_cnot_parallel(amps, gate.qubits[0], gate.qubits[1]);
        return;
    }
    kernels::apply_1q_parallel(amps, gate.qubits[0], gate_matrix(gate.kind, resolve_angle(gate, params)));
}

StateVector apply_gate(const StateVector& state, const GateInstance& gate, std::span<const double> params)
{
    StateVector out = state;
    apply_gate_inplace(out, gate, params);
    return out;
}

void apply_gates_inplace(StateVector& state, const QuantumCircuit& circuit, std::size_t first,
                         std::size_t last, std::span<const double> params)
{
    for (std::size_t i = first; i < last; ++i) {
        apply_gate_inplace(state, circuit.gates[i], params);
    }
}

StateVector apply_circuit(const StateVector& state, const QuantumCircuit& circuit,
                          std::span<const double> params)
{
    if (static_cast<int>(params.size()) < circuit.num_slots()) {
        throw SimulationError("circuit needs " + std::to_string(circuit.num_slots()) + " parameters, got " +
                              std::to_string(params.size()));
    }
    StateVector out = state;
    apply_gates_inplace(out, circuit, 0, circuit.gates.size(), params);
    return out;
}

QuantumCircuit bind(const QuantumCircuit& circuit, std::span<const double> params)
{
    QuantumCircuit out = circuit;
    for (auto& g : out.gates) {
        if (std::holds_alternative<SlotRef>(g.param)) {
            g.param = *resolve_angle(g, params);
        }
    }
    return out;
}

} // namespace qgep::quantum
