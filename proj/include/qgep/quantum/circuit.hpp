#pragma once

#include <span>
#include <vector>

#include "qgep/quantum/gates.hpp"

namespace qgep::quantum {

/// Ordered gate list, applied first to last.
struct QuantumCircuit {
    int n_bits = 0;
    std::vector<GateInstance> gates;

    /// Number of parameter slots K (slots are numbered 0..K-1).
    int num_slots() const;
    /// Throws SimulationError on bad qubits or gapped slot numbering.
    void validate() const;

    friend bool operator==(const QuantumCircuit&, const QuantumCircuit&) = default;
};

/// Angle of a gate given the parameter vector (nullopt for parameterless gates).
std::optional<double> resolve_angle(const GateInstance& gate, std::span<const double> params);

void apply_gate_inplace(StateVector& state, const GateInstance& gate, std::span<const double> params);
StateVector apply_gate(const StateVector& state, const GateInstance& gate, std::span<const double> params);

/// Applies gates [first, last) in place.
void apply_gates_inplace(StateVector& state, const QuantumCircuit& circuit, std::size_t first,
                         std::size_t last, std::span<const double> params);

StateVector apply_circuit(const StateVector& state, const QuantumCircuit& circuit,
                          std::span<const double> params);

/// Replaces every slot with its value from params.
QuantumCircuit bind(const QuantumCircuit& circuit, std::span<const double> params);

} // namespace qgep::quantum
