#pragma once

#include <optional>
#include <vector>

#include "qgep/gep/gene.hpp"
#include "qgep/quantum/circuit.hpp"

namespace qgep::quantum {

/// GEP primitives for circuits: one unary function per concrete gate
/// instance (N per one-qubit kind, N(N-1) per two-qubit kind) and the single
/// terminal "psi", the input state.
struct GateSet {
    int n_bits = 0;
    gep::PrimitiveSet primitives;
    /// Gate template per symbol id; empty for the terminal. Ry templates carry
    /// a placeholder slot renumbered when a circuit is built.
    std::vector<std::optional<GateInstance>> gate_of;
    gep::SymbolId input_symbol = 0;

    std::optional<gep::SymbolId> symbol_for(const GateInstance& gate) const;
};

/// Symbols are listed kind by kind, qubit by qubit (ordered pairs for
/// two-qubit kinds), terminal last. `phase` overrides P's phase.
GateSet build_gate_set(int n_bits, const std::vector<GateKind>& kinds,
                       std::optional<double> phase = std::nullopt);

/// The coding prefix read outermost-first: the first symbol is the last gate
/// applied. Ry slots are numbered in application order.
QuantumCircuit gene_to_circuit(const gep::Gene& gene, const GateSet& set);

/// Writes `circuit` back over the coding region of `gene`: gates in
/// outermost-first order, then the input terminal, then the gene's
/// remaining symbols untouched. The circuit must be expressible in `set`
/// and no longer than the original coding region.
gep::Gene circuit_to_gene(const QuantumCircuit& circuit, const gep::Gene& gene, const GateSet& set);

} // namespace qgep::quantum
