#include "qgep/quantum/gate_set.hpp"

#include <string>

namespace qgep::quantum {

namespace {

bool same_template(const GateInstance& a, const GateInstance& b)
{
    return a.kind == b.kind && a.qubits == b.qubits;
}

} // namespace

std::optional<gep::SymbolId> GateSet::symbol_for(const GateInstance& gate) const
{
    for (std::size_t id = 0; id < gate_of.size(); ++id) {
        if (gate_of[id] && same_template(*gate_of[id], gate)) {
            return static_cast<gep::SymbolId>(id);
        }
    }
    return std::nullopt;
}

GateSet build_gate_set(int n_bits, const std::vector<GateKind>& kinds, std::optional<double> phase)
{
    if (n_bits < 1 || n_bits > kMaxQubits) {
        throw gep::ConfigError("qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
    }
    GateSet set;
    set.n_bits = n_bits;
    auto add = [&](GateInstance g) {
        std::string name(gate_name(g.kind));
        name += std::to_string(g.qubits[0]);
        if (g.arity() == 2) {
            name += ',' + std::to_string(g.qubits[1]);
        }
        set.primitives.add_function(std::move(name), 1);
        set.gate_of.push_back(std::move(g));
    };

    for (GateKind kind : kinds) {
        if (qubit_count(kind) == 1) {
            for (int q = 0; q < n_bits; ++q) {
                GateParam param;
                if (kind == GateKind::Ry) {
                    param = SlotRef{0};
                } else if (kind == GateKind::P && phase) {
                    param = *phase;
                }
                add(make_gate(kind, q, param));
            }
        } else {
            for (int a = 0; a < n_bits; ++a) {
                for (int b = 0; b < n_bits; ++b) {
                    if (a != b) {
                        add(make_pair_gate(kind, a, b));
                    }
                }
            }
        }
    }
    set.input_symbol = set.primitives.add_terminal("psi");
    set.gate_of.emplace_back();
    return set;
}

QuantumCircuit gene_to_circuit(const gep::Gene& gene, const GateSet& set)
{
    QuantumCircuit circuit;
    circuit.n_bits = set.n_bits;
    std::size_t end = 0;
    while (end < gene.symbols.size() && set.gate_of[static_cast<std::size_t>(gene.symbols[end])]) {
        ++end;
    }
    int slot = 0;
    for (std::size_t i = end; i-- > 0;) {
        GateInstance g = *set.gate_of[static_cast<std::size_t>(gene.symbols[i])];
        if (std::holds_alternative<SlotRef>(g.param)) {
            g.param = SlotRef{slot++};
        }
        circuit.gates.push_back(std::move(g));
    }
    return circuit;
}

gep::Gene circuit_to_gene(const QuantumCircuit& circuit, const gep::Gene& gene, const GateSet& set)
{
    const std::size_t n = circuit.gates.size();
    if (n >= gene.symbols.size() || n > static_cast<std::size_t>(gene.head_len)) {
        throw gep::ConfigError("circuit does not fit the gene head");
    }
    gep::Gene out = gene;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& g = circuit.gates[n - 1 - k];
        const auto id = set.symbol_for(g);
        if (!id) {
            throw gep::ConfigError("gate outside the primitive set");
        }
        out.symbols[k] = *id;
    }
    out.symbols[n] = set.input_symbol;
    return out;
}

} // namespace qgep::quantum
