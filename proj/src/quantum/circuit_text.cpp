#include "qgep/quantum/circuit_text.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "qgep/quantum/canonicalize.hpp"

namespace qgep::quantum {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

std::string gate_token(const GateInstance& g)
{
    std::string out(gate_name(g.kind));
    out += std::to_string(g.qubits[0]);
    if (g.arity() == 2) {
        out += ',' + std::to_string(g.qubits[1]);
    }
    if (const auto* angle = std::get_if<double>(&g.param)) {
        out += ':' + format_angle(*angle);
    } else if (const auto* slot = std::get_if<SlotRef>(&g.param)) {
        out += ":phi" + std::to_string(slot->index);
    }
    return out;
}

bool parse_int(std::string_view text, int& value)
{
    if (text.empty() || text.size() > 9) {
        return false;
    }
    value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
        value = value * 10 + (c - '0');
    }
    return true;
}

GateInstance parse_token(std::string_view token, std::size_t offset, int n_bits)
{
    std::size_t pos = 0;
    while (pos < token.size() && std::isalpha(static_cast<unsigned char>(token[pos]))) {
        ++pos;
    }
    const auto kind = parse_gate_kind(token.substr(0, pos));
    if (!kind) {
        throw CircuitParseError("unknown gate '" + std::string(token.substr(0, pos)) + "'", offset);
    }

    const std::size_t colon = token.find(':');
    const std::string_view qubit_text = token.substr(pos, colon == std::string_view::npos ? colon : colon - pos);
    GateInstance g;
    g.kind = *kind;
    const std::size_t comma = qubit_text.find(',');
    const int want = qubit_count(*kind);
    const int have = comma == std::string_view::npos ? 1 : 2;
    if (want != have) {
        throw CircuitParseError(std::string(gate_name(*kind)) + " needs " + std::to_string(want) + " qubit(s)",
                                offset + pos);
    }
    int q0 = 0;
    int q1 = -1;
    if (!parse_int(qubit_text.substr(0, comma), q0) ||
        (have == 2 && !parse_int(qubit_text.substr(comma + 1), q1))) {
        throw CircuitParseError("malformed qubit list '" + std::string(qubit_text) + "'", offset + pos);
    }
    if (q0 >= n_bits || q1 >= n_bits || q0 == q1) {
        throw CircuitParseError("qubit out of range or repeated", offset + pos);
    }
    g.qubits = {q0, q1};

    if (colon != std::string_view::npos) {
        const std::string_view param = token.substr(colon + 1);
        if (*kind != GateKind::Ry && *kind != GateKind::P) {
            throw CircuitParseError(std::string(gate_name(*kind)) + " takes no angle", offset + colon);
        }
        if (param.starts_with("phi")) {
            int slot = 0;
            if (!parse_int(param.substr(3), slot)) {
                throw CircuitParseError("malformed slot '" + std::string(param) + "'", offset + colon + 1);
            }
            g.param = SlotRef{slot};
        } else {
            try {
                g.param = parse_angle(param);
            } catch (const std::invalid_argument& e) {
                throw CircuitParseError(e.what(), offset + colon + 1);
            }
        }
    } else if (*kind == GateKind::Ry) {
        throw CircuitParseError("Ry needs an angle or slot", offset + token.size());
    }
    return g;
}

} // namespace

std::string format_angle(double radians)
{
    const double r = normalize_angle(radians);
    const double k = std::round(r / kQuarterPi);
    if (std::abs(r - k * kQuarterPi) <= 1e-9) {
        const int quarters = static_cast<int>(k) % 16;
        if (quarters == 0) {
            return "0";
        }
        const int g = std::gcd(quarters, 4);
        const int num = quarters / g;
        const int den = 4 / g;
        std::string out = num == 1 ? "" : std::to_string(num);
        out += "pi";
        if (den != 1) {
            out += "/" + std::to_string(den);
        }
        return out;
    }
    return fmt::format("{:.17g}", r);
}

double parse_angle(std::string_view text)
{
    const std::string s(text);
    const std::size_t pi = s.find("pi");
    if (pi == std::string::npos) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument("");
            }
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed angle '" + s + "'");
        }
    }
    std::string coeff = s.substr(0, pi);
    if (!coeff.empty() && coeff.back() == '*') {
        coeff.pop_back();
    }
    double num = 1.0;
    if (coeff == "-") {
        num = -1.0;
    } else if (!coeff.empty() && coeff != "+") {
        try {
            std::size_t used = 0;
            num = std::stod(coeff, &used);
            if (used != coeff.size()) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed angle '" + s + "'");
        }
    }
    double den = 1.0;
    const std::string rest = s.substr(pi + 2);
    if (!rest.empty()) {
        int d = 0;
        if (rest[0] != '/' || !parse_int(std::string_view(rest).substr(1), d) || d == 0) {
            throw std::invalid_argument("malformed angle '" + s + "'");
        }
        den = d;
    }
    return num * std::numbers::pi / den;
}

std::string circuit_to_string(const QuantumCircuit& circuit)
{
    std::string out;
    for (const auto& g : circuit.gates) {
        if (!out.empty()) {
            out += ' ';
        }
        out += gate_token(g);
    }
    return out;
}

QuantumCircuit parse_circuit(std::string_view text, int n_bits)
{
    QuantumCircuit circuit;
    circuit.n_bits = n_bits;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        circuit.gates.push_back(parse_token(text.substr(pos, end - pos), pos, n_bits));
        pos = end;
    }
    try {
        circuit.validate();
    } catch (const SimulationError& e) {
        throw CircuitParseError(e.what(), text.size());
    }
    return circuit;
}

} // namespace qgep::quantum
