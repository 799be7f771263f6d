#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qgep/quantum/circuit.hpp"

namespace qgep::quantum {

class CircuitParseError : public std::runtime_error {
public:
    CircuitParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// "pi/4"-style text for multiples of pi/4 (after reduction to [0, 4pi)),
/// otherwise a round-trippable decimal.
std::string format_angle(double radians);

/// Parses "3pi/2", "3*pi/4", "-pi", "pi", "0.25" and the like.
double parse_angle(std::string_view text);

/// Whitespace-separated tokens Name + qubits ("Ry0", "CNOT0,1") with an
/// optional ":angle" or ":phi<slot>", in application order:
/// "Ry0:3pi/2 Ry1:pi/2 CNOT0,1 P2".
std::string circuit_to_string(const QuantumCircuit& circuit);

QuantumCircuit parse_circuit(std::string_view text, int n_bits);

} // namespace qgep::quantum
