#pragma once

#include "qgep/quantum/circuit.hpp"

namespace qgep::quantum {

/// Normal form used to shrink and deduplicate circuits. Repeats until nothing
/// changes:
///  - adjacent gates with disjoint support are swapped into (min qubit,
///    max qubit) order; overlapping gates never move past each other;
///  - adjacent identical self-inverse gates (H, X, Y, Z, CNOT) cancel;
///  - adjacent Ry on the same qubit fuse. Two fixed angles add mod 4pi and
///    vanish at 0 or 2pi (identity up to global phase). A slot absorbs
///    whatever it is fused with, and slots are renumbered afterwards.
///
/// Fixed-angle circuits keep their output state up to global phase. With
/// slots the reachable family of states is unchanged.
QuantumCircuit canonicalize(const QuantumCircuit& circuit);

/// Angle reduced to [0, 4pi).
double normalize_angle(double radians);

} // namespace qgep::quantum
