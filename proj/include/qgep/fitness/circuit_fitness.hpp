#pragma once

#include <mutex>
#include <string>
#include <unordered_map>

#include "qgep/fitness/optimizer.hpp"
#include "qgep/gep/engine.hpp"
#include "qgep/quantum/gate_set.hpp"

namespace qgep::fitness {

struct Evaluation {
    quantum::QuantumCircuit circuit;  // with slots
    std::vector<double> params;
    double value = 0.0;
};

/// Binds genes over a gate set to a circuit problem: decode, optionally
/// canonicalize, optimize the slots, report the best pre-fitness.
///
/// Results are memoized by circuit text. The cache only stores what the
/// pure computation returns, so fitness() stays a function of the gene and
/// is safe to call from several threads.
class CircuitFitness : public gep::FitnessProvider {
public:
    CircuitFitness(quantum::GateSet gates, Problem problem, bool canonicalize);

    const gep::PrimitiveSet& primitives() const override { return gates_.primitives; }
    double fitness(const gep::Gene& gene) const override;
    gep::Gene canonicalize(const gep::Gene& gene) const override;

    quantum::QuantumCircuit circuit_of(const gep::Gene& gene) const;
    Evaluation evaluate(const gep::Gene& gene) const;

    const quantum::GateSet& gates() const { return gates_; }
    const Problem& problem() const { return problem_; }

private:
    quantum::GateSet gates_;
    Problem problem_;
    bool canonicalize_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, OptimizationResult> cache_;
};

} // namespace qgep::fitness
