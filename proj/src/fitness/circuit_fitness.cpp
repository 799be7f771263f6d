#include "qgep/fitness/circuit_fitness.hpp"

#include <stdexcept>

#include "qgep/quantum/canonicalize.hpp"
#include "qgep/quantum/circuit_text.hpp"

namespace qgep::fitness {

namespace {

constexpr std::size_t kCacheCap = 1 << 18;

} // namespace

CircuitFitness::CircuitFitness(quantum::GateSet gates, Problem problem, bool canonicalize)
    : gates_(std::move(gates)), problem_(std::move(problem)), canonicalize_(canonicalize)
{
    problem_.validate();
    if (gates_.n_bits != problem_.n_bits) {
        throw std::invalid_argument("gate set and problem qubit counts differ");
    }
}

quantum::QuantumCircuit CircuitFitness::circuit_of(const gep::Gene& gene) const
{
    auto circuit = quantum::gene_to_circuit(gene, gates_);
    return canonicalize_ ? quantum::canonicalize(circuit) : circuit;
}

gep::Gene CircuitFitness::canonicalize(const gep::Gene& gene) const
{
    if (!canonicalize_) {
        return gene;
    }
    return quantum::circuit_to_gene(circuit_of(gene), gene, gates_);
}

Evaluation CircuitFitness::evaluate(const gep::Gene& gene) const
{
    Evaluation e;
    e.circuit = circuit_of(gene);
    const std::string key = quantum::circuit_to_string(e.circuit);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            e.params = it->second.params;
            e.value = it->second.value;
            return e;
        }
    }
    auto result = optimize_params(e.circuit, problem_);
    e.params = result.params;
    e.value = result.value;
    {
        std::lock_guard lock(cache_mutex_);
        if (cache_.size() >= kCacheCap) {
            cache_.clear();
        }
        cache_.emplace(key, std::move(result));
    }
    return e;
}

double CircuitFitness::fitness(const gep::Gene& gene) const
{
    return evaluate(gene).value;
}

} // namespace qgep::fitness
