#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgep/gep/gene.hpp"

namespace qgep::gep {

struct EvolutionConfig {
    int population_size = 100;
    int generations = 100;
    int head_len = 8;
    std::uint64_t seed = 1;
    std::optional<double> early_stop_fitness;

    double mutation_rate = 0.05;
    double one_point_prob = 0.4;
    double two_point_prob = 0.2;
    double inversion_prob = 0.1;
    double swap_prob = 0.1;

    /// Threads used for fitness evaluation only.
    int threads = 1;

    void validate() const;
};

struct GenerationStats {
    int generation = 0;
    double best_fitness = 0.0;
    double worst_fitness = 0.0;
    double spread = 0.0;
};

/// Problem-specific side of the engine. fitness() must be a pure function of
/// the gene; the engine may call it concurrently from several threads.
class FitnessProvider {
public:
    virtual ~FitnessProvider() = default;

    virtual const PrimitiveSet& primitives() const = 0;
    virtual double fitness(const Gene& gene) const = 0;

    /// Canonicalization hook applied to every new individual.
    virtual Gene canonicalize(const Gene& gene) const { return gene; }
};

/// Raised when fitness evaluation throws; carries the offending genome.
class FitnessError : public std::runtime_error {
public:
    FitnessError(const std::string& what, std::string genome)
        : std::runtime_error(what + " [genome: " + genome + "]"), genome_(std::move(genome))
    {
    }
    const std::string& genome() const { return genome_; }

private:
    std::string genome_;
};

struct Individual {
    Gene gene;
    double fitness = 0.0;
    int coding_length = 0;
};

using Population = std::vector<Individual>;

/// Random population, canonicalized, evaluated and sorted best-first.
Population initial_population(const EvolutionConfig& cfg, const FitnessProvider& problem, Rng& rng);

/// One elitist generation: M offspring from the M survivors, a 2M pool of
/// survivors plus offspring, sorted by fitness (ties: shorter coding region,
/// then pool order), truncated to M.
Population evolve_generation(const Population& survivors, const EvolutionConfig& cfg,
                             const FitnessProvider& problem, Rng& rng, GenerationStats& stats);

struct EvolutionResult {
    Population population;
    std::vector<GenerationStats> trace;
    bool early_stopped = false;

    const Individual& best() const { return population.front(); }
};

using GenerationCallback = std::function<void(const GenerationStats&, const Population&)>;

EvolutionResult run_evolution(const EvolutionConfig& cfg, const FitnessProvider& problem,
                              const GenerationCallback& on_generation = {});

} // namespace qgep::gep
