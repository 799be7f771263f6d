#include "qgep/gep/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>

#include <omp.h>

#include "qgep/gep/karva.hpp"
#include "qgep/gep/operators.hpp"

namespace qgep::gep {

namespace {

double sanitize(double f)
{
    return std::isnan(f) ? -std::numeric_limits<double>::infinity() : f;
}

void evaluate(std::vector<Individual>& items, std::size_t begin, const EvolutionConfig& cfg,
              const FitnessProvider& problem)
{
    const auto& pset = problem.primitives();
    const auto n = static_cast<std::ptrdiff_t>(items.size());
    std::vector<std::exception_ptr> errors(items.size());

#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads) if (cfg.threads > 1)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(begin); i < n; ++i) {
        auto& item = items[static_cast<std::size_t>(i)];
        try {
            item.coding_length = coding_length(item.gene, pset);
            item.fitness = sanitize(problem.fitness(item.gene));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }

    // rethrow in pool order so the reported genome does not depend on scheduling
    for (std::size_t i = begin; i < items.size(); ++i) {
        if (!errors[i]) {
            continue;
        }
        const std::string genome = to_string(items[i].gene, pset);
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            throw FitnessError(e.what(), genome);
        } catch (...) {
            throw FitnessError("unknown fitness failure", genome);
        }
    }
}

void sort_best_first(std::vector<Individual>& pool)
{
    std::stable_sort(pool.begin(), pool.end(), [](const Individual& a, const Individual& b) {
        if (a.fitness != b.fitness) {
            return a.fitness > b.fitness;
        }
        return a.coding_length < b.coding_length;
    });
}

GenerationStats summarize(const Population& pop, int generation)
{
    GenerationStats s;
    s.generation = generation;
    s.best_fitness = pop.front().fitness;
    s.worst_fitness = pop.back().fitness;
    s.spread = s.best_fitness - s.worst_fitness;
    return s;
}

} // namespace

void EvolutionConfig::validate() const
{
    if (population_size < 2) {
        throw ConfigError("population size must be >= 2");
    }
    if (generations < 1) {
        throw ConfigError("generations must be >= 1");
    }
    if (head_len < 1) {
        throw ConfigError("head size must be >= 1");
    }
    if (threads < 1) {
        throw ConfigError("threads must be >= 1");
    }
    for (double rate : {mutation_rate, one_point_prob, two_point_prob, inversion_prob, swap_prob}) {
        if (!(rate >= 0.0 && rate <= 1.0)) {
            throw ConfigError("operator rates must lie in [0, 1]");
        }
    }
}

Population initial_population(const EvolutionConfig& cfg, const FitnessProvider& problem, Rng& rng)
{
    cfg.validate();
    const auto& pset = problem.primitives();
    Population pop;
    pop.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
        pop.push_back({problem.canonicalize(random_gene(pset, cfg.head_len, rng)), 0.0, 0});
    }
    evaluate(pop, 0, cfg, problem);
    sort_best_first(pop);
    return pop;
}

Population evolve_generation(const Population& survivors, const EvolutionConfig& cfg,
                             const FitnessProvider& problem, Rng& rng, GenerationStats& stats)
{
    const auto& pset = problem.primitives();
    const std::size_t m = survivors.size();
    if (m < 2) {
        throw UsageError("population must hold at least two individuals");
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = m - 1; i > 0; --i) {
        std::swap(order[i], order[rng.index(i + 1)]);
    }

    Population pool = survivors;
    pool.reserve(2 * m);
    for (std::size_t k = 0; pool.size() < 2 * m; k += 2) {
        Gene a = survivors[order[k % m]].gene;
        Gene b = survivors[order[(k + 1) % m]].gene;
        if (rng.bernoulli(cfg.one_point_prob)) {
            std::tie(a, b) = one_point_recombine(a, b, rng);
        }
        if (rng.bernoulli(cfg.two_point_prob)) {
            std::tie(a, b) = two_point_recombine(a, b, rng);
        }
        for (Gene* child : {&a, &b}) {
            *child = mutate(*child, pset, cfg.mutation_rate, rng);
            if (rng.bernoulli(cfg.inversion_prob)) {
                *child = invert_head(*child);
            }
            if (rng.bernoulli(cfg.swap_prob)) {
                *child = swap_symbols(*child, pset, rng);
            }
        }
        pool.push_back({problem.canonicalize(a), 0.0, 0});
        if (pool.size() < 2 * m) {
            pool.push_back({problem.canonicalize(b), 0.0, 0});
        }
    }

    evaluate(pool, m, cfg, problem);
    sort_best_first(pool);
    pool.resize(m);
    stats = summarize(pool, stats.generation);
    return pool;
}

EvolutionResult run_evolution(const EvolutionConfig& cfg, const FitnessProvider& problem,
                              const GenerationCallback& on_generation)
{
    cfg.validate();
    Rng rng(cfg.seed);
    EvolutionResult result;
    result.population = initial_population(cfg, problem, rng);
    for (int g = 1; g <= cfg.generations; ++g) {
        GenerationStats stats;
        stats.generation = g;
        result.population = evolve_generation(result.population, cfg, problem, rng, stats);
        result.trace.push_back(stats);
        if (on_generation) {
            on_generation(stats, result.population);
        }
        if (cfg.early_stop_fitness && stats.best_fitness >= *cfg.early_stop_fitness) {
            result.early_stopped = true;
            break;
        }
    }
    return result;
}

} // namespace qgep::gep
