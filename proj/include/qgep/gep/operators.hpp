#pragma once

#include <utility>

#include "qgep/gep/gene.hpp"

namespace qgep::gep {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Genetic operators. Every operator preserves gene length, head length and
// the terminal-only tail, so outputs always decode.

Gene mutate(const Gene& gene, const PrimitiveSet& pset, double rate, Rng& rng);

std::pair<Gene, Gene> one_point_recombine(const Gene& a, const Gene& b, Rng& rng);
/// Exchanges the suffixes starting at `point` (0 <= point <= length).
std::pair<Gene, Gene> one_point_recombine_at(const Gene& a, const Gene& b, std::size_t point);

std::pair<Gene, Gene> two_point_recombine(const Gene& a, const Gene& b, Rng& rng);
/// Exchanges the segment [first, last).
std::pair<Gene, Gene> two_point_recombine_at(const Gene& a, const Gene& b, std::size_t first,
                                             std::size_t last);

Gene invert_head(const Gene& gene);

/// Exchanges two positions. Pairs that would move a function into the tail
/// are redrawn inside the first position's region.
Gene swap_symbols(const Gene& gene, const PrimitiveSet& pset, Rng& rng);
/// Throws UsageError when the exchange would break the tail.
Gene swap_symbols_at(const Gene& gene, const PrimitiveSet& pset, std::size_t i, std::size_t j);

} // namespace qgep::gep
