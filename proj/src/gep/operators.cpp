#include "qgep/gep/operators.hpp"

#include <algorithm>

namespace qgep::gep {

namespace {

void require_same_shape(const Gene& a, const Gene& b)
{
    if (a.size() != b.size() || a.head_len != b.head_len) {
        throw UsageError("recombination needs parents of equal shape");
    }
}

} // namespace

Gene mutate(const Gene& gene, const PrimitiveSet& pset, double rate, Rng& rng)
{
    Gene out = gene;
    if (rate <= 0.0) {
        return out;
    }
    const auto& terminals = pset.terminals();
    for (std::size_t i = 0; i < out.symbols.size(); ++i) {
        if (!rng.bernoulli(rate)) {
            continue;
        }
        if (i < static_cast<std::size_t>(out.head_len)) {
            out.symbols[i] = static_cast<SymbolId>(rng.index(pset.size()));
        } else {
            out.symbols[i] = terminals[rng.index(terminals.size())];
        }
    }
    return out;
}

std::pair<Gene, Gene> one_point_recombine_at(const Gene& a, const Gene& b, std::size_t point)
{
    require_same_shape(a, b);
    if (point > a.size()) {
        throw UsageError("recombination point past gene end");
    }
    Gene x = a;
    Gene y = b;
    std::swap_ranges(x.symbols.begin() + static_cast<std::ptrdiff_t>(point), x.symbols.end(),
                     y.symbols.begin() + static_cast<std::ptrdiff_t>(point));
    return {std::move(x), std::move(y)};
}

std::pair<Gene, Gene> one_point_recombine(const Gene& a, const Gene& b, Rng& rng)
{
    require_same_shape(a, b);
    return one_point_recombine_at(a, b, rng.index(a.size() + 1));
}

std::pair<Gene, Gene> two_point_recombine_at(const Gene& a, const Gene& b, std::size_t first,
                                             std::size_t last)
{
    require_same_shape(a, b);
    if (first > last || last > a.size()) {
        throw UsageError("recombination points out of order or past gene end");
    }
    Gene x = a;
    Gene y = b;
    std::swap_ranges(x.symbols.begin() + static_cast<std::ptrdiff_t>(first),
                     x.symbols.begin() + static_cast<std::ptrdiff_t>(last),
                     y.symbols.begin() + static_cast<std::ptrdiff_t>(first));
    return {std::move(x), std::move(y)};
}

std::pair<Gene, Gene> two_point_recombine(const Gene& a, const Gene& b, Rng& rng)
{
    require_same_shape(a, b);
    std::size_t p = rng.index(a.size() + 1);
    std::size_t q = rng.index(a.size() + 1);
    if (p > q) {
        std::swap(p, q);
    }
    return two_point_recombine_at(a, b, p, q);
}

Gene invert_head(const Gene& gene)
{
    Gene out = gene;
    std::reverse(out.symbols.begin(), out.symbols.begin() + out.head_len);
    return out;
}

Gene swap_symbols_at(const Gene& gene, const PrimitiveSet& pset, std::size_t i, std::size_t j)
{
    if (i >= gene.size() || j >= gene.size()) {
        throw UsageError("swap position past gene end");
    }
    const auto head = static_cast<std::size_t>(gene.head_len);
    const bool i_head = i < head;
    const bool j_head = j < head;
    if (i_head != j_head) {
        const SymbolId head_symbol = i_head ? gene.symbols[i] : gene.symbols[j];
        if (!pset.is_terminal(head_symbol)) {
            throw UsageError("swap would move a function into the tail");
        }
    }
    Gene out = gene;
    std::swap(out.symbols[i], out.symbols[j]);
    return out;
}

Gene swap_symbols(const Gene& gene, const PrimitiveSet& pset, Rng& rng)
{
    const std::size_t n = gene.size();
    const auto head = static_cast<std::size_t>(gene.head_len);
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n);
    const bool crosses = (i < head) != (j < head);
    if (crosses) {
        const SymbolId head_symbol = i < head ? gene.symbols[i] : gene.symbols[j];
        if (!pset.is_terminal(head_symbol)) {
            j = i < head ? rng.index(head) : head + rng.index(n - head);
        }
    }
    return swap_symbols_at(gene, pset, i, j);
}

} // namespace qgep::gep
