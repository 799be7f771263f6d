#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qgep/gep/primitive_set.hpp"
#include "qgep/rng.hpp"

namespace qgep::gep {

/// Linear GEP genome: a head of any symbols followed by a terminal-only tail.
struct Gene {
    std::vector<SymbolId> symbols;
    int head_len = 0;

    std::size_t size() const { return symbols.size(); }
    int tail_len() const { return static_cast<int>(symbols.size()) - head_len; }

    friend bool operator==(const Gene&, const Gene&) = default;
};

/// True iff the gene has length h + t(h) and a terminal-only tail.
bool is_valid(const Gene& gene, const PrimitiveSet& pset);

/// Head positions uniform over all symbols, tail positions uniform over terminals.
Gene random_gene(const PrimitiveSet& pset, int head_len, Rng& rng);

/// Symbol names joined by `separator`. Single-character alphabets read
/// naturally with an empty separator ("Q+*-abcd").
std::string to_string(const Gene& gene, const PrimitiveSet& pset, std::string_view separator = " ");

/// Parses a genome. Whitespace-separated tokens are symbol names; a string
/// without whitespace is read one character per symbol. When head_len is
/// negative it is inferred from the length (length = h + t(h)).
Gene parse_gene(std::string_view text, const PrimitiveSet& pset, int head_len = -1);

} // namespace qgep::gep
