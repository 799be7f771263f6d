#include "qgep/gep/gene.hpp"

#include <cctype>
#include <sstream>

namespace qgep::gep {

bool is_valid(const Gene& gene, const PrimitiveSet& pset)
{
    if (gene.head_len < 1) {
        return false;
    }
    const auto expected = static_cast<std::size_t>(gene.head_len + pset.tail_length(gene.head_len));
    if (gene.symbols.size() != expected) {
        return false;
    }
    for (std::size_t i = 0; i < gene.symbols.size(); ++i) {
        const SymbolId s = gene.symbols[i];
        if (s < 0 || static_cast<std::size_t>(s) >= pset.size()) {
            return false;
        }
        if (i >= static_cast<std::size_t>(gene.head_len) && !pset.is_terminal(s)) {
            return false;
        }
    }
    return true;
}

Gene random_gene(const PrimitiveSet& pset, int head_len, Rng& rng)
{
    pset.validate();
    if (head_len < 1) {
        throw ConfigError("head length must be >= 1");
    }
    const auto& terminals = pset.terminals();
    Gene gene;
    gene.head_len = head_len;
    const int length = head_len + pset.tail_length(head_len);
    gene.symbols.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < head_len; ++i) {
        gene.symbols.push_back(static_cast<SymbolId>(rng.index(pset.size())));
    }
    for (int i = head_len; i < length; ++i) {
        gene.symbols.push_back(terminals[rng.index(terminals.size())]);
    }
    return gene;
}

std::string to_string(const Gene& gene, const PrimitiveSet& pset, std::string_view separator)
{
    std::string out;
    for (std::size_t i = 0; i < gene.symbols.size(); ++i) {
        if (i > 0) {
            out += separator;
        }
        out += pset.symbol(gene.symbols[i]).name;
    }
    return out;
}

Gene parse_gene(std::string_view text, const PrimitiveSet& pset, int head_len)
{
    std::vector<std::string> tokens;
    const bool spaced = text.find_first_of(" \t\n") != std::string_view::npos;
    if (spaced) {
        std::istringstream in{std::string(text)};
        std::string token;
        while (in >> token) {
            tokens.push_back(token);
        }
    } else {
        for (char c : text) {
            tokens.emplace_back(1, c);
        }
    }

    Gene gene;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto id = pset.find(tokens[i]);
        if (!id) {
            throw ConfigError("unknown symbol '" + tokens[i] + "' at position " + std::to_string(i));
        }
        gene.symbols.push_back(*id);
    }

    if (head_len < 0) {
        // length = h + h(a - 1) + 1 = h * a + 1
        const int n = static_cast<int>(gene.symbols.size());
        if (n < 2 || (n - 1) % pset.max_arity() != 0) {
            throw ConfigError("genome length " + std::to_string(n) + " does not fit any head length");
        }
        head_len = (n - 1) / pset.max_arity();
    }
    gene.head_len = head_len;
    if (!is_valid(gene, pset)) {
        throw ConfigError("genome '" + std::string(text) + "' violates the head/tail structure");
    }
    return gene;
}

} // namespace qgep::gep
