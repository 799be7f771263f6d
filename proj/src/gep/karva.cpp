#include "qgep/gep/karva.hpp"

#include <stdexcept>

namespace qgep::gep {

int coding_length(const Gene& gene, const PrimitiveSet& pset)
{
    int open = 1;
    int length = 0;
    const int n = static_cast<int>(gene.symbols.size());
    while (open > 0) {
        if (length == n) {
            // unreachable for valid genes: the tail always closes the tree
            throw std::logic_error("gene ran out of symbols during decoding");
        }
        open += pset.arity(gene.symbols[static_cast<std::size_t>(length)]) - 1;
        ++length;
    }
    return length;
}

ExpressionTree decode(const Gene& gene, const PrimitiveSet& pset)
{
    ExpressionTree tree;
    tree.coding_length = coding_length(gene, pset);
    tree.nodes.resize(static_cast<std::size_t>(tree.coding_length));
    int next = 1;
    for (int i = 0; i < tree.coding_length; ++i) {
        auto& node = tree.nodes[static_cast<std::size_t>(i)];
        node.symbol = gene.symbols[static_cast<std::size_t>(i)];
        node.arity = pset.arity(node.symbol);
        if (node.arity > 0) {
            node.first_child = next;
            next += node.arity;
        }
    }
    return tree;
}

} // namespace qgep::gep
