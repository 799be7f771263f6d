#pragma once

#include <vector>

#include "qgep/gep/gene.hpp"

namespace qgep::gep {

/// Expression tree decoded from Karva (breadth-first) notation.
///
/// Node k corresponds to gene position k. Breadth-first order places the
/// children of a node at consecutive positions, so each node stores the index
/// of its first child and its arity.
struct ExpressionTree {
    struct Node {
        SymbolId symbol = 0;
        int first_child = -1;
        int arity = 0;
    };

    std::vector<Node> nodes;
    int coding_length = 0;

    static constexpr int root = 0;

    const Node& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
    int child(int i, int k) const { return node(i).first_child + k; }
};

/// Length of the prefix consumed by breadth-first decoding.
int coding_length(const Gene& gene, const PrimitiveSet& pset);

ExpressionTree decode(const Gene& gene, const PrimitiveSet& pset);

} // namespace qgep::gep
