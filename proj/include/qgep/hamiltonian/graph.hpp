#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgep/rng.hpp"

namespace qgep::hamiltonian {

/// Simple undirected graph; edges stored with i < j, no duplicates.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Throws std::invalid_argument for loops, duplicates or bad indices.
    void add_edge(int i, int j);
    bool connected() const;

    /// Number of edges whose endpoints take different bits in `assignment`.
    int cut_value(std::uint64_t assignment) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// First line "n <count>", then one "i j" per line; '#' starts a comment.
Graph load_graph(const std::string& path);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

Graph cycle_graph(int n);
Graph complete_graph(int n);
/// G(n, p) resampled until connected.
Graph random_connected_graph(int n, double edge_prob, Rng& rng);

} // namespace qgep::hamiltonian
