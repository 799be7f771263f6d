#include "qgep/hamiltonian/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgep::hamiltonian {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n)
{
    for (auto [i, j] : edges) {
        add_edge(i, j);
    }
}

void Graph::add_edge(int i, int j)
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") outside a graph of " + std::to_string(n_) + " vertices");
    }
    if (i == j) {
        throw std::invalid_argument("self loop on vertex " + std::to_string(i));
    }
    const std::pair e{std::min(i, j), std::max(i, j)};
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(e.first) + ", " +
                                    std::to_string(e.second) + ")");
    }
    edges_.push_back(e);
}

bool Graph::connected() const
{
    if (n_ <= 1) {
        return true;
    }
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        }
        return v;
    };
    int components = n_;
    for (auto [i, j] : edges_) {
        const int a = find(i);
        const int b = find(j);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

int Graph::cut_value(std::uint64_t assignment) const
{
    int cut = 0;
    for (auto [i, j] : edges_) {
        cut += static_cast<int>(((assignment >> i) ^ (assignment >> j)) & 1U);
    }
    return cut;
}

Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Graph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) {
            continue;
        }
        const auto fail = [&](const std::string& why) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + why);
        };
        if (!have_header) {
            int n = 0;
            if (first != "n" || !(fields >> n) || n < 1) {
                fail("expected header 'n <count>'");
            }
            g = Graph(n);
            have_header = true;
            continue;
        }
        int i = 0;
        int j = 0;
        std::string extra;
        try {
            std::size_t used = 0;
            i = std::stoi(first, &used);
            if (used != first.size()) {
                fail("malformed vertex '" + first + "'");
            }
        } catch (const std::logic_error&) {
            fail("malformed vertex '" + first + "'");
        }
        if (!(fields >> j) || (fields >> extra)) {
            fail("expected 'i j'");
        }
        try {
            g.add_edge(i, j);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (!have_header) {
        throw std::invalid_argument("graph has no 'n <count>' header");
    }
    return g;
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open graph file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g)
{
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [i, j] : g.edges()) {
        out += std::to_string(i) + " " + std::to_string(j) + "\n";
    }
    return out;
}

Graph cycle_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

Graph random_connected_graph(int n, double edge_prob, Rng& rng)
{
    while (true) {
        Graph g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.bernoulli(edge_prob)) {
                    g.add_edge(i, j);
                }
            }
        }
        if (g.connected()) {
            return g;
        }
    }
}

} // namespace qgep::hamiltonian
