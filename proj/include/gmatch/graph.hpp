#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gmatch/rational.hpp"

namespace gmatch {

using Edge = std::pair<int, int>; // stored with first < second

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image); // validates bijection on 0..n-1
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return image_ == o.image_; }

private:
    std::vector<int> image_;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are normalized
// (u < v, sorted); adjacency lists are sorted. For hosts up to a few thousand
// vertices a bit-row adjacency matrix is kept for O(1) edge probes and fast
// neighborhood intersections.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges); // validates; throws std::invalid_argument

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }

    bool has_edge(int u, int v) const;

    bool has_bit_rows() const { return words_ > 0; }
    int row_words() const { return words_; }
    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
    int words_ = 0;
};

Graph make_graph(int n, const std::vector<Edge>& edges);

Rational density(const Graph& g); // exact m/n; throws on n == 0

Graph induced_subgraph(const Graph& g, const std::vector<int>& s); // order-preserving relabel

bool is_connected(const Graph& g); // n >= 1

Graph apply_permutation(const Graph& g, const Permutation& p); // edge (u,v) in g iff (p(u),p(v)) in result

// Symmetric difference |E(g0) xor E(pi-pullback of g1)|: pair (u,v) is
// mismatched iff exactly one of (u,v) in g0, (pi(u),pi(v)) in g1 holds.
std::int64_t mismatched_edges(const Graph& g0, const Graph& g1, const Permutation& pi);

// Edge-list text format: "n m" then m lines "u v" (u < v, lexicographically
// sorted); '#' lines are comments. Serialization is byte-deterministic.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

// Permutation file: n lines "i p(i)".
std::string write_permutation(const Permutation& p);
Permutation read_permutation(std::istream& in);
Permutation read_permutation_file(const std::string& path);
void write_permutation_file(const Permutation& p, const std::string& path);

// Small fixed graphs used across tests and tools.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

} // namespace gmatch
