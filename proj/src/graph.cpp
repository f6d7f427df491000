#include "gmatch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gmatch {

namespace {
constexpr int kBitRowMaxN = 4096;

[[noreturn]] void bad_edge(const char* what, int u, int v) {
    throw std::invalid_argument(std::string(what) + " (" + std::to_string(u) + "," + std::to_string(v) + ")");
}
} // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int x : image_) {
        if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x])
            throw std::invalid_argument("Permutation: image is not a bijection on 0..n-1");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < static_cast<int>(image_.size()); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) bad_edge("Graph: self-loop", u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) bad_edge("Graph: endpoint out of range", u, v);
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) bad_edge("Graph: duplicate edge", edges[i].first, edges[i].second);
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    if (n_ > 0 && n_ <= kBitRowMaxN) {
        words_ = (n_ + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (auto [u, v] : edges_) {
            bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
            bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (words_ > 0) return (row(u)[v / 64] >> (v % 64)) & 1;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Rational density(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("density: undefined for the empty-vertex graph");
    return Rational(g.edge_count(), g.vertex_count());
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> rank(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range " + std::to_string(sorted[i]));
        rank[sorted[i]] = i;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (rank[u] >= 0 && rank[v] >= 0) edges.emplace_back(rank[u], rank[v]);
    return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("is_connected: empty-vertex graph");
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) throw std::invalid_argument("apply_permutation: length mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
    return Graph(g.vertex_count(), std::move(edges));
}

std::int64_t mismatched_edges(const Graph& g0, const Graph& g1, const Permutation& pi) {
    if (g0.vertex_count() != g1.vertex_count() || pi.size() != g0.vertex_count())
        throw std::invalid_argument("mismatched_edges: size mismatch");
    std::int64_t matched = 0;
    for (auto [u, v] : g0.edges())
        if (g1.has_edge(pi(u), pi(v))) ++matched;
    return (g0.edge_count() - matched) + (g1.edge_count() - matched);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_payload = [&](std::string& out) {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string head;
    if (!next_payload(head)) throw std::invalid_argument("edge list: missing header");
    std::istringstream hs(head);
    int n = 0, m = 0;
    if (!(hs >> n >> m)) throw std::invalid_argument("edge list: bad header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::string row;
        if (!next_payload(row)) throw std::invalid_argument("edge list: truncated");
        std::istringstream rs(row);
        int u = 0, v = 0;
        if (!(rs >> u >> v)) throw std::invalid_argument("edge list: bad edge line");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_edge_list(g);
}

std::string write_permutation(const Permutation& p) {
    std::ostringstream out;
    for (int i = 0; i < p.size(); ++i) out << i << ' ' << p(i) << '\n';
    return out.str();
}

Permutation read_permutation(std::istream& in) {
    std::vector<std::pair<int, int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream rs(line);
        int a = 0, b = 0;
        if (!(rs >> a >> b)) throw std::invalid_argument("permutation: bad line");
        rows.emplace_back(a, b);
    }
    std::vector<int> im(rows.size(), -1);
    for (auto [i, v] : rows) {
        if (i < 0 || i >= static_cast<int>(rows.size()) || im[i] != -1)
            throw std::invalid_argument("permutation: bad index " + std::to_string(i));
        im[i] = v;
    }
    return Permutation(std::move(im));
}

Permutation read_permutation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_permutation(in);
}

void write_permutation_file(const Permutation& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_permutation(p);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(e));
}

} // namespace gmatch
