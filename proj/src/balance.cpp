#include "gmatch/balance.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gmatch {

namespace {

// Subset-DP edge counts: E[S] = E[S\lowbit] + |N(lowbit) & (S\lowbit)|.
// One pass over all 2^n subsets, n <= 22.
struct SubsetScan {
    int n;
    std::vector<std::uint32_t> adj;  // adjacency masks
    std::vector<std::uint16_t> cnt;  // edge count per subset

    explicit SubsetScan(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        cnt.assign(std::size_t(1) << n, 0);
        for (std::uint32_t s = 1; s < cnt.size(); ++s) {
            int low = std::countr_zero(s);
            std::uint32_t rest = s & (s - 1);
            cnt[s] = static_cast<std::uint16_t>(cnt[rest] + std::popcount(adj[low] & rest));
        }
    }
};

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

BalanceVerdict exhaustive_verdict(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    SubsetScan scan(g);

    BalanceVerdict v;
    v.profile.assign(n + 1, 0);
    std::vector<std::uint32_t> best_mask(n + 1, 0);
    for (std::uint32_t s = 1; s < scan.cnt.size(); ++s) {
        int size = std::popcount(s);
        if (scan.cnt[s] > v.profile[size]) {
            v.profile[size] = scan.cnt[s];
            best_mask[size] = s;
        }
    }

    // Strictly balanced iff profile[s]/s < m/n for every proper 1 <= s < n.
    bool balanced = true;
    std::optional<Rational> slack;
    for (int s = 1; s < n; ++s) {
        // density gap m/n - profile[s]/s, exact
        Rational gap = Rational(m, n) - Rational(v.profile[s], s);
        if (!slack || gap < *slack) slack = gap;
        if (static_cast<long long>(v.profile[s]) * n >= static_cast<long long>(m) * s) {
            balanced = false;
            if (!v.witness) v.witness = mask_to_vertices(best_mask[s]);
        }
    }
    v.status = balanced ? BalanceVerdict::Status::Balanced : BalanceVerdict::Status::Unbalanced;
    v.slack = slack;
    return v;
}

// Budgeted branch-and-bound for n > 22: search for a proper induced subset
// with density >= m/n. Vertices are considered in descending degree order;
// the bound adds the most optimistic completion (each further vertex brings
// min(remaining degree, vertices already present) edges).
struct BnB {
    const Graph& g;
    int n, m;
    std::uint64_t budget, nodes = 0;
    std::vector<int> order;
    std::optional<std::vector<int>> found;
    bool exhausted = false;

    BnB(const Graph& graph, std::uint64_t budget_) : g(graph), n(graph.vertex_count()), m(graph.edge_count()), budget(budget_) {
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }

    // chosen: current subset; edges: induced edge count; idx: next order position
    void rec(std::vector<int>& chosen, int edges, int idx) {
        if (found || exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        int s = static_cast<int>(chosen.size());
        if (s >= 1 && s < n && static_cast<long long>(edges) * n >= static_cast<long long>(m) * s) {
            found = chosen;
            return;
        }
        if (idx >= n) return;
        // Optimistic bound: can any extension reach density m/n on a proper subset?
        long long e = edges;
        long long sz = s;
        bool can = false;
        for (int j = idx; j < n && sz + 1 < n; ++j) {
            int v = order[j];
            e += std::min<long long>(g.degree(v), sz);
            sz += 1;
            if (e * n >= m * sz) { can = true; break; }
        }
        if (!can) return;

        int v = order[idx];
        int gained = 0;
        for (int w : g.neighbors(v))
            if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) ++gained;
        chosen.push_back(v);
        rec(chosen, edges + gained, idx + 1);
        chosen.pop_back();
        rec(chosen, edges, idx + 1);
    }
};

} // namespace

std::vector<int> max_edges_profile(const Graph& g) {
    if (g.vertex_count() > 22) throw std::invalid_argument("max_edges_profile: n > 22");
    SubsetScan scan(g);
    std::vector<int> profile(g.vertex_count() + 1, 0);
    for (std::uint32_t s = 1; s < scan.cnt.size(); ++s) {
        int size = std::popcount(s);
        profile[size] = std::max<int>(profile[size], scan.cnt[s]);
    }
    return profile;
}

BalanceVerdict is_strictly_balanced(const Graph& g, const BalanceOptions& opts) {
    if (g.vertex_count() < 2) throw std::invalid_argument("is_strictly_balanced: requires n >= 2");
    if (g.vertex_count() <= opts.exhaustive_max_n) return exhaustive_verdict(g);

    BnB bnb(g, opts.node_budget);
    std::vector<int> chosen;
    bnb.rec(chosen, 0, 0);
    BalanceVerdict v;
    if (bnb.found) {
        v.status = BalanceVerdict::Status::Unbalanced;
        std::sort(bnb.found->begin(), bnb.found->end());
        v.witness = *bnb.found;
    } else if (bnb.exhausted) {
        v.status = BalanceVerdict::Status::Unknown;
    } else {
        v.status = BalanceVerdict::Status::Balanced;
    }
    return v;
}

} // namespace gmatch
