#include "gmatch/canonical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmatch {

namespace {

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f; // callers keep n <= 20
}

// Search state shared across the individualization backtrack.
struct Search {
    const Graph& g;
    int n;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool collect_auts;

    bool have_best = false;
    std::vector<Edge> best_edges;
    std::vector<int> best_labeling;          // vertex -> canonical position
    std::uint64_t best_count = 0;            // leaves achieving best certificate
    std::vector<std::vector<int>> best_labelings; // only when collect_auts

    Search(const Graph& graph, std::uint64_t budget_, bool collect)
        : g(graph), n(graph.vertex_count()), budget(budget_), collect_auts(collect) {}

    // Equitable refinement: repeatedly re-color by (color, sorted neighbor
    // color multiset) until the partition stabilizes. Colors are normalized
    // to 0..k-1 in signature order, so they are isomorphism-invariant.
    void refine(std::vector<int>& color) const {
        std::vector<std::vector<int>> sig(n);
        std::vector<int> order(n);
        for (;;) {
            for (int v = 0; v < n; ++v) {
                auto& s = sig[v];
                s.clear();
                s.push_back(color[v]);
                for (int w : g.neighbors(v)) s.push_back(color[w]);
                std::sort(s.begin() + 1, s.end());
            }
            for (int i = 0; i < n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            std::vector<int> next(n);
            int classes = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++classes;
                next[order[i]] = classes;
            }
            bool changed = (next != color);
            color = std::move(next);
            if (!changed) return;
        }
    }

    // Smallest non-singleton color class (by color id); -1 when discrete.
    int target_cell(const std::vector<int>& color, std::vector<int>& cell) const {
        int k = 0;
        for (int v = 0; v < n; ++v) k = std::max(k, color[v] + 1);
        std::vector<int> count(k, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        int best = -1, best_size = n + 1;
        for (int c = 0; c < k; ++c)
            if (count[c] > 1 && count[c] < best_size) { best_size = count[c]; best = c; }
        if (best < 0) return -1;
        cell.clear();
        for (int v = 0; v < n; ++v)
            if (color[v] == best) cell.push_back(v);
        return best;
    }

    void leaf(const std::vector<int>& color) {
        // Discrete coloring: color[v] is the canonical position of v.
        std::vector<Edge> edges;
        edges.reserve(g.edge_count());
        for (auto [u, v] : g.edges()) {
            int a = color[u], b = color[v];
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (!have_best || edges < best_edges) {
            have_best = true;
            best_edges = std::move(edges);
            best_labeling = color;
            best_count = 1;
            if (collect_auts) best_labelings.assign(1, color);
        } else if (edges == best_edges) {
            ++best_count;
            if (collect_auts) best_labelings.push_back(color);
        }
    }

    void run(std::vector<int> color) {
        if (++nodes > budget) throw std::runtime_error("canonical_form: node budget exceeded");
        refine(color);
        std::vector<int> cell;
        if (target_cell(color, cell) < 0) {
            leaf(color);
            return;
        }
        for (int v : cell) {
            std::vector<int> next = color;
            // Individualize v: its class splits into {v} followed by the rest.
            for (int w = 0; w < n; ++w)
                if (next[w] > color[v] || (next[w] == color[v] && w != v)) ++next[w];
            run(std::move(next));
        }
    }
};

void check_size(const Graph& g, const CanonicalOptions& opts) {
    if (g.vertex_count() > opts.max_n)
        throw std::invalid_argument("canonical_form: vertex count exceeds cap (" +
                                    std::to_string(g.vertex_count()) + " > " + std::to_string(opts.max_n) + ")");
}

bool trivial_form(const Graph& g, CanonicalForm& out) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    if (m != 0 && m != static_cast<long long>(n) * (n - 1) / 2) return false;
    // Edgeless or complete: every labeling is canonical, Aut = S_n.
    if (n > 20) throw std::runtime_error("canonical_form: automorphism count overflows for S_n with n > 20");
    out.n = n;
    out.edges.clear();
    if (m != 0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) out.edges.emplace_back(u, v);
    }
    out.automorphism_count = factorial_u64(n);
    return true;
}

} // namespace

std::string CanonicalForm::key() const {
    std::ostringstream out;
    out << n << ':';
    for (auto [u, v] : edges) out << u << '-' << v << ',';
    return out.str();
}

CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& opts) {
    check_size(g, opts);
    CanonicalForm out;
    if (trivial_form(g, out)) return out;
    Search s(g, opts.node_budget, false);
    s.run(std::vector<int>(g.vertex_count(), 0));
    out.n = g.vertex_count();
    out.edges = s.best_edges;
    out.automorphism_count = s.best_count;
    return out;
}

Permutation canonical_labeling(const Graph& g, const CanonicalOptions& opts) {
    check_size(g, opts);
    CanonicalForm trivial;
    if (trivial_form(g, trivial)) return Permutation::identity(g.vertex_count());
    Search s(g, opts.node_budget, false);
    s.run(std::vector<int>(g.vertex_count(), 0));
    return Permutation(s.best_labeling);
}

std::vector<Permutation> automorphism_group(const Graph& g, const CanonicalOptions& opts) {
    check_size(g, opts);
    int n = g.vertex_count();
    CanonicalForm trivial;
    if (trivial_form(g, trivial)) {
        // S_n; enumerate only for tiny n where this is actually wanted.
        if (n > 8) throw std::runtime_error("automorphism_group: group too large to enumerate");
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i;
        std::vector<Permutation> out;
        do out.emplace_back(im);
        while (std::next_permutation(im.begin(), im.end()));
        return out;
    }
    Search s(g, opts.node_budget, true);
    s.run(std::vector<int>(n, 0));
    // Each min-cert labeling L satisfies L = L0 o sigma^-1 for an automorphism
    // sigma; recover sigma = L^-1 o L0.
    const auto& L0 = s.best_labelings.front();
    std::vector<Permutation> out;
    out.reserve(s.best_labelings.size());
    for (const auto& L : s.best_labelings) {
        std::vector<int> linv(n);
        for (int v = 0; v < n; ++v) linv[L[v]] = v;
        std::vector<int> sigma(n);
        for (int v = 0; v < n; ++v) sigma[v] = linv[L0[v]];
        out.emplace_back(std::move(sigma));
    }
    return out;
}

bool are_isomorphic(const Graph& a, const Graph& b, const CanonicalOptions& opts) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, opts) == canonical_form(b, opts);
}

} // namespace gmatch
