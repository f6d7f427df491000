#include "gmatch/subiso.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmatch {

namespace {

// Connected-prefix search order: next vertex maximizes back-edges into the
// ordered prefix, then degree, then lowest index. Near-tree patterns get
// their cycles closed as early as possible.
struct Plan {
    std::vector<int> order;              // position -> pattern vertex
    std::vector<std::vector<int>> back;  // position -> positions of earlier neighbors
    std::vector<int> pdeg;               // position -> pattern degree
};

Plan make_plan(const Graph& pattern) {
    int pv = pattern.vertex_count();
    Plan plan;
    std::vector<char> placed(pv, 0);
    std::vector<int> backcount(pv, 0);
    std::vector<int> pos_of(pv, -1);
    for (int step = 0; step < pv; ++step) {
        int best = -1;
        for (int v = 0; v < pv; ++v) {
            if (placed[v]) continue;
            if (best < 0 || backcount[v] > backcount[best] ||
                (backcount[v] == backcount[best] && pattern.degree(v) > pattern.degree(best)))
                best = v;
        }
        placed[best] = 1;
        pos_of[best] = step;
        plan.order.push_back(best);
        plan.pdeg.push_back(pattern.degree(best));
        std::vector<int> back;
        for (int w : pattern.neighbors(best))
            if (placed[w] && w != best) back.push_back(pos_of[w]);
        std::sort(back.begin(), back.end());
        plan.back.push_back(std::move(back));
        for (int w : pattern.neighbors(best))
            if (!placed[w]) ++backcount[w];
    }
    return plan;
}

struct Matcher {
    const Graph& pattern;
    const Graph& host;
    Plan plan;
    SearchBudget budget;
    SearchStats stats;

    std::vector<int> map;    // position -> host vertex
    std::vector<char> used;  // host vertex used

    // counting mode
    std::uint64_t count = 0;

    // enumeration mode
    bool enumerating = false;
    std::vector<Permutation> auts;                // pattern automorphisms
    std::vector<int> phi;                         // pattern vertex -> host vertex
    std::vector<Occurrence>* out = nullptr;

    Matcher(const Graph& p, const Graph& h, const SearchBudget& b)
        : pattern(p), host(h), plan(make_plan(p)), budget(b) {
        map.assign(p.vertex_count(), -1);
        used.assign(h.vertex_count(), 0);
    }

    bool adjacent(int hu, int hv) const { return host.has_edge(hu, hv); }

    void leaf() {
        if (!enumerating) {
            ++count;
            return;
        }
        int pv = pattern.vertex_count();
        for (int i = 0; i < pv; ++i) phi[plan.order[i]] = map[i];
        // Emit only the lexicographically minimal embedding in its Aut-orbit.
        for (const auto& sigma : auts) {
            int cmp = 0;
            for (int v = 0; v < pv; ++v) {
                int a = phi[v], b = phi[sigma(v)];
                if (a != b) { cmp = (a < b) ? -1 : 1; break; }
            }
            if (cmp > 0) return; // a strictly smaller representative exists
        }
        Occurrence occ;
        occ.vertices = phi;
        std::sort(occ.vertices.begin(), occ.vertices.end());
        occ.edges.reserve(pattern.edge_count());
        for (auto [u, v] : pattern.edges()) {
            int a = phi[u], b = phi[v];
            if (a > b) std::swap(a, b);
            occ.edges.emplace_back(a, b);
        }
        std::sort(occ.edges.begin(), occ.edges.end());
        out->push_back(std::move(occ));
        if (out->size() >= budget.max_occurrences) stats.exhausted = true;
    }

    bool feasible(int k, int c) const {
        if (used[c]) return false;
        if (host.degree(c) < plan.pdeg[k]) return false;
        for (int b : plan.back[k])
            if (!adjacent(map[b], c)) return false;
        return true;
    }

    void dfs(int k) {
        if (stats.exhausted) return;
        if (k == pattern.vertex_count()) {
            leaf();
            return;
        }
        const auto& back = plan.back[k];
        if (back.empty()) {
            for (int c = 0; c < host.vertex_count(); ++c) {
                if (++stats.nodes > budget.max_nodes) { stats.exhausted = true; return; }
                if (!feasible(k, c)) continue;
                map[k] = c; used[c] = 1;
                dfs(k + 1);
                used[c] = 0; map[k] = -1;
                if (stats.exhausted) return;
            }
        } else {
            // Iterate neighbors of the mapped back-neighbor with smallest host degree.
            int pivot = back[0];
            for (int b : back)
                if (host.degree(map[b]) < host.degree(map[pivot])) pivot = b;
            for (int c : host.neighbors(map[pivot])) {
                if (++stats.nodes > budget.max_nodes) { stats.exhausted = true; return; }
                if (!feasible(k, c)) continue;
                map[k] = c; used[c] = 1;
                dfs(k + 1);
                used[c] = 0; map[k] = -1;
                if (stats.exhausted) return;
            }
        }
    }
};

} // namespace

CountResult count_injective_homs(const Graph& pattern, const Graph& host, const SearchBudget& budget) {
    CountResult res;
    if (pattern.vertex_count() == 0) { res.count = 1; return res; }
    if (pattern.vertex_count() > host.vertex_count()) return res;
    Matcher m(pattern, host, budget);
    m.dfs(0);
    res.count = m.count;
    res.stats = m.stats;
    return res;
}

CountResult occ(const Graph& pattern, const Graph& host, const SearchBudget& budget) {
    CountResult homs = count_injective_homs(pattern, host, budget);
    if (homs.exhausted()) return homs; // partial count, flagged
    std::uint64_t aut = canonical_form(pattern).automorphism_count;
    if (homs.count % aut != 0)
        throw std::logic_error("occ: injective hom count not divisible by automorphism count");
    homs.count /= aut;
    return homs;
}

EnumerateResult enumerate_occurrences(const Graph& pattern, const Graph& host, const SearchBudget& budget) {
    EnumerateResult res;
    if (pattern.vertex_count() == 0 || pattern.vertex_count() > host.vertex_count()) return res;
    Matcher m(pattern, host, budget);
    m.enumerating = true;
    m.auts = automorphism_group(pattern);
    m.phi.assign(pattern.vertex_count(), -1);
    m.out = &res.occurrences;
    m.dfs(0);
    res.stats = m.stats;
    std::sort(res.occurrences.begin(), res.occurrences.end(), [](const Occurrence& a, const Occurrence& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.edges < b.edges;
    });
    return res;
}

std::vector<std::vector<int>> occurrence_index(int host_n, const std::vector<Occurrence>& occs) {
    std::vector<std::vector<int>> index(host_n);
    for (int id = 0; id < static_cast<int>(occs.size()); ++id)
        for (int v : occs[id].vertices) index[v].push_back(id);
    return index; // per-vertex lists are sorted since ids ascend
}

double falling_factorial(int n, int k) {
    double f = 1.0;
    for (int i = 0; i < k; ++i) f *= static_cast<double>(n - i);
    return f;
}

double expected_occ(int n, double r, const Graph& h) {
    int v = h.vertex_count();
    int e = h.edge_count();
    if (n < v) return 0.0;
    double aut = static_cast<double>(canonical_form(h).automorphism_count);
    double val = falling_factorial(n, v) / aut;
    for (int i = 0; i < e; ++i) val *= r;
    return val;
}

} // namespace gmatch
