#include "gmatch/gen_model.hpp"

#include <stdexcept>

namespace gmatch {

namespace {

constexpr double kGeometricCutoff = 0.01;

// Pair index <-> (u,v) for the fixed enumeration order u < v.
std::pair<int, int> pair_from_index(std::uint64_t idx, int n) {
    // Row u occupies (n-1-u) slots starting at offset(u).
    std::uint64_t off = 0;
    int u = 0;
    for (;; ++u) {
        std::uint64_t row = static_cast<std::uint64_t>(n - 1 - u);
        if (idx < off + row) break;
        off += row;
    }
    int v = static_cast<int>(idx - off) + u + 1;
    return {u, v};
}

} // namespace

void ModelParams::validate() const {
    if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ModelParams: p must be in [0,1]");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("ModelParams: gamma must be in (0,1]");
}

Graph sample_er(int n, double p, const RngSeed& seed) {
    if (n < 0) throw std::invalid_argument("sample_er: negative n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_er: p must be in [0,1]");
    std::vector<Edge> edges;
    if (p > 0.0) {
        RngStream rng = seed.stream();
        std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        if (p < kGeometricCutoff) {
            // Geometric skipping over the linearized pair order.
            std::uint64_t idx = rng.geometric_skip(p);
            while (idx < total) {
                edges.push_back(pair_from_index(idx, n));
                idx += 1 + rng.geometric_skip(p);
            }
        } else {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Permutation random_permutation(int n, const RngSeed& seed) {
    if (n < 1) throw std::invalid_argument("random_permutation: n must be >= 1");
    RngStream rng = seed.stream();
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(im[i], im[j]);
    }
    return Permutation(std::move(im));
}

namespace {

Graph subsample(const Graph& base, double gamma, const RngSeed& seed) {
    RngStream rng = seed.stream();
    std::vector<Edge> kept;
    kept.reserve(base.edge_count());
    for (auto e : base.edges())
        if (rng.bernoulli(gamma)) kept.push_back(e);
    return Graph(base.vertex_count(), std::move(kept));
}

} // namespace

CorrelatedInstance sample_structured(const ModelParams& params, const RngSeed& seed) {
    params.validate();
    CorrelatedInstance inst;
    inst.params = params;
    inst.seed = seed;
    inst.base = sample_er(params.n, params.p, seed.child("base"));
    inst.g0 = subsample(inst.base, params.gamma, seed.child("sub0"));
    Graph g1_tilde = subsample(inst.base, params.gamma, seed.child("sub1"));
    inst.truth = random_permutation(params.n, seed.child("perm"));
    inst.g1 = apply_permutation(g1_tilde, inst.truth);
    return inst;
}

std::pair<Graph, Graph> sample_null(const ModelParams& params, const RngSeed& seed) {
    params.validate();
    double r = params.p * params.gamma;
    return {sample_er(params.n, r, seed.child("null0")), sample_er(params.n, r, seed.child("null1"))};
}

Graph intersection_graph(const CorrelatedInstance& inst) {
    std::vector<Edge> edges;
    for (auto [u, v] : inst.g0.edges()) {
        if (!inst.base.has_edge(u, v)) throw std::invalid_argument("intersection_graph: inconsistent instance (g0 edge outside base)");
        if (inst.g1.has_edge(inst.truth(u), inst.truth(v))) edges.emplace_back(u, v);
    }
    return Graph(inst.params.n, std::move(edges));
}

} // namespace gmatch
