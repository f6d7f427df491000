#pragma once

#include <utility>

#include "gmatch/graph.hpp"
#include "gmatch/rng.hpp"

namespace gmatch {

struct ModelParams {
    int n = 0;
    double p = 0.0;     // base edge probability
    double gamma = 1.0; // subsample probability

    double q() const { return p * gamma * gamma; } // intersection probability
    void validate() const;
};

// Structured sample: base B ~ G(n,p); g0 keeps each B-edge w.p. gamma; g1 is
// an independent subsample relabeled by the hidden permutation. Marginals of
// g0 and g1 are G(n, p*gamma).
struct CorrelatedInstance {
    Graph base;
    Graph g0;
    Graph g1;
    Permutation truth; // pi*: base/g0 labels -> g1 labels
    ModelParams params;
    RngSeed seed;
};

Graph sample_er(int n, double p, const RngSeed& seed);

CorrelatedInstance sample_structured(const ModelParams& params, const RngSeed& seed);

std::pair<Graph, Graph> sample_null(const ModelParams& params, const RngSeed& seed);

// Base edges surviving in both g0 and the truth-pullback of g1; distributed
// as G(n, p*gamma^2).
Graph intersection_graph(const CorrelatedInstance& inst);

Permutation random_permutation(int n, const RngSeed& seed);

} // namespace gmatch
