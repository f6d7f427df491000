#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

// Canonical labeling via iterative degree refinement plus backtracking over
// refined cells. Two graphs are isomorphic iff their canonical forms compare
// equal. automorphism_count is exact (|Aut(g)|).
struct CanonicalForm {
    int n = 0;
    std::vector<Edge> edges; // edge list under the canonical relabeling
    std::uint64_t automorphism_count = 1;

    std::string key() const; // compact string usable as a map key

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.edges == b.edges;
    }
    friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
};

struct CanonicalOptions {
    int max_n = 64;
    std::uint64_t node_budget = 20'000'000; // search nodes before giving up
};

CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& opts = {});

// Full automorphism group as permutations (identity included). Intended for
// pattern-sized graphs where |Aut| is small.
std::vector<Permutation> automorphism_group(const Graph& g, const CanonicalOptions& opts = {});

// Canonical relabeling: permutation L with L(v) = canonical position of v.
Permutation canonical_labeling(const Graph& g, const CanonicalOptions& opts = {});

bool are_isomorphic(const Graph& a, const Graph& b, const CanonicalOptions& opts = {});

} // namespace gmatch
