#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmatch/graph.hpp"
#include "gmatch/rational.hpp"

namespace gmatch {

// Verdict of the strict-balance check. Checked over vertex-induced subgraphs
// only: an edge-subgraph's density never exceeds the induced density on its
// vertex support. profile[s] is the maximum induced edge count over subsets
// of size s (profile[n] = m), filled exhaustively for n <= 22. slack is the
// minimum density gap over proper subsets of size 1..n-1.
struct BalanceVerdict {
    enum class Status { Balanced, Unbalanced, Unknown };
    Status status = Status::Unknown;
    std::optional<std::vector<int>> witness; // a proper subset with density >= m/n
    std::vector<int> profile;                // size n+1; empty in budgeted mode
    std::optional<Rational> slack;

    bool strictly_balanced() const { return status == Status::Balanced; }
    bool unknown() const { return status == Status::Unknown; }
};

struct BalanceOptions {
    int exhaustive_max_n = 22;
    std::uint64_t node_budget = 50'000'000; // branch-and-bound nodes for larger graphs
};

// Requires n >= 2 in exhaustive mode. For n > exhaustive_max_n a budgeted
// branch-and-bound is used; it may return Unknown (never a wrong verdict).
BalanceVerdict is_strictly_balanced(const Graph& g, const BalanceOptions& opts = {});

// Exhaustive per-size maximum induced edge counts (n <= 22): result[s] is the
// max number of edges induced by any s-subset. Used for quantitative balance.
std::vector<int> max_edges_profile(const Graph& g);

} // namespace gmatch
