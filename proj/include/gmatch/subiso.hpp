#pragma once

#include <cstdint>
#include <vector>

#include "gmatch/canonical.hpp"
#include "gmatch/graph.hpp"

namespace gmatch {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;        // search-tree nodes (candidate tests)
    std::uint64_t max_occurrences = UINT64_MAX;  // emitted occurrences cap
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

struct CountResult {
    std::uint64_t count = 0; // exact when !exhausted, else partial
    SearchStats stats;
    bool exhausted() const { return stats.exhausted; }
};

// Exact number of injective edge-preserving maps pattern -> host.
CountResult count_injective_homs(const Graph& pattern, const Graph& host, const SearchBudget& budget = {});

// Unlabeled copy count: injective homs / |Aut(pattern)| (always divides).
CountResult occ(const Graph& pattern, const Graph& host, const SearchBudget& budget = {});

// An unlabeled copy of the pattern in the host.
struct Occurrence {
    std::vector<int> vertices; // sorted host vertices
    std::vector<Edge> edges;   // host edges of the copy, normalized + sorted
};

struct EnumerateResult {
    std::vector<Occurrence> occurrences; // deterministic order: (vertices, edges) lexicographic
    SearchStats stats;
    bool exhausted() const { return stats.exhausted; }
};

EnumerateResult enumerate_occurrences(const Graph& pattern, const Graph& host, const SearchBudget& budget = {});

// host vertex -> sorted ids of occurrences containing it.
std::vector<std::vector<int>> occurrence_index(int host_n, const std::vector<Occurrence>& occs);

// Closed-form expectation (n)_v * r^e / aut(h) of occ(h, G(n,r)).
double expected_occ(int n, double r, const Graph& h);

double falling_factorial(int n, int k);

} // namespace gmatch
