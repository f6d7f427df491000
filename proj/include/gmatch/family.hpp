#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmatch/balance.hpp"
#include "gmatch/graph.hpp"
#include "gmatch/rational.hpp"
#include "gmatch/rng.hpp"
#include "gmatch/subiso.hpp"

namespace gmatch {

// Test-family specification. d_prime = d + lambda is the target average
// degree; e = d_prime * v / 2 must be an integer.
struct FamilySpec {
    enum class Kind { Regular, RegularPlusMatching, Subdivided };

    int v = 0;
    Kind kind = Kind::Regular;
    int d = 3;                 // regular part (Regular, RegularPlusMatching); base degree 3 for Subdivided
    Rational lambda{0, 1};     // fraction of degree-(d+1) vertices / degree-3 vertices
    int target_size = 1;
    Rational alpha{12, 25};    // Prop-4.2-style intersection parameter for Regular kind
    SearchBudget budget;

    // Admission policy. Defaults are the fully certified family; experiments
    // at desk scale may relax the automorphism requirement (e.g. no
    // asymmetric 3-regular graph on fewer than 12 vertices exists) or switch
    // the pairwise check to the labeled-intersection reading.
    enum class PairMode { Abstract, Labeled, Off };
    bool require_aut_free = true;
    PairMode pair_mode = PairMode::Abstract;
    std::optional<std::pair<Rational, Rational>> pair_threshold; // (a, b): violating J has |E| >= a|V| - b
    std::uint64_t max_attempts = 0; // 0 = 400 * target_size

    Rational d_prime() const;
    int edge_target() const;  // d_prime * v / 2
    void validate() const;    // integrality + kind constraints
    std::pair<Rational, Rational> default_pair_threshold() const;
    std::vector<std::string> regime_warnings() const; // out-of-proven-regime notes
};

struct VerificationReport {
    bool connected = false;
    bool degree_ok = false;
    bool edges_ok = false;
    std::uint64_t automorphism_count = 0;
    BalanceVerdict balance;
    bool quant_checked = false; // per-size profile bound evaluated (v <= 22)
    bool quant_ok = false;
    std::vector<std::string> notes;

    bool pass(const FamilySpec& spec) const;
};

struct PairWitness {
    Graph j;
    std::vector<int> emb1; // j vertex -> h1 vertex
    std::vector<int> emb2; // j vertex -> h2 vertex
    Rational density() const { return Rational(j.edge_count(), j.vertex_count()); }
};

struct PairVerdict {
    enum class Kind { Verified, Violated, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<PairWitness> witness; // present iff Violated
    std::uint64_t nodes = 0;

    bool verified() const { return kind == Kind::Verified; }
    bool violated() const { return kind == Kind::Violated; }
};

// Uniform simple d-regular graph via the pairing model with rejection.
Graph gen_regular(int v, int d, const RngSeed& seed, int retry_cap = 20000);

// d-regular plus a random matching on lambda*v vertices (degree d+1 there).
Graph gen_regular_plus_matching(int v, int d, const Rational& lambda, const RngSeed& seed, int retry_cap = 20000);

// 3-regular base on lambda*v vertices with every edge subdivided into a k- or
// (k+1)-path so that exactly v vertices and (1 + lambda/2) * v edges result.
Graph gen_subdivided(int v, const Rational& lambda, const RngSeed& seed, int retry_cap = 20000);

VerificationReport verify_member(const Graph& h, const FamilySpec& spec);

// Searches for an abstract graph J embeddable in both h1 and h2 with
// |E(J)| >= a * |V(J)| - b (threshold = (a, b)), via simultaneous
// branch-and-bound embeddings. Verified = exhaustive proof of absence.
PairVerdict pairwise_intersection_check(const Graph& h1, const Graph& h2,
                                        std::pair<Rational, Rational> threshold,
                                        const SearchBudget& budget);

// Labeled reading: J ranges over subgraphs of the literal edge intersection
// of h1 and h2 on the shared vertex labels.
PairVerdict labeled_intersection_check(const Graph& h1, const Graph& h2,
                                       std::pair<Rational, Rational> threshold);

struct PairCertificates {
    std::uint64_t checked = 0;
    std::uint64_t verified = 0;
    std::uint64_t violated = 0;
    std::uint64_t unknown = 0;
};

struct TestFamily {
    std::vector<Graph> members; // pairwise non-isomorphic, each passing verify_member
    FamilySpec spec;
    std::vector<VerificationReport> reports;
    PairCertificates pair_certificates;
    bool complete = false;       // reached target_size
    std::uint64_t attempts = 0;
    std::vector<std::string> warnings;
};

TestFamily build_family(const FamilySpec& spec, const RngSeed& seed);

// Family JSON (spec, member edge lists, reports, pair summary).
std::string family_to_json(const TestFamily& fam);
TestFamily family_from_json(const std::string& text);
TestFamily family_from_json_file(const std::string& path);
void family_to_json_file(const TestFamily& fam, const std::string& path);

// Parameter feasibility diagnostics from the recovery lemma condition lists.
struct FeasibilityReport {
    struct Item {
        std::string name;
        double lhs = 0.0, rhs = 0.0;
        bool pass = false;
    };
    std::string regime; // "sparse" or "dense"
    double delta = 0.0, lambda = 0.0, q = 0.0;
    std::vector<Item> items;
    bool all_pass = false;
};

FeasibilityReport family_params_feasible(double n, double p, double gamma, int v, const Rational& d_prime);

} // namespace gmatch
