#include "gmatch/family.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "gmatch/canonical.hpp"

namespace gmatch {

using nlohmann::json;

// ---------------------------------------------------------------- FamilySpec

Rational FamilySpec::d_prime() const {
    switch (kind) {
        case Kind::Regular: return Rational(d);
        case Kind::RegularPlusMatching: return Rational(d) + lambda;
        case Kind::Subdivided: return Rational(2) + lambda;
    }
    throw std::logic_error("unreachable");
}

int FamilySpec::edge_target() const {
    Rational e = d_prime() * Rational(v) / Rational(2);
    if (e.den != 1) throw std::invalid_argument("FamilySpec: d' * v / 2 is not an integer");
    return static_cast<int>(e.num);
}

void FamilySpec::validate() const {
    if (v < 2) throw std::invalid_argument("FamilySpec: v too small");
    if (target_size < 1) throw std::invalid_argument("FamilySpec: target_size must be >= 1");
    edge_target(); // integrality
    Rational lv = lambda * Rational(v);
    switch (kind) {
        case Kind::Regular:
            if (d < 3 || d >= v) throw std::invalid_argument("FamilySpec: regular kind needs 3 <= d < v");
            if ((static_cast<long long>(d) * v) % 2 != 0) throw std::invalid_argument("FamilySpec: d*v must be even");
            break;
        case Kind::RegularPlusMatching: {
            if (d < 3 || d + 1 >= v) throw std::invalid_argument("FamilySpec: plus-matching kind needs 3 <= d, d+1 < v");
            if (lv.den != 1 || lv.num < 0 || lv.num % 2 != 0)
                throw std::invalid_argument("FamilySpec: lambda*v must be an even integer");
            break;
        }
        case Kind::Subdivided: {
            if (lv.den != 1) throw std::invalid_argument("FamilySpec: lambda*v must be an integer");
            long long L = lv.num;
            if (L < 4) throw std::invalid_argument("FamilySpec: subdivided kind needs lambda*v >= 4");
            if ((3 * L) % 2 != 0) throw std::invalid_argument("FamilySpec: 3*lambda*v must be even");
            long long e3 = 3 * L / 2;
            long long t = v - L;
            if (t < e3) throw std::invalid_argument("FamilySpec: subdivided kind needs (1-lambda)v >= 3*lambda*v/2 (k >= 1)");
            break;
        }
    }
}

std::pair<Rational, Rational> FamilySpec::default_pair_threshold() const {
    if (pair_threshold) return *pair_threshold;
    switch (kind) {
        case Kind::Regular:
            return {alpha * Rational(d), Rational(d)};
        case Kind::RegularPlusMatching: {
            // a = (1 - beta) d'/2 with beta = (lambda + 1/26)/d', so a = (d' - lambda - 1/26)/2
            Rational dp = d_prime();
            Rational a = (dp - lambda - Rational(1, 26)) / Rational(2);
            return {a, dp / Rational(2)};
        }
        case Kind::Subdivided:
            return {Rational(1) + lambda / Rational(3), Rational(2)};
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> FamilySpec::regime_warnings() const {
    std::vector<std::string> w;
    if (kind == Kind::RegularPlusMatching && d < 6)
        w.push_back("plus-matching kind outside proven regime (d < 6)");
    if (kind == Kind::Subdivided && lambda > Rational(1, 76))
        w.push_back("subdivided kind outside proven regime (lambda > 1/76)");
    return w;
}

// ---------------------------------------------------------------- generators

namespace {

void shuffle_ints(std::vector<int>& v, RngStream& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(v[i], v[j]);
    }
}

} // namespace

Graph gen_regular(int v, int d, const RngSeed& seed, int retry_cap) {
    if (d < 3 || d >= v) throw std::invalid_argument("gen_regular: need 3 <= d < v");
    if ((static_cast<long long>(d) * v) % 2 != 0) throw std::invalid_argument("gen_regular: d*v must be even");
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        RngStream rng = seed.child(attempt).stream();
        std::vector<int> stubs(static_cast<std::size_t>(v) * d);
        for (int i = 0; i < v * d; ++i) stubs[i] = i / d;
        shuffle_ints(stubs, rng);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            if (a > b) std::swap(a, b);
            if (!edges.emplace(a, b).second) { ok = false; break; }
        }
        if (ok) return Graph(v, std::vector<Edge>(edges.begin(), edges.end()));
    }
    throw std::runtime_error("gen_regular: rejection retry cap exceeded");
}

Graph gen_regular_plus_matching(int v, int d, const Rational& lambda, const RngSeed& seed, int retry_cap) {
    Rational lv = lambda * Rational(v);
    if (lv.den != 1 || lv.num < 0 || lv.num > v || lv.num % 2 != 0)
        throw std::invalid_argument("gen_regular_plus_matching: lambda*v must be an even integer in [0, v]");
    int L = static_cast<int>(lv.num);
    if (L == 0) return gen_regular(v, d, seed.child("base"), retry_cap);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        RngSeed sub = seed.child(attempt);
        Graph base = gen_regular(v, d, sub.child("base"), retry_cap);
        RngStream rng = sub.child("matching").stream();
        std::vector<int> vertices(v);
        for (int i = 0; i < v; ++i) vertices[i] = i;
        shuffle_ints(vertices, rng);
        vertices.resize(L);
        shuffle_ints(vertices, rng);
        bool ok = true;
        std::vector<Edge> edges = base.edges();
        for (int i = 0; i < L; i += 2) {
            int a = vertices[i], b = vertices[i + 1];
            if (base.has_edge(a, b)) { ok = false; break; }
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        if (ok) return Graph(v, std::move(edges));
    }
    throw std::runtime_error("gen_regular_plus_matching: rejection retry cap exceeded");
}

Graph gen_subdivided(int v, const Rational& lambda, const RngSeed& seed, int retry_cap) {
    Rational lv = lambda * Rational(v);
    if (lv.den != 1) throw std::invalid_argument("gen_subdivided: lambda*v must be an integer");
    long long L = lv.num;
    if (L < 4 || (3 * L) % 2 != 0) throw std::invalid_argument("gen_subdivided: need lambda*v >= 4 with 3*lambda*v even");
    long long e3 = 3 * L / 2;
    long long t = v - L; // path vertices to distribute
    if (t < e3) throw std::invalid_argument("gen_subdivided: infeasible (v,lambda) integrality, need k >= 1");
    long long k = t / e3;
    long long n_short = e3 * (k + 1) - t; // edges subdivided with k vertices; rest get k+1
    Graph base = gen_regular(static_cast<int>(L), 3, seed.child("base"), retry_cap);

    std::vector<int> edge_order(base.edge_count());
    for (int i = 0; i < base.edge_count(); ++i) edge_order[i] = i;
    RngStream rng = seed.child("paths").stream();
    shuffle_ints(edge_order, rng);
    std::vector<long long> extra(base.edge_count(), k + 1);
    for (long long i = 0; i < n_short; ++i) extra[edge_order[i]] = k;

    std::vector<Edge> edges;
    int next_vertex = static_cast<int>(L);
    for (int ei = 0; ei < base.edge_count(); ++ei) {
        auto [a, b] = base.edges()[ei];
        int prev = a;
        for (long long j = 0; j < extra[ei]; ++j) {
            edges.emplace_back(prev, next_vertex);
            prev = next_vertex++;
        }
        edges.emplace_back(prev, b);
    }
    if (next_vertex != v) throw std::logic_error("gen_subdivided: vertex accounting failed");
    return Graph(v, std::move(edges));
}

// ------------------------------------------------------------- verify_member

namespace {

bool degree_check(const Graph& h, const FamilySpec& spec, std::vector<std::string>& notes) {
    std::vector<int> hist;
    for (int u = 0; u < h.vertex_count(); ++u) {
        int deg = h.degree(u);
        if (deg >= static_cast<int>(hist.size())) hist.resize(deg + 1, 0);
        ++hist[deg];
    }
    auto count = [&](int deg) { return deg < static_cast<int>(hist.size()) ? hist[deg] : 0; };
    Rational lv = spec.lambda * Rational(spec.v);
    switch (spec.kind) {
        case FamilySpec::Kind::Regular:
            if (count(spec.d) != spec.v) { notes.push_back("degree sequence is not all-" + std::to_string(spec.d)); return false; }
            return true;
        case FamilySpec::Kind::RegularPlusMatching: {
            int L = static_cast<int>(lv.num);
            if (count(spec.d + 1) != L || count(spec.d) != spec.v - L) {
                notes.push_back("degree histogram differs from {d: (1-lambda)v, d+1: lambda v}");
                return false;
            }
            return true;
        }
        case FamilySpec::Kind::Subdivided: {
            int L = static_cast<int>(lv.num);
            if (count(3) != L || count(2) != spec.v - L) {
                notes.push_back("degree histogram differs from {3: lambda v, 2: (1-lambda)v}");
                return false;
            }
            return true;
        }
    }
    return false;
}

// Per-size quantitative balance bounds, exact integer comparisons.
bool quant_balance_ok(const std::vector<int>& profile, const FamilySpec& spec, std::vector<std::string>& notes) {
    long long v = spec.v;
    Rational lv = spec.lambda * Rational(spec.v);
    long long L = lv.num;
    switch (spec.kind) {
        case FamilySpec::Kind::Regular:
            return true; // strict balance itself is the requirement here
        case FamilySpec::Kind::Subdivided: {
            // |E(J)| <= (1 + lambda/2 - theta*lambda/100) * s, theta = (v-s)/v.
            // Multiply through by 100 v^2.
            for (long long s = 1; s <= v; ++s) {
                long long lhs = 100 * v * v * profile[s];
                long long rhs = s * (100 * v * v + 50 * L * v - (v - s) * L);
                if (lhs > rhs) {
                    notes.push_back("quantitative balance violated at subset size " + std::to_string(s));
                    return false;
                }
            }
            return true;
        }
        case FamilySpec::Kind::RegularPlusMatching: {
            // theta > 1/2  (s < v/2):  E <= (d'/2 - 1/50) s
            // theta <= 1/2 (s >= v/2): E <= (d'/2) s - (v - s)/50
            // with d'/2 = (d v + L) / (2 v); multiply through by 100 v.
            for (long long s = 1; s <= v; ++s) {
                long long lhs = 100 * v * profile[s];
                long long rhs;
                if (2 * s < v)
                    rhs = 50 * s * (spec.d * v + L) - 2 * s * v;
                else
                    rhs = 50 * s * (spec.d * v + L) - 2 * v * (v - s);
                if (lhs > rhs) {
                    notes.push_back("quantitative balance violated at subset size " + std::to_string(s));
                    return false;
                }
            }
            return true;
        }
    }
    return false;
}

} // namespace

VerificationReport verify_member(const Graph& h, const FamilySpec& spec) {
    VerificationReport rep;
    if (h.vertex_count() != spec.v) {
        rep.notes.push_back("wrong vertex count");
        return rep;
    }
    rep.edges_ok = (h.edge_count() == spec.edge_target());
    if (!rep.edges_ok) rep.notes.push_back("wrong edge count");
    rep.connected = is_connected(h);
    if (!rep.connected) rep.notes.push_back("not connected");
    rep.degree_ok = degree_check(h, spec, rep.notes);
    rep.automorphism_count = canonical_form(h).automorphism_count;
    if (rep.automorphism_count != 1) rep.notes.push_back("non-trivial automorphisms: " + std::to_string(rep.automorphism_count));
    rep.balance = is_strictly_balanced(h);
    if (!rep.balance.strictly_balanced()) rep.notes.push_back("not strictly balanced");
    if (spec.v <= 22 && !rep.balance.profile.empty()) {
        rep.quant_checked = true;
        rep.quant_ok = quant_balance_ok(rep.balance.profile, spec, rep.notes);
    } else {
        rep.quant_checked = false;
        rep.quant_ok = false;
        rep.notes.push_back("quantitative balance unchecked (v > 22): treated as fail for admission");
    }
    return rep;
}

bool VerificationReport::pass(const FamilySpec& spec) const {
    if (!(connected && degree_ok && edges_ok)) return false;
    if (spec.require_aut_free && automorphism_count != 1) return false;
    if (!balance.strictly_balanced()) return false;
    if (!(quant_checked && quant_ok)) return false;
    return true;
}

// --------------------------------------------------- pairwise intersection

namespace {

// Simultaneous growth of a connected common subgraph of (h1, h2): states are
// sets of vertex pairs, edges are the pairs' shared edges. A state with
// |E| >= 1 and |E| >= a|V| - b is a violation witness. Enumeration is
// duplicate-free (root = minimal pair, pivot-exclusion) and exhaustive, so an
// un-exhausted completed search proves absence.
struct PairSearch {
    const Graph& h1;
    const Graph& h2;
    Rational a, b;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::optional<PairWitness> witness;

    int v1, v2;
    std::vector<int> xs, ys;
    std::vector<char> used1, used2, forbidden;
    int shared_edges = 0;
    int max_s;
    int delta; // min of max degrees, for the optimistic completion bound

    PairSearch(const Graph& g1, const Graph& g2, Rational a_, Rational b_, std::uint64_t budget_)
        : h1(g1), h2(g2), a(a_), b(b_), budget(budget_), v1(g1.vertex_count()), v2(g2.vertex_count()) {
        used1.assign(v1, 0);
        used2.assign(v2, 0);
        forbidden.assign(static_cast<std::size_t>(v1) * v2, 0);
        max_s = std::min(v1, v2);
        int d1 = 0, d2 = 0;
        for (int u = 0; u < v1; ++u) d1 = std::max(d1, h1.degree(u));
        for (int u = 0; u < v2; ++u) d2 = std::max(d2, h2.degree(u));
        delta = std::min(d1, d2);
    }

    bool violating(int s, int e) const { return e >= 1 && Rational(e) >= a * Rational(s) - b; }

    // Can any extension of an (s, e) state reach the threshold?
    bool reachable(int s, int e) const {
        long long cur = e;
        for (int s2 = s + 1; s2 <= max_s; ++s2) {
            cur += std::min(delta, s2 - 1);
            if (violating(s2, static_cast<int>(std::min<long long>(cur, 1 << 28)))) return true;
        }
        return false;
    }

    void record_witness() {
        int s = static_cast<int>(xs.size());
        std::vector<Edge> edges;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (h1.has_edge(xs[i], xs[j]) && h2.has_edge(ys[i], ys[j])) edges.emplace_back(i, j);
        PairWitness w;
        w.j = Graph(s, std::move(edges));
        w.emb1 = xs;
        w.emb2 = ys;
        witness = std::move(w);
    }

    int gained_edges(int x, int y) const {
        int g = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (h1.has_edge(x, xs[i]) && h2.has_edge(y, ys[i])) ++g;
        return g;
    }

    void extend(int root_pid) {
        if (witness || exhausted) return;
        if (++nodes > budget) { exhausted = true; return; }
        int s = static_cast<int>(xs.size());
        if (violating(s, shared_edges)) { record_witness(); return; }
        if (s >= max_s || !reachable(s, shared_edges)) return;

        // Frontier: unused pairs above the root that share an edge with the state.
        std::vector<std::pair<int, int>> frontier;
        for (int x = 0; x < v1; ++x) {
            if (used1[x]) continue;
            for (int y = 0; y < v2; ++y) {
                if (used2[y]) continue;
                int pid = x * v2 + y;
                if (pid <= root_pid || forbidden[pid]) continue;
                if (gained_edges(x, y) > 0) frontier.emplace_back(x, y);
            }
        }
        std::size_t marked = 0;
        for (std::size_t i = 0; i < frontier.size() && !witness && !exhausted; ++i) {
            if (i > 0) {
                auto [px, py] = frontier[i - 1];
                forbidden[px * v2 + py] = 1;
                ++marked;
            }
            auto [x, y] = frontier[i];
            int g = gained_edges(x, y);
            xs.push_back(x); ys.push_back(y);
            used1[x] = used2[y] = 1;
            shared_edges += g;
            extend(root_pid);
            shared_edges -= g;
            used1[x] = used2[y] = 0;
            xs.pop_back(); ys.pop_back();
        }
        for (std::size_t i = 0; i < marked; ++i) {
            auto [px, py] = frontier[i];
            forbidden[px * v2 + py] = 0;
        }
    }

    void run() {
        for (int x = 0; x < v1 && !witness && !exhausted; ++x) {
            for (int y = 0; y < v2 && !witness && !exhausted; ++y) {
                int pid = x * v2 + y;
                xs.assign(1, x); ys.assign(1, y);
                std::fill(used1.begin(), used1.end(), 0);
                std::fill(used2.begin(), used2.end(), 0);
                used1[x] = used2[y] = 1;
                shared_edges = 0;
                extend(pid);
            }
        }
    }
};

} // namespace

PairVerdict pairwise_intersection_check(const Graph& h1, const Graph& h2,
                                        std::pair<Rational, Rational> threshold,
                                        const SearchBudget& budget) {
    PairSearch search(h1, h2, threshold.first, threshold.second, budget.max_nodes);
    search.run();
    PairVerdict v;
    v.nodes = search.nodes;
    if (search.witness) {
        v.kind = PairVerdict::Kind::Violated;
        v.witness = std::move(search.witness);
    } else if (search.exhausted) {
        v.kind = PairVerdict::Kind::Unknown;
    } else {
        v.kind = PairVerdict::Kind::Verified;
    }
    return v;
}

PairVerdict labeled_intersection_check(const Graph& h1, const Graph& h2,
                                       std::pair<Rational, Rational> threshold) {
    if (h1.vertex_count() != h2.vertex_count())
        throw std::invalid_argument("labeled_intersection_check: vertex counts differ");
    std::vector<Edge> shared;
    for (auto [u, v] : h1.edges())
        if (h2.has_edge(u, v)) shared.emplace_back(u, v);
    PairVerdict verdict;
    if (shared.empty()) {
        verdict.kind = PairVerdict::Kind::Verified;
        return verdict;
    }
    // Strip isolated vertices, then search the intersection graph against
    // itself: subgraphs of I are exactly the labeled common subgraphs.
    std::vector<int> verts;
    for (auto [u, v] : shared) { verts.push_back(u); verts.push_back(v); }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> rank(h1.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) rank[verts[i]] = i;
    std::vector<Edge> redges;
    redges.reserve(shared.size());
    for (auto [u, v] : shared) redges.emplace_back(rank[u], rank[v]);
    Graph inter(static_cast<int>(verts.size()), std::move(redges));
    SearchBudget b;
    PairVerdict v = pairwise_intersection_check(inter, inter, threshold, b);
    if (v.witness) {
        for (auto& x : v.witness->emb1) x = verts[x];
        for (auto& y : v.witness->emb2) y = verts[y];
    }
    return v;
}

// ---------------------------------------------------------------- build_family

TestFamily build_family(const FamilySpec& spec, const RngSeed& seed) {
    spec.validate();
    TestFamily fam;
    fam.spec = spec;
    fam.warnings = spec.regime_warnings();
    std::pair<Rational, Rational> threshold = spec.default_pair_threshold();
    std::uint64_t max_attempts = spec.max_attempts ? spec.max_attempts : static_cast<std::uint64_t>(spec.target_size) * 400;
    std::unordered_set<std::string> seen;

    for (std::uint64_t attempt = 0; attempt < max_attempts && static_cast<int>(fam.members.size()) < spec.target_size; ++attempt) {
        ++fam.attempts;
        Graph candidate;
        try {
            RngSeed cs = seed.child("cand").child(attempt);
            switch (spec.kind) {
                case FamilySpec::Kind::Regular: candidate = gen_regular(spec.v, spec.d, cs); break;
                case FamilySpec::Kind::RegularPlusMatching: candidate = gen_regular_plus_matching(spec.v, spec.d, spec.lambda, cs); break;
                case FamilySpec::Kind::Subdivided: candidate = gen_subdivided(spec.v, spec.lambda, cs); break;
            }
        } catch (const std::runtime_error&) {
            continue; // generation retry cap; try the next candidate stream
        }
        VerificationReport rep = verify_member(candidate, spec);
        if (!rep.pass(spec)) continue;
        std::string key = canonical_form(candidate).key();
        if (!seen.insert(key).second) continue;

        bool admissible = true;
        if (spec.pair_mode != FamilySpec::PairMode::Off) {
            for (const Graph& other : fam.members) {
                PairVerdict pv = spec.pair_mode == FamilySpec::PairMode::Abstract
                                     ? pairwise_intersection_check(candidate, other, threshold, spec.budget)
                                     : labeled_intersection_check(candidate, other, threshold);
                ++fam.pair_certificates.checked;
                if (pv.verified()) {
                    ++fam.pair_certificates.verified;
                } else if (pv.violated()) {
                    ++fam.pair_certificates.violated;
                    admissible = false;
                    break;
                } else {
                    ++fam.pair_certificates.unknown; // Unknown rejects: soundness over size
                    admissible = false;
                    break;
                }
            }
        }
        if (!admissible) continue;
        fam.members.push_back(std::move(candidate));
        fam.reports.push_back(std::move(rep));
    }
    fam.complete = static_cast<int>(fam.members.size()) >= spec.target_size;
    return fam;
}

// ------------------------------------------------------------------- JSON IO

namespace {

json spec_to_json(const FamilySpec& s) {
    json j;
    j["v"] = s.v;
    j["kind"] = s.kind == FamilySpec::Kind::Regular          ? "regular"
                : s.kind == FamilySpec::Kind::RegularPlusMatching ? "regular_plus_matching"
                                                                  : "subdivided";
    j["d"] = s.d;
    j["lambda"] = s.lambda.str();
    j["target_size"] = s.target_size;
    j["alpha"] = s.alpha.str();
    j["require_aut_free"] = s.require_aut_free;
    j["pair_mode"] = s.pair_mode == FamilySpec::PairMode::Abstract ? "abstract"
                     : s.pair_mode == FamilySpec::PairMode::Labeled ? "labeled"
                                                                    : "off";
    if (s.pair_threshold) {
        j["pair_threshold_a"] = s.pair_threshold->first.str();
        j["pair_threshold_b"] = s.pair_threshold->second.str();
    }
    j["max_attempts"] = s.max_attempts;
    return j;
}

Rational rational_from_str(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

FamilySpec spec_from_json(const json& j) {
    FamilySpec s;
    s.v = j.at("v").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    s.kind = kind == "regular"                ? FamilySpec::Kind::Regular
             : kind == "regular_plus_matching" ? FamilySpec::Kind::RegularPlusMatching
                                               : FamilySpec::Kind::Subdivided;
    s.d = j.value("d", 3);
    s.lambda = rational_from_str(j.value("lambda", std::string("0")));
    s.target_size = j.value("target_size", 1);
    s.alpha = rational_from_str(j.value("alpha", std::string("12/25")));
    s.require_aut_free = j.value("require_aut_free", true);
    std::string pm = j.value("pair_mode", std::string("abstract"));
    s.pair_mode = pm == "abstract" ? FamilySpec::PairMode::Abstract
                  : pm == "labeled" ? FamilySpec::PairMode::Labeled
                                    : FamilySpec::PairMode::Off;
    if (j.contains("pair_threshold_a"))
        s.pair_threshold = {rational_from_str(j.at("pair_threshold_a").get<std::string>()),
                            rational_from_str(j.at("pair_threshold_b").get<std::string>())};
    s.max_attempts = j.value("max_attempts", std::uint64_t{0});
    return s;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["connected"] = r.connected;
    j["degree_ok"] = r.degree_ok;
    j["edges_ok"] = r.edges_ok;
    j["automorphism_count"] = r.automorphism_count;
    j["strictly_balanced"] = r.balance.strictly_balanced();
    if (r.balance.slack) j["balance_slack"] = r.balance.slack->str();
    j["quant_checked"] = r.quant_checked;
    j["quant_ok"] = r.quant_ok;
    j["notes"] = r.notes;
    return j;
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.connected = j.value("connected", false);
    r.degree_ok = j.value("degree_ok", false);
    r.edges_ok = j.value("edges_ok", false);
    r.automorphism_count = j.value("automorphism_count", std::uint64_t{0});
    r.balance.status = j.value("strictly_balanced", false) ? BalanceVerdict::Status::Balanced
                                                           : BalanceVerdict::Status::Unbalanced;
    if (j.contains("balance_slack")) r.balance.slack = rational_from_str(j.at("balance_slack").get<std::string>());
    r.quant_checked = j.value("quant_checked", false);
    r.quant_ok = j.value("quant_ok", false);
    r.notes = j.value("notes", std::vector<std::string>{});
    return r;
}

} // namespace

std::string family_to_json(const TestFamily& fam) {
    json j;
    j["spec"] = spec_to_json(fam.spec);
    json members = json::array();
    for (const auto& g : fam.members) members.push_back(write_edge_list(g));
    j["members"] = members;
    json reports = json::array();
    for (const auto& r : fam.reports) reports.push_back(report_to_json(r));
    j["reports"] = reports;
    j["pair_certificates"] = {{"checked", fam.pair_certificates.checked},
                              {"verified", fam.pair_certificates.verified},
                              {"violated", fam.pair_certificates.violated},
                              {"unknown", fam.pair_certificates.unknown}};
    j["complete"] = fam.complete;
    j["attempts"] = fam.attempts;
    j["warnings"] = fam.warnings;
    return j.dump(2) + "\n";
}

TestFamily family_from_json(const std::string& text) {
    json j = json::parse(text);
    TestFamily fam;
    fam.spec = spec_from_json(j.at("spec"));
    for (const auto& s : j.at("members")) {
        std::istringstream in(s.get<std::string>());
        fam.members.push_back(read_edge_list(in));
    }
    if (j.contains("reports"))
        for (const auto& r : j.at("reports")) fam.reports.push_back(report_from_json(r));
    if (j.contains("pair_certificates")) {
        const auto& pc = j.at("pair_certificates");
        fam.pair_certificates.checked = pc.value("checked", std::uint64_t{0});
        fam.pair_certificates.verified = pc.value("verified", std::uint64_t{0});
        fam.pair_certificates.violated = pc.value("violated", std::uint64_t{0});
        fam.pair_certificates.unknown = pc.value("unknown", std::uint64_t{0});
    }
    fam.complete = j.value("complete", false);
    fam.attempts = j.value("attempts", std::uint64_t{0});
    fam.warnings = j.value("warnings", std::vector<std::string>{});
    return fam;
}

TestFamily family_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return family_from_json(buf.str());
}

void family_to_json_file(const TestFamily& fam, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << family_to_json(fam);
}

// -------------------------------------------------------------- feasibility

FeasibilityReport family_params_feasible(double n, double p, double gamma, int v, const Rational& d_prime) {
    FeasibilityReport rep;
    double logn = std::log(n);
    rep.delta = 1.0 + std::log(p) / logn; // p = n^(delta - 1)
    rep.q = p * gamma * gamma;
    double dp = d_prime.value();
    rep.lambda = dp - 2.0;
    bool sparse = dp < 4.0;
    rep.regime = sparse ? "sparse" : "dense";
    double loglogn = std::log(std::max(logn, 1.000001));

    auto add = [&](const std::string& name, double lhs, double rhs, bool pass) {
        rep.items.push_back({name, lhs, rhs, pass});
    };

    if (sparse) {
        double lam = rep.lambda;
        double lo = 2.0 * rep.delta / (1.0 - rep.delta);
        double hi = lo + loglogn / logn;
        add("lambda > 2*delta/(1-delta)", lam, lo, lam > lo);
        add("lambda < 2*delta/(1-delta) + loglog(n)/log(n)", lam, hi, lam < hi);
        double l2 = std::log(static_cast<double>(v));
        add("v*log^2(v) << lambda^2*log^2(n)", v * l2 * l2, lam * lam * logn * logn,
            v * l2 * l2 < lam * lam * logn * logn);
        add("n*p^(d'/2) < 1", n * std::pow(p, dp / 2.0), 1.0, n * std::pow(p, dp / 2.0) < 1.0);
        double rhs4 = n * std::pow(rep.q, 1.0 + lam / 3.0);
        add("v^2 << n*q^(1+lambda/3)", static_cast<double>(v) * v, rhs4, static_cast<double>(v) * v < rhs4);
        double lhs5 = n * std::pow(rep.q, dp / 2.0) * std::pow(static_cast<double>(v), 8.0);
        add("n*q^(d'/2)*v^8 >= 1", lhs5, 1.0, lhs5 >= 1.0);
    } else {
        double lo = 2.0 / (1.0 - rep.delta);
        double hi = lo + loglogn / (4.0 * logn);
        add("d' > 2/(1-delta)", dp, lo, dp > lo);
        add("d' < 2/(1-delta) + loglog(n)/(4*log(n))", dp, hi, dp < hi);
        double mid = std::pow(static_cast<double>(v), 2.0 * (dp + 2.0)) * n * std::pow(rep.q, dp / 2.0);
        double left = 2.0 * std::pow(static_cast<double>(v), 2.0 + 2.0 * (dp + 2.0)) * std::pow(rep.q, 0.02);
        double right = 0.5 * std::pow(rep.q, -0.02);
        add("2*v^(2+2(d'+2))*q^(1/50) <= v^(2(d'+2))*n*q^(d'/2)", left, mid, left <= mid);
        add("v^(2(d'+2))*n*q^(d'/2) <= (1/2)*q^(-1/50)", mid, right, mid <= right);
    }
    rep.all_pass = std::all_of(rep.items.begin(), rep.items.end(), [](const auto& it) { return it.pass; });
    return rep;
}

} // namespace gmatch
