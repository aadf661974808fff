// Acceptance checks. Usage: acceptance <1..10|all>
// Prints one "[PASS]" or "[FAIL]" line per criterion and exits non-zero if
// any of them fails.

#include "emd/construct.hpp"
#include "emd/solver.hpp"
#include "emd/structure.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace emd;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail.clear();
        else
            detail += "; ";
        pass = false;
        detail += why;
    }
};

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

LabeledSilicate make(Family f, int n)
{
    return make_silicate({f, n, std::nullopt});
}

std::string name(Family f, int n)
{
    return (f == Family::chain ? "CS_" : "CC_") + std::to_string(n);
}

// Exact value match with a per-instance time limit.
Outcome exact_values(Family f, const std::vector<std::pair<int, int>>& expected, double limit_s)
{
    Outcome o;
    std::ostringstream seen;
    for (auto [n, want] : expected) {
        const auto s = make(f, n);
        const auto t0 = Clock::now();
        const auto cert = exact_edge_metric_dimension(s.graph);
        const double secs = seconds_since(t0);
        const int got = cert.dimension ? *cert.dimension : -1;
        seen << ' ' << name(f, n) << '=' << got;
        if (!cert.optimal || got != want)
            o.fail(name(f, n) + ": expected " + std::to_string(want) + ", solver gives " +
                   std::to_string(got));
        if (secs > limit_s)
            o.fail(name(f, n) + " took " + std::to_string(secs) + " s");
    }
    if (o.pass)
        o.detail = "dim_E" + seen.str();
    return o;
}

const std::vector<std::pair<int, int>> kChainEven = {{2, 5}, {4, 8}, {6, 11}};
const std::vector<std::pair<int, int>> kChainOdd = {{1, 3}, {3, 6}, {5, 9}};
const std::vector<std::pair<int, int>> kCyclic = {{4, 6}, {6, 9}, {3, 5}, {5, 8}, {7, 11}};

std::vector<std::pair<Family, int>> instances_1_to_3()
{
    std::vector<std::pair<Family, int>> out;
    for (const auto& list : {kChainEven, kChainOdd})
        for (auto [n, _] : list)
            out.emplace_back(Family::chain, n);
    for (auto [n, _] : kCyclic)
        out.emplace_back(Family::cyclic, n);
    return out;
}

Outcome c1() { return exact_values(Family::chain, kChainEven, 60.0); }
Outcome c2() { return exact_values(Family::chain, kChainOdd, 60.0); }

Outcome c3() { return exact_values(Family::cyclic, kCyclic, 300.0); }

Outcome c4()
{
    Outcome o;
    const auto t0 = Clock::now();
    int checked = 0;
    for (Family f : {Family::chain, Family::cyclic}) {
        for (int n = f == Family::chain ? 1 : 3; n <= 200; ++n) {
            const auto s = make(f, n);
            const auto set = construct_ers(s, labeling_for(f, n));
            ++checked;
            if (static_cast<int>(set.size()) != predicted_dimension(f, n))
                o.fail(name(f, n) + ": size " + std::to_string(set.size()));
            auto r = is_edge_resolving(s.graph, set);
            if (!r.resolving) {
                const auto [a, b] = *r.witness;
                o.fail(name(f, n) + " construction not resolving: edges (" +
                       std::to_string(a.u) + "," + std::to_string(a.v) + ") and (" +
                       std::to_string(b.u) + "," + std::to_string(b.v) + ") share a code");
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs > 600.0)
        o.fail("sweep took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(checked) + " instances verified in " +
                   std::to_string(static_cast<int>(secs)) + " s";
    return o;
}

Outcome c5()
{
    Outcome o;
    for (auto [f, n] : instances_1_to_3()) {
        const auto s = make(f, n);
        const int lower = lemma_lower_bound({f, n, std::nullopt});
        const auto cert = exact_edge_metric_dimension(s.graph);
        const int exact = cert.dimension ? *cert.dimension : -1;
        const int built = static_cast<int>(construct_ers(s, labeling_for(f, n)).size());
        if (!(lower == exact && exact == built))
            o.fail(name(f, n) + ": lower " + std::to_string(lower) + ", exact " +
                   std::to_string(exact) + ", constructed " + std::to_string(built));
    }
    if (o.pass)
        o.detail = "lower = exact = constructed on all 11 instances";
    return o;
}

Outcome c6()
{
    Outcome o;
    std::mt19937 rng(20240601);
    int sets = 0, violating = 0;
    for (Family f : {Family::chain, Family::cyclic}) {
        const int lo = f == Family::chain ? 1 : 3;
        std::map<int, std::pair<LabeledSilicate, LandmarkSet>> cache;
        for (int n = lo; n <= 10; ++n) {
            auto s = make(f, n);
            auto w = exact_edge_metric_dimension(s.graph).witness;
            cache.emplace(n, std::make_pair(std::move(s), std::move(w)));
        }
        std::uniform_int_distribution<int> pick_n(lo, 10);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = pick_n(rng);
            const auto& [s, witness] = cache.at(n);
            const auto dec = decompose(s.graph);
            const auto d = all_pairs_distances(s.graph);

            std::vector<VertexId> ids(witness.ids().begin(), witness.ids().end());
            std::bernoulli_distribution add(std::uniform_real_distribution<double>(0, 1)(rng));
            for (VertexId v = 0; v < s.graph.vertex_count(); ++v)
                if (!witness.contains(v) && add(rng))
                    ids.push_back(v);
            const LandmarkSet x(ids);
            ++sets;
            if (!is_edge_resolving(s.graph, d, x).resolving) {
                o.fail("generated set on " + name(f, n) + " is not resolving");
                continue;
            }
            if (!check_necessary(x, dec.twins).empty())
                o.fail(name(f, n) + ": resolving set flagged by the twin condition");

            // converse: drop two cubic vertices of one twin
            if (dec.twins.empty())
                continue;
            const auto& twin = dec.twins[rng() % dec.twins.size()];
            auto cubic = twin.cubic_set;
            std::shuffle(cubic.begin(), cubic.end(), rng);
            std::vector<VertexId> kept;
            for (VertexId v : ids)
                if (v != cubic[0] && v != cubic[1])
                    kept.push_back(v);
            const LandmarkSet bad(kept);
            ++violating;
            if (check_necessary(bad, dec.twins).empty())
                o.fail(name(f, n) + ": violating set not flagged");
            if (is_edge_resolving(s.graph, d, bad).resolving)
                o.fail(name(f, n) + ": set violating the twin condition resolves");
        }
    }
    if (o.pass)
        o.detail = std::to_string(sets) + " resolving sets clean, " + std::to_string(violating) +
                   " violating sets all fail";
    return o;
}

Outcome c7()
{
    Outcome o;
    std::mt19937 rng(7);
    std::map<std::string, int> failures;
    int accepted_total = 0;
    for (Family f : {Family::chain, Family::cyclic}) {
        const int lo = f == Family::chain ? 1 : 3;
        std::map<int, LabeledSilicate> sil;
        std::map<int, Decomposition> dec;
        std::map<int, DistanceMatrix> dist;
        std::map<int, std::vector<VertexId>> cubic;
        for (int n = lo; n <= 12; ++n) {
            sil.emplace(n, make(f, n));
            dec.emplace(n, decompose(sil.at(n).graph));
            dist.emplace(n, all_pairs_distances(sil.at(n).graph));
            std::vector<VertexId> c;
            for (VertexId v = 0; v < sil.at(n).graph.vertex_count(); ++v)
                if (sil.at(n).graph.degree(v) == 3)
                    c.push_back(v);
            cubic.emplace(n, std::move(c));
        }
        std::uniform_int_distribution<int> pick_n(lo, 12);
        int accepted = 0;
        for (long attempt = 0; accepted < 1000 && attempt < 2'000'000; ++attempt) {
            const int n = pick_n(rng);
            std::bernoulli_distribution keep(0.55 + 0.45 * std::uniform_real_distribution<>(0, 1)(rng));
            std::vector<VertexId> ids;
            for (VertexId v : cubic.at(n))
                if (keep(rng))
                    ids.push_back(v);
            const LandmarkSet x(ids);
            const auto& dn = dec.at(n);
            if (!check_sufficient(sil.at(n).graph, x, dn.tetrahedra, dn.twins).sufficient)
                continue;
            ++accepted;
            if (!is_edge_resolving(sil.at(n).graph, dist.at(n), x).resolving)
                ++failures[name(f, n)];
        }
        accepted_total += accepted;
        if (accepted < 1000)
            o.fail(std::string(to_string(f)) + ": only " + std::to_string(accepted) +
                   " qualifying sets sampled");
    }
    for (const auto& [inst, count] : failures)
        o.fail(inst + ": " + std::to_string(count) + " sets meeting the conditions do not resolve");
    if (o.pass)
        o.detail = std::to_string(accepted_total) + " qualifying cubic sets all resolve";
    return o;
}

// Checks the six codes of one tetrahedron against the expected forms.
bool display_matches(const DistanceMatrix& d, const std::array<VertexId, 4>& v,
                     const LandmarkSet& s, const std::array<Code, 6>& want)
{
    const std::array<Edge, 6> edges = {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[0], v[3]},
                                       Edge{v[1], v[2]}, Edge{v[1], v[3]}, Edge{v[2], v[3]}};
    std::array<Code, 6> got;
    for (int i = 0; i < 6; ++i) {
        const Edge e{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)};
        got[i] = edge_code(d, e, s);
        if (got[i] != want[i])
            return false;
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (got[i] == got[j])
                return false;
    return true;
}

Outcome c8()
{
    Outcome o;
    long type_i = 0, type_ii = 0;
    for (Family f : {Family::chain, Family::cyclic}) {
        for (int n = f == Family::chain ? 1 : 3; n <= 20; ++n) {
            const auto sil = make(f, n);
            const auto& g = sil.graph;
            const auto d = all_pairs_distances(g);
            for (const auto& tet : find_tetrahedra(g)) {
                std::vector<VertexId> hinges, cubic = tet.cubic_vertices;
                for (VertexId v : tet.vertices)
                    if (g.degree(v) != 3)
                        hinges.push_back(v);
                auto outside = [&](VertexId w) {
                    return std::find(tet.vertices.begin(), tet.vertices.end(), w) ==
                           tet.vertices.end();
                };
                if (tet.kind == TetrahedronKind::type_i) {
                    const VertexId v0 = hinges[0];
                    for (VertexId s = 0; s < g.vertex_count(); ++s) {
                        if (!outside(s))
                            continue;
                        const Distance x = d(s, v0);
                        const Distance x1 = x + 1;
                        for (VertexId v1 : cubic)
                            for (VertexId v2 : cubic) {
                                if (v1 == v2)
                                    continue;
                                VertexId v3 = 0;
                                for (VertexId c : cubic)
                                    if (c != v1 && c != v2)
                                        v3 = c;
                                const std::array<Code, 6> want = {
                                    Code{x, 0, 1},  Code{x, 1, 0},  Code{x, 1, 1},
                                    Code{x1, 0, 0}, Code{x1, 0, 1}, Code{x1, 1, 0}};
                                ++type_i;
                                // LandmarkSet keeps insertion order: (s, v1, v2)
                                if (!display_matches(d, {v0, v1, v2, v3}, LandmarkSet{s, v1, v2},
                                                     want))
                                    o.fail(name(f, n) + " type I at hinge " +
                                           std::to_string(v0) + " with s = " +
                                           std::to_string(s));
                            }
                    }
                }
                else if (tet.kind == TetrahedronKind::type_ii) {
                    for (int flip = 0; flip < 2; ++flip) {
                        const VertexId u0 = hinges[flip], u1 = hinges[1 - flip];
                        for (int c = 0; c < 2; ++c) {
                            const VertexId u2 = cubic[c], u3 = cubic[1 - c];
                            for (VertexId s = 0; s < g.vertex_count(); ++s) {
                                if (!outside(s) || d(s, u0) >= d(s, u1))
                                    continue;
                                for (VertexId t = 0; t < g.vertex_count(); ++t) {
                                    if (!outside(t) || d(t, u1) >= d(t, u0) || t == s)
                                        continue;
                                    const Distance x = d(s, u0), y = d(t, u1);
                                    const Distance x1 = x + 1, y1 = y + 1;
                                    const std::array<Code, 6> want = {
                                        Code{x, y, 1},   Code{x, y1, 0},  Code{x, y1, 1},
                                        Code{x1, y, 0},  Code{x1, y, 1},  Code{x1, y1, 0}};
                                    ++type_ii;
                                    if (!display_matches(d, {u0, u1, u2, u3},
                                                         LandmarkSet{s, t, u2}, want))
                                        o.fail(name(f, n) + " type II " + std::to_string(u0) +
                                               "-" + std::to_string(u1) + " with s = " +
                                               std::to_string(s) + ", t = " +
                                               std::to_string(t));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if (type_i == 0 || type_ii == 0)
        o.fail("no displays exercised");
    if (o.pass)
        o.detail = std::to_string(type_i) + " type I and " + std::to_string(type_ii) +
                   " type II landmark choices match";
    return o;
}

Outcome c9()
{
    Outcome o;
    std::vector<std::pair<std::string, Graph>> corpus;
    for (int n = 1; n <= 3; ++n)
        corpus.emplace_back(name(Family::chain, n), chain_silicate(n).graph);
    for (int n = 3; n <= 4; ++n)
        corpus.emplace_back(name(Family::cyclic, n), cyclic_silicate(n).graph);
    corpus.emplace_back("star skeleton",
                        silicate_of_skeleton(build_graph(4, {{0, 1}, {0, 2}, {0, 3}})).graph);
    corpus.emplace_back("triangle skeleton",
                        silicate_of_skeleton(build_graph(3, {{0, 1}, {0, 2}, {1, 2}})).graph);
    std::mt19937 rng(12);
    for (int i = 0; i < 120; ++i) {
        const double p = 0.1 + 0.1 * (i % 6);
        corpus.emplace_back("random #" + std::to_string(i),
                            oracle::random_connected_graph(2 + i % 11, p, rng));
    }
    int compared = 0;
    for (const auto& [label, g] : corpus) {
        if (g.vertex_count() > 12)
            continue;
        for (Target target : {Target::edge, Target::vertex}) {
            const auto naive = oracle::naive_minimum(g, target == Target::edge);
            SolveOptions opts;
            opts.target = target;
            const auto cert = solve(g, opts);
            ++compared;
            const std::vector<VertexId> w(cert.witness.ids().begin(), cert.witness.ids().end());
            if (!cert.dimension || *cert.dimension != naive.dimension || w != naive.witness)
                o.fail(label + " (" + std::string(to_string(target)) + ")");
        }
    }
    if (o.pass)
        o.detail = std::to_string(compared) + " graph/target pairs identical";
    return o;
}

Outcome c10()
{
    Outcome o;
    for (auto [f, n] : instances_1_to_3()) {
        const auto s = make(f, n);
        const CertificateContext ctx{std::string(to_string(f)), n};
        std::string reference;
        for (unsigned workers : {1u, 4u, 16u}) {
            SolveOptions opts;
            opts.parallel_workers = workers;
            const auto text = certificate_json(solve(s.graph, opts), ctx);
            if (reference.empty())
                reference = text;
            else if (text != reference)
                o.fail(name(f, n) + " differs at " + std::to_string(workers) + " workers");
        }
    }
    if (o.pass)
        o.detail = "11 instances x workers {1, 4, 16}";
    return o;
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {1, {"chain silicate, even n", c1}},
    {2, {"chain silicate, odd n", c2}},
    {3, {"cyclic silicate", c3}},
    {4, {"construction for n <= 200", c4}},
    {5, {"lower bound = exact = constructed", c5}},
    {6, {"twin condition is necessary", c6}},
    {7, {"cubic conditions are sufficient", c7}},
    {8, {"type I / type II code displays", c8}},
    {9, {"pruned solver = exhaustive oracle", c9}},
    {10, {"deterministic certificates", c10}},
};

}  // namespace

int main(int argc, char** argv)
{
    std::vector<int> which;
    const std::string arg = argc > 1 ? argv[1] : "all";
    if (arg == "all") {
        for (const auto& [k, _] : kCriteria)
            which.push_back(k);
    }
    else {
        int k = 0;
        try {
            k = std::stoi(arg);
        }
        catch (const std::exception&) {
        }
        if (!kCriteria.count(k)) {
            std::cerr << "usage: acceptance <1..10|all>\n";
            return 64;
        }
        which.push_back(k);
    }

    int failed = 0;
    for (int k : which) {
        const auto& [title, check] = kCriteria.at(k);
        Outcome out;
        try {
            out = check();
        }
        catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << 'C' << k << ' ' << title << ": "
                  << out.detail << '\n';
        failed += out.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
