#include "emd/structure.hpp"

#include <json.hpp>

#include <functional>
#include <limits>

namespace emd {

std::string_view to_string(TetrahedronKind k)
{
    switch (k) {
    case TetrahedronKind::type_i: return "type_i";
    case TetrahedronKind::type_ii: return "type_ii";
    case TetrahedronKind::isolated: return "isolated";
    case TetrahedronKind::other: return "other";
    }
    return "?";
}

namespace {

bool is_clique(const Graph& g, const Tetrahedron4& t)
{
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!g.has_edge(t[a], t[b]))
                return false;
    return true;
}

template <class F>
void for_each_edge_of(const Tetrahedron4& t, F&& f)
{
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            f(t[a], t[b]);
}

Tetrahedron classify(const Graph& g, const Tetrahedron4& t)
{
    Tetrahedron tet;
    tet.vertices = t;
    for (VertexId v : t)
        if (g.degree(v) == 3)
            tet.cubic_vertices.push_back(v);
    switch (tet.cubic_vertices.size()) {
    case 4: tet.kind = TetrahedronKind::isolated; break;
    case 3: tet.kind = TetrahedronKind::type_i; break;
    case 2: tet.kind = TetrahedronKind::type_ii; break;
    default: tet.kind = TetrahedronKind::other; break;
    }
    return tet;
}

std::size_t count_outside(std::span<const VertexId> vs, const std::vector<char>& in_s)
{
    return static_cast<std::size_t>(
        std::count_if(vs.begin(), vs.end(), [&](VertexId v) { return !in_s[v]; }));
}

}  // namespace

std::vector<Tetrahedron> find_tetrahedra(const Graph& g)
{
    std::vector<int> owner(g.edge_count(), -1);
    std::vector<Tetrahedron4> cover;

    auto place = [&](const Tetrahedron4& t, int id) {
        for_each_edge_of(t, [&](VertexId a, VertexId b) { owner[g.edge_index(a, b)] = id; });
    };

    // A cubic vertex lies in exactly one cover tetrahedron: its closed
    // neighbourhood.
    for (VertexId p = 0; p < g.vertex_count(); ++p) {
        if (g.degree(p) != 3)
            continue;
        auto nb = g.neighbors(p);
        Tetrahedron4 t{p, nb[0], nb[1], nb[2]};
        std::sort(t.begin(), t.end());
        if (!is_clique(g, t))
            continue;
        if (std::find(cover.begin(), cover.end(), t) != cover.end())
            continue;
        bool clash = false;
        for_each_edge_of(t, [&](VertexId a, VertexId b) {
            clash = clash || owner[g.edge_index(a, b)] >= 0;
        });
        if (clash)
            throw StructureError("tetrahedra around cubic vertex " + std::to_string(p) +
                                     " overlap another tetrahedron",
                                 Edge{t[0], t[1]});
        place(t, static_cast<int>(cover.size()));
        cover.push_back(t);
    }

    // Remaining edges: exact cover by K4s built from uncovered edges only.
    std::function<bool()> cover_rest = [&]() -> bool {
        auto it = std::find(owner.begin(), owner.end(), -1);
        if (it == owner.end())
            return true;
        const Edge e = g.edges()[it - owner.begin()];
        std::vector<VertexId> common;
        std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(),
                              g.neighbors(e.v).begin(), g.neighbors(e.v).end(),
                              std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                Tetrahedron4 t{e.u, e.v, common[i], common[j]};
                std::sort(t.begin(), t.end());
                if (!is_clique(g, t))
                    continue;
                bool free = true;
                for_each_edge_of(t, [&](VertexId a, VertexId b) {
                    free = free && owner[g.edge_index(a, b)] < 0;
                });
                if (!free)
                    continue;
                place(t, static_cast<int>(cover.size()));
                cover.push_back(t);
                if (cover_rest())
                    return true;
                cover.pop_back();
                for_each_edge_of(t, [&](VertexId a, VertexId b) {
                    owner[g.edge_index(a, b)] = -1;
                });
            }
        return false;
    };
    if (!cover_rest()) {
        const Edge e = g.edges()[std::find(owner.begin(), owner.end(), -1) - owner.begin()];
        throw StructureError("no edge-disjoint tetrahedron cover: edge (" + std::to_string(e.u) +
                                 ", " + std::to_string(e.v) + ") cannot be covered",
                             e);
    }

    std::vector<Tetrahedron> tets;
    for (const auto& t : cover)
        tets.push_back(classify(g, t));
    auto key = [](const Tetrahedron& t) {
        VertexId first = t.cubic_vertices.empty() ? std::numeric_limits<VertexId>::max()
                                                  : t.cubic_vertices.front();
        return std::pair{first, t.vertices};
    };
    std::sort(tets.begin(), tets.end(),
              [&](const Tetrahedron& a, const Tetrahedron& b) { return key(a) < key(b); });
    return tets;
}

std::vector<TwinTetrahedron> find_twins(const Graph& g, const std::vector<Tetrahedron>& tets)
{
    (void)g;
    std::vector<TwinTetrahedron> twins;
    for (std::size_t i = 0; i < tets.size(); ++i)
        for (std::size_t j = i + 1; j < tets.size(); ++j) {
            std::vector<VertexId> common;
            std::set_intersection(tets[i].vertices.begin(), tets[i].vertices.end(),
                                  tets[j].vertices.begin(), tets[j].vertices.end(),
                                  std::back_inserter(common));
            if (common.size() != 1)
                continue;
            TwinTetrahedron twin{i, j, common.front(), {}};
            std::merge(tets[i].cubic_vertices.begin(), tets[i].cubic_vertices.end(),
                       tets[j].cubic_vertices.begin(), tets[j].cubic_vertices.end(),
                       std::back_inserter(twin.cubic_set));
            twins.push_back(std::move(twin));
        }
    return twins;
}

Decomposition decompose(const Graph& g)
{
    Decomposition dec;
    dec.tetrahedra = find_tetrahedra(g);
    dec.twins = find_twins(g, dec.tetrahedra);
    return dec;
}

namespace {

std::vector<char> membership(const LandmarkSet& s, std::size_t n)
{
    std::vector<char> in_s(n, 0);
    for (VertexId v : s.ids())
        if (v < n)
            in_s[v] = 1;
    return in_s;
}

std::size_t max_vertex(const std::vector<TwinTetrahedron>& twins, const LandmarkSet& s)
{
    std::size_t n = 0;
    for (const auto& t : twins)
        for (VertexId v : t.cubic_set)
            n = std::max<std::size_t>(n, v + 1);
    for (VertexId v : s.ids())
        n = std::max<std::size_t>(n, v + 1);
    return n;
}

}  // namespace

std::vector<TwinTetrahedron> check_necessary(const LandmarkSet& s,
                                             const std::vector<TwinTetrahedron>& twins)
{
    const auto in_s = membership(s, max_vertex(twins, s));
    std::vector<TwinTetrahedron> violations;
    for (const auto& twin : twins)
        if (count_outside(twin.cubic_set, in_s) >= 2)
            violations.push_back(twin);
    return violations;
}

ConditionReport check_sufficient(const Graph& g, const LandmarkSet& s,
                                 const std::vector<Tetrahedron>& tets,
                                 const std::vector<TwinTetrahedron>& twins)
{
    s.check_range(g.vertex_count());
    ConditionReport report;
    std::vector<char> in_s(g.vertex_count(), 0);
    for (VertexId v : s.ids()) {
        if (g.degree(v) == 3)
            in_s[v] = 1;
        else
            report.ignored_noncubic.push_back(v);
    }
    std::sort(report.ignored_noncubic.begin(), report.ignored_noncubic.end());

    for (const auto& twin : twins)
        if (count_outside(twin.cubic_set, in_s) >= 2)
            report.twin_violations.push_back(twin);
    for (const auto& tet : tets) {
        const std::size_t inside = tet.cubic_vertices.size() -
                                   count_outside(tet.cubic_vertices, in_s);
        switch (tet.kind) {
        case TetrahedronKind::type_i:
            if (inside < 2)
                report.type_i_violations.push_back(tet);
            break;
        case TetrahedronKind::type_ii:
            if (inside < 1)
                report.type_ii_violations.push_back(tet);
            break;
        case TetrahedronKind::isolated:
            if (inside < 3)
                report.isolated_violations.push_back(tet);
            break;
        case TetrahedronKind::other:
            break;
        }
    }
    report.sufficient = report.twin_violations.empty() && report.type_i_violations.empty() &&
                        report.type_ii_violations.empty() && report.isolated_violations.empty();
    return report;
}

int lemma_lower_bound(const SilicateSpec& spec)
{
    validate(spec);
    const int n = spec.n;
    switch (spec.family) {
    case Family::chain:
        // A single K4 needs 3; CS_2 is one twin whose six cubic vertices
        // admit at most one exclusion.
        if (n == 1)
            return 3;
        if (n == 2)
            return 5;
        return n % 2 == 0 ? 3 * (n / 2 - 2) + 4 * 2 : 3 * (n + 1) / 2;
    case Family::cyclic:
        return n % 2 == 0 ? 3 * n / 2 : 3 * (n + 1) / 2 - 1;
    case Family::skeleton:
        break;
    }
    throw Error("no lower bound is available for skeleton silicates");
}

std::string decomposition_json(const Decomposition& dec,
                               const std::vector<std::pair<LandmarkSet, ConditionReport>>& reports)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["format"] = "silicate-decomposition";
    j["version"] = 1;
    ordered_json tets = ordered_json::array();
    for (const auto& t : dec.tetrahedra)
        tets.push_back({{"vertices", t.vertices},
                        {"cubic_vertices", t.cubic_vertices},
                        {"kind", to_string(t.kind)}});
    j["tetrahedra"] = tets;
    ordered_json twins = ordered_json::array();
    for (const auto& t : dec.twins)
        twins.push_back({{"tetrahedra", {t.left, t.right}},
                         {"hinge", t.hinge},
                         {"cubic_set", t.cubic_set}});
    j["twins"] = twins;

    auto tet_list = [](const std::vector<Tetrahedron>& v) {
        ordered_json out = ordered_json::array();
        for (const auto& t : v)
            out.push_back(t.vertices);
        return out;
    };
    ordered_json conds = ordered_json::array();
    for (const auto& [set, rep] : reports) {
        ordered_json twin_v = ordered_json::array();
        for (const auto& t : rep.twin_violations)
            twin_v.push_back({{"hinge", t.hinge}, {"cubic_set", t.cubic_set}});
        conds.push_back({{"landmarks", std::vector<VertexId>(set.ids().begin(), set.ids().end())},
                         {"twin_violations", twin_v},
                         {"type_i_violations", tet_list(rep.type_i_violations)},
                         {"type_ii_violations", tet_list(rep.type_ii_violations)},
                         {"isolated_violations", tet_list(rep.isolated_violations)},
                         {"ignored_noncubic", rep.ignored_noncubic},
                         {"sufficient", rep.sufficient}});
    }
    j["conditions"] = conds;
    return j.dump(2) + "\n";
}

}  // namespace emd
