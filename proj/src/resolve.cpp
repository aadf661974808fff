#include "emd/resolve.hpp"

#include <json.hpp>

#include <numeric>

namespace emd {

LandmarkSet::LandmarkSet(std::vector<VertexId> ids) : ids_(std::move(ids))
{
    std::vector<VertexId> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw Error("landmark set lists vertex " + std::to_string(*dup) + " twice");
}

LandmarkSet::LandmarkSet(std::initializer_list<VertexId> ids)
    : LandmarkSet(std::vector<VertexId>(ids))
{
}

bool LandmarkSet::contains(VertexId v) const
{
    return std::find(ids_.begin(), ids_.end(), v) != ids_.end();
}

void LandmarkSet::check_range(std::size_t vertex_count) const
{
    for (VertexId v : ids_)
        if (v >= vertex_count)
            throw GraphError("landmark " + std::to_string(v) + " is not a vertex (graph has " +
                             std::to_string(vertex_count) + " vertices)");
}

std::string_view to_string(Target t)
{
    return t == Target::edge ? "edge" : "vertex";
}

Target parse_target(std::string_view name)
{
    if (name == "edge")
        return Target::edge;
    if (name == "vertex")
        return Target::vertex;
    throw Error("unknown target '" + std::string(name) + "' (expected edge or vertex)");
}

Code vertex_code(const DistanceMatrix& d, VertexId v, const LandmarkSet& x)
{
    Code code;
    code.reserve(x.size());
    for (VertexId u : x.ids())
        code.push_back(d(v, u));
    return code;
}

Code edge_code(const DistanceMatrix& d, Edge e, const LandmarkSet& s)
{
    Code code;
    code.reserve(s.size());
    for (VertexId u : s.ids())
        code.push_back(edge_vertex_distance(d, e, u));
    return code;
}

std::optional<std::pair<std::size_t, std::size_t>>
first_duplicate(std::span<const Distance> codes, std::size_t count, std::size_t width)
{
    if (count < 2)
        return std::nullopt;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto code_of = [&](std::size_t i) { return codes.subspan(i * width, width); };
    // Ties keep index order, so within each run of equal codes the first two
    // entries are the two smallest indices of that class.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ca = code_of(a), cb = code_of(b);
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    });
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t k = 1; k < count; ++k) {
        auto ca = code_of(order[k - 1]), cb = code_of(order[k]);
        if (!std::equal(ca.begin(), ca.end(), cb.begin()))
            continue;
        bool run_start = k == 1 || !std::equal(ca.begin(), ca.end(), code_of(order[k - 2]).begin());
        if (!run_start)
            continue;
        std::pair candidate{order[k - 1], order[k]};
        if (!best || candidate < *best)
            best = candidate;
    }
    return best;
}

EdgeVerification is_edge_resolving(const Graph& g, const DistanceMatrix& d, const LandmarkSet& s)
{
    s.check_range(g.vertex_count());
    const auto edges = g.edges();
    std::vector<Distance> packed;
    packed.reserve(edges.size() * s.size());
    for (const Edge& e : edges)
        for (VertexId u : s.ids())
            packed.push_back(edge_vertex_distance(d, e, u));
    EdgeVerification result;
    if (auto dup = first_duplicate(packed, edges.size(), s.size()))
        result.witness = std::pair{edges[dup->first], edges[dup->second]};
    result.resolving = !result.witness;
    return result;
}

EdgeVerification is_edge_resolving(const Graph& g, const LandmarkSet& s)
{
    return is_edge_resolving(g, all_pairs_distances(g), s);
}

VertexVerification is_vertex_resolving(const Graph& g, const DistanceMatrix& d,
                                       const LandmarkSet& x)
{
    x.check_range(g.vertex_count());
    const std::size_t n = g.vertex_count();
    std::vector<Distance> packed;
    packed.reserve(n * x.size());
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : x.ids())
            packed.push_back(d(v, u));
    VertexVerification result;
    if (auto dup = first_duplicate(packed, n, x.size()))
        result.witness = std::pair{static_cast<VertexId>(dup->first),
                                   static_cast<VertexId>(dup->second)};
    result.resolving = !result.witness;
    return result;
}

VertexVerification is_vertex_resolving(const Graph& g, const LandmarkSet& x)
{
    return is_vertex_resolving(g, all_pairs_distances(g), x);
}

std::string verification_json(const GraphDescriptor& graph, const Graph& g,
                              const DistanceMatrix& d, const LandmarkSet& s, Target target,
                              bool with_codes)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["format"] = "emd-verification";
    j["version"] = 1;
    ordered_json desc;
    if (!graph.family.empty()) {
        desc["family"] = graph.family;
        desc["n"] = graph.n;
    }
    desc["vertex_count"] = graph.vertex_count;
    desc["edge_count"] = graph.edge_count;
    j["graph"] = desc;
    j["target"] = to_string(target);
    j["landmarks"] = std::vector<VertexId>(s.ids().begin(), s.ids().end());

    auto edge_pair = [](Edge e) { return std::array<VertexId, 2>{e.u, e.v}; };
    if (target == Target::edge) {
        auto r = is_edge_resolving(g, d, s);
        j["resolving"] = r.resolving;
        j["witness"] = r.witness ? ordered_json::array({edge_pair(r.witness->first),
                                                        edge_pair(r.witness->second)})
                                 : ordered_json(nullptr);
        if (with_codes) {
            ordered_json table = ordered_json::array();
            for (const Edge& e : g.edges())
                table.push_back({{"edge", edge_pair(e)}, {"code", edge_code(d, e, s)}});
            j["codes"] = table;
        }
    }
    else {
        auto r = is_vertex_resolving(g, d, s);
        j["resolving"] = r.resolving;
        j["witness"] = r.witness ? ordered_json::array({r.witness->first, r.witness->second})
                                 : ordered_json(nullptr);
        if (with_codes) {
            ordered_json table = ordered_json::array();
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                table.push_back({{"vertex", v}, {"code", vertex_code(d, v, s)}});
            j["codes"] = table;
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace emd
