#include "emd/silicate.hpp"

#include <json.hpp>

namespace emd {

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::chain: return "chain";
    case Family::cyclic: return "cyclic";
    case Family::skeleton: return "skeleton";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    if (name == "chain")
        return Family::chain;
    if (name == "cyclic")
        return Family::cyclic;
    if (name == "skeleton")
        return Family::skeleton;
    throw Error("unknown silicate family '" + std::string(name) + "'");
}

void validate(const SilicateSpec& spec)
{
    switch (spec.family) {
    case Family::chain:
        if (spec.n < 1)
            throw Error("chain silicate needs n >= 1, got " + std::to_string(spec.n));
        break;
    case Family::cyclic:
        if (spec.n < 3)
            throw Error("cyclic silicate needs n >= 3, got " + std::to_string(spec.n));
        break;
    case Family::skeleton:
        if (!spec.skeleton)
            throw Error("skeleton silicate needs a base graph");
        break;
    }
}

namespace {

// Finishes a silicate from its tetrahedra: builds the graph and the
// shared/private partition.
LabeledSilicate assemble(Family family, int n, std::size_t vertex_count,
                         std::vector<Tetrahedron4> tets)
{
    LabeledSilicate s;
    s.family = family;
    s.n = n;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(tets.size() * 6);
    std::vector<int> membership(vertex_count, 0);
    for (auto& t : tets) {
        std::sort(t.begin(), t.end());
        for (int a = 0; a < 4; ++a) {
            ++membership[t[a]];
            for (int b = a + 1; b < 4; ++b)
                pairs.emplace_back(t[a], t[b]);
        }
    }
    s.graph = build_graph(vertex_count, pairs);
    for (VertexId v = 0; v < vertex_count; ++v)
        if (membership[v] >= 2)
            s.shared_vertices.push_back(v);
    for (const auto& t : tets) {
        std::vector<VertexId> priv;
        for (VertexId v : t)
            if (membership[v] == 1)
                priv.push_back(v);
        s.private_vertices.push_back(std::move(priv));
    }
    s.tetrahedra = std::move(tets);
    return s;
}

}  // namespace

LabeledSilicate chain_silicate(int n)
{
    validate({Family::chain, n, std::nullopt});
    std::vector<Tetrahedron4> tets;
    VertexId next = 0;
    for (int i = 0; i < n; ++i) {
        Tetrahedron4 t{};
        int k = 0;
        if (i > 0)
            t[k++] = next - 1;  // corner shared with the previous tetrahedron
        while (k < 4)
            t[k++] = next++;
        tets.push_back(t);
    }
    return assemble(Family::chain, n, 3 * static_cast<std::size_t>(n) + 1, std::move(tets));
}

LabeledSilicate cyclic_silicate(int n)
{
    validate({Family::cyclic, n, std::nullopt});
    std::vector<Tetrahedron4> tets;
    const auto count = static_cast<VertexId>(3 * n);
    for (int i = 0; i < n; ++i) {
        const auto base = static_cast<VertexId>(3 * i);
        tets.push_back({base, base + 1, base + 2, (base + 3) % count});
    }
    return assemble(Family::cyclic, n, count, std::move(tets));
}

LabeledSilicate silicate_of_skeleton(const Graph& base)
{
    if (base.edge_count() == 0)
        throw Error("skeleton needs at least one edge");
    if (!base.is_connected())
        throw Error("skeleton graph must be connected");
    const auto nv = static_cast<VertexId>(base.vertex_count());
    std::vector<Tetrahedron4> tets;
    VertexId next = nv;
    for (const Edge& e : base.edges()) {
        tets.push_back({e.u, e.v, next, next + 1});
        next += 2;
    }
    return assemble(Family::skeleton, static_cast<int>(base.edge_count()), next,
                    std::move(tets));
}

LabeledSilicate make_silicate(const SilicateSpec& spec)
{
    validate(spec);
    switch (spec.family) {
    case Family::chain: return chain_silicate(spec.n);
    case Family::cyclic: return cyclic_silicate(spec.n);
    case Family::skeleton: return silicate_of_skeleton(*spec.skeleton);
    }
    throw Error("unreachable family");
}

std::string structure_json(const LabeledSilicate& s)
{
    nlohmann::ordered_json j;
    j["format"] = "silicate-structure";
    j["version"] = 1;
    j["family"] = to_string(s.family);
    j["n"] = s.n;
    j["vertex_count"] = s.graph.vertex_count();
    j["edge_count"] = s.graph.edge_count();
    j["tetrahedra"] = s.tetrahedra;
    j["shared_vertices"] = s.shared_vertices;
    j["private_vertices"] = s.private_vertices;
    return j.dump(2) + "\n";
}

}  // namespace emd
