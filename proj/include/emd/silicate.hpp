#pragma once

#include "emd/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace emd {

enum class Family { chain, cyclic, skeleton };

std::string_view to_string(Family f);
/// Parses "chain", "cyclic" or "skeleton"; throws Error otherwise.
Family parse_family(std::string_view name);

struct SilicateSpec {
    Family family = Family::chain;
    int n = 1;
    std::optional<Graph> skeleton;
};

/// Throws Error when the spec is outside its family's valid range.
void validate(const SilicateSpec& spec);

using Tetrahedron4 = std::array<VertexId, 4>;

/// A silicate network together with the tetrahedra it was assembled from.
///
/// Each tetrahedron tuple is sorted ascending. For chain and cyclic
/// silicates tetrahedron i corresponds to skeleton vertex w_{i+1}; for
/// skeleton silicates to the i-th canonical skeleton edge.
struct LabeledSilicate {
    Family family = Family::chain;
    int n = 0;
    Graph graph;
    std::vector<Tetrahedron4> tetrahedra;
    std::vector<VertexId> shared_vertices;                // ascending
    std::vector<std::vector<VertexId>> private_vertices;  // per tetrahedron, ascending
};

/// CS_n: n tetrahedra glued in a row, consecutive ones sharing one corner.
///
/// Ids are assigned in first-appearance order while emitting tetrahedra
/// 1..n; each tetrahedron emits its unseen vertices as (shared with
/// previous, privates..., shared with next). CS_2 is therefore
/// {0,1,2,3} + {3,4,5,6}.
LabeledSilicate chain_silicate(int n);

/// CC_n (n >= 3): every edge of an n-cycle replaced by a tetrahedron.
/// Same numbering rule as chain_silicate; the last tetrahedron closes the
/// ring through vertex 0.
LabeledSilicate cyclic_silicate(int n);

/// Replaces every edge of a connected simple base graph by a tetrahedron.
/// Base vertices keep their ids; the two private vertices of the i-th
/// canonical base edge are |V| + 2i and |V| + 2i + 1.
LabeledSilicate silicate_of_skeleton(const Graph& base);

LabeledSilicate make_silicate(const SilicateSpec& spec);

/// Structure sidecar written next to an edge list by the generate command.
std::string structure_json(const LabeledSilicate& s);

}  // namespace emd
