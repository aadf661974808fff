#pragma once

#include "emd/resolve.hpp"
#include "emd/silicate.hpp"

#include <string>
#include <vector>

namespace emd {

/// Structural error: the graph has no edge-disjoint K4 cover.
class StructureError : public Error {
public:
    StructureError(const std::string& what, Edge uncovered)
        : Error(what), uncovered_(uncovered) {}
    Edge uncovered() const noexcept { return uncovered_; }

private:
    Edge uncovered_;
};

enum class TetrahedronKind {
    type_i,    // three cubic vertices: an end of a chain
    type_ii,   // two cubic vertices
    isolated,  // four cubic vertices: the whole graph is one K4 (CS_1)
    other,     // zero or one cubic vertex; only in general skeletons
};

std::string_view to_string(TetrahedronKind k);

struct Tetrahedron {
    Tetrahedron4 vertices{};               // ascending
    std::vector<VertexId> cubic_vertices;  // ascending, graph degree 3
    TetrahedronKind kind = TetrahedronKind::other;

    friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

/// Two cover tetrahedra sharing exactly one vertex (the hinge).
struct TwinTetrahedron {
    std::size_t left = 0;   // index into the tetrahedron list, left < right
    std::size_t right = 0;
    VertexId hinge = 0;
    std::vector<VertexId> cubic_set;  // ascending union of both cubic sets
};

/// The unique edge-disjoint K4 cover of a silicate network.
///
/// Tetrahedra are ordered by their smallest cubic vertex (ties and
/// cubic-free tetrahedra by vertex tuple), which reproduces the generator
/// order for chain, cyclic and skeleton silicates. Throws StructureError
/// naming an edge no cover tetrahedron can take.
std::vector<Tetrahedron> find_tetrahedra(const Graph& g);

/// Every unordered pair of tetrahedra that share exactly one vertex.
std::vector<TwinTetrahedron> find_twins(const Graph& g, const std::vector<Tetrahedron>& tets);

struct Decomposition {
    std::vector<Tetrahedron> tetrahedra;
    std::vector<TwinTetrahedron> twins;
};

Decomposition decompose(const Graph& g);

/// Twins with at least two cubic vertices outside S. Any edge resolving set
/// must leave this list empty.
std::vector<TwinTetrahedron> check_necessary(const LandmarkSet& s,
                                             const std::vector<TwinTetrahedron>& twins);

struct ConditionReport {
    std::vector<TwinTetrahedron> twin_violations;     // |C \ S| >= 2
    std::vector<Tetrahedron> type_i_violations;       // |S ∩ C| < 2
    std::vector<Tetrahedron> type_ii_violations;      // |S ∩ C| < 1
    std::vector<Tetrahedron> isolated_violations;     // |S ∩ C| < 3
    std::vector<VertexId> ignored_noncubic;           // members of S that are not cubic
    bool sufficient = false;
};

/// Evaluates the cubic-vertex conditions on S. Only cubic members of S are
/// counted; others are reported in `ignored_noncubic`.
ConditionReport check_sufficient(const Graph& g, const LandmarkSet& s,
                                 const std::vector<Tetrahedron>& tets,
                                 const std::vector<TwinTetrahedron>& twins);

/// Lower bound on the edge metric dimension of CS_n / CC_n from the
/// twin-counting argument. Throws Error for the skeleton family.
int lemma_lower_bound(const SilicateSpec& spec);

std::string decomposition_json(const Decomposition& dec,
                               const std::vector<std::pair<LandmarkSet, ConditionReport>>& reports);

}  // namespace emd
