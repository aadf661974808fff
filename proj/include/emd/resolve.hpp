#pragma once

#include "emd/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace emd {

/// Ordered set of distinct landmark vertices. Codes are order-sensitive.
class LandmarkSet {
public:
    LandmarkSet() = default;
    /// Throws Error on duplicate ids.
    explicit LandmarkSet(std::vector<VertexId> ids);
    LandmarkSet(std::initializer_list<VertexId> ids);

    std::span<const VertexId> ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(VertexId v) const;
    VertexId operator[](std::size_t i) const { return ids_[i]; }

    /// Throws GraphError if any id is not a vertex of a graph of this size.
    void check_range(std::size_t vertex_count) const;

    friend bool operator==(const LandmarkSet&, const LandmarkSet&) = default;

private:
    std::vector<VertexId> ids_;
};

using Code = std::vector<Distance>;

enum class Target { edge, vertex };

std::string_view to_string(Target t);
Target parse_target(std::string_view name);

/// Outcome of a resolving-set check. When not resolving, `witness` holds the
/// lexicographically first pair (by canonical object index) with equal codes.
template <class Object>
struct VerificationResult {
    bool resolving = false;
    std::optional<std::pair<Object, Object>> witness;
};

using EdgeVerification = VerificationResult<Edge>;
using VertexVerification = VerificationResult<VertexId>;

Code vertex_code(const DistanceMatrix& d, VertexId v, const LandmarkSet& x);
Code edge_code(const DistanceMatrix& d, Edge e, const LandmarkSet& s);

EdgeVerification is_edge_resolving(const Graph& g, const DistanceMatrix& d, const LandmarkSet& s);
EdgeVerification is_edge_resolving(const Graph& g, const LandmarkSet& s);
VertexVerification is_vertex_resolving(const Graph& g, const DistanceMatrix& d,
                                       const LandmarkSet& x);
VertexVerification is_vertex_resolving(const Graph& g, const LandmarkSet& x);

/// Index pair (i < j) of the lexicographically first duplicate among
/// `count` packed codes of `width` entries each, or nullopt if all differ.
/// `codes` is laid out object-major.
std::optional<std::pair<std::size_t, std::size_t>>
first_duplicate(std::span<const Distance> codes, std::size_t count, std::size_t width);

struct GraphDescriptor {
    std::string family;  // empty when unknown
    int n = 0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
};

/// Verification certificate JSON; the code table is emitted only when
/// `with_codes` is set.
std::string verification_json(const GraphDescriptor& graph, const Graph& g,
                              const DistanceMatrix& d, const LandmarkSet& s, Target target,
                              bool with_codes);

}  // namespace emd
