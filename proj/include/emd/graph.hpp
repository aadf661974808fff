#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace emd {

using VertexId = std::uint32_t;
using Distance = std::uint16_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph input: out-of-range ids, self-loops, unparsable text.
class GraphError : public Error {
public:
    using Error::Error;
};

class DisconnectedGraph : public Error {
public:
    DisconnectedGraph(VertexId source, VertexId unreachable);

    VertexId source() const noexcept { return source_; }
    VertexId unreachable() const noexcept { return unreachable_; }

private:
    VertexId source_;
    VertexId unreachable_;
};

/// Undirected edge with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph with canonical edge order.
///
/// Vertices are the dense ids [0, vertex_count). Adjacency lists are sorted
/// ascending and the edge list is sorted lexicographically by (u, v), so two
/// graphs built from the same edge set are identical regardless of input
/// order.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(VertexId a, VertexId b) const;

    /// Position of the edge in the canonical edge list, or -1.
    std::ptrdiff_t edge_index(VertexId a, VertexId b) const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>);

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Edge> edges_;
};

/// Builds a canonical graph. Duplicate pairs (in either orientation) collapse.
/// Throws GraphError on out-of-range ids or self-loops.
Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<VertexId, VertexId>> edge_list);

Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<VertexId, VertexId>> edge_list);

/// All-pairs hop distances, stored row-major.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<Distance> entries);

    std::size_t size() const noexcept { return n_; }
    Distance operator()(VertexId u, VertexId v) const { return d_[u * n_ + v]; }
    std::span<const Distance> row(VertexId u) const { return {d_.data() + u * n_, n_}; }
    Distance diameter() const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Distance> d_;
};

/// Single-source BFS. Throws DisconnectedGraph naming the first unreachable
/// vertex.
std::vector<Distance> bfs_distances(const Graph& g, VertexId source);

/// Row-stacked BFS from every vertex. With workers > 1 the rows are computed
/// on separate threads; the result is identical to the sequential one.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned workers = 1);

/// d(e, u) = min(d(e.u, u), d(e.v, u)).
inline Distance edge_vertex_distance(const DistanceMatrix& d, Edge e, VertexId u)
{
    return std::min(d(e.u, u), d(e.v, u));
}

// Edge-list text format:
//   p <vertex_count> <edge_count>
//   u v            (one per line, 0-based, u < v, sorted)
// Lines starting with 'c' are comments and are skipped by the parser.
std::string format_edge_list(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace emd
