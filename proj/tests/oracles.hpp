#pragma once

// Test-only reference implementations. They share nothing with the library
// beyond the Graph container: distances come from boolean matrix powers and
// resolving checks compare every pair of codes directly.

#include "emd/graph.hpp"

#include <optional>
#include <random>
#include <vector>

namespace oracle {

using emd::Graph;
using emd::VertexId;

using Matrix = std::vector<std::vector<int>>;

/// d(u, v) = smallest k with (A + I)^k [u][v] != 0; -1 if never reached.
inline Matrix matrix_power_distances(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> step(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        step[u][u] = 1;
        for (std::size_t v = 0; v < n; ++v)
            if (g.has_edge(u, v))
                step[u][v] = 1;
    }
    Matrix dist(n, std::vector<int>(n, -1));
    auto reach = std::vector<std::vector<char>>(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
        reach[u][u] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (reach[u][v] && dist[u][v] < 0)
                    dist[u][v] = static_cast<int>(k);
        std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t w = 0; w < n; ++w)
                if (reach[u][w])
                    for (std::size_t v = 0; v < n; ++v)
                        if (step[w][v])
                            next[u][v] = 1;
        reach = std::move(next);
    }
    return dist;
}

inline bool resolves(const Graph& g, const Matrix& dist, const std::vector<VertexId>& s,
                     bool edges)
{
    auto code = [&](std::size_t i) {
        std::vector<int> c;
        for (VertexId w : s) {
            if (edges) {
                auto e = g.edges()[i];
                c.push_back(std::min(dist[e.u][w], dist[e.v][w]));
            }
            else {
                c.push_back(dist[i][w]);
            }
        }
        return c;
    };
    const std::size_t count = edges ? g.edge_count() : g.vertex_count();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (code(i) == code(j))
                return false;
    return true;
}

struct Answer {
    int dimension = -1;
    std::vector<VertexId> witness;
};

/// Plain exhaustive search: sizes 0, 1, 2, ... and lexicographic subsets
/// within a size; the first hit is returned.
inline Answer naive_minimum(const Graph& g, bool edges)
{
    const Matrix dist = matrix_power_distances(g);
    const int n = static_cast<int>(g.vertex_count());
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        for (;;) {
            std::vector<VertexId> s(idx.begin(), idx.end());
            if (resolves(g, dist, s, edges))
                return {k, s};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return {};
}

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng)
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 1; v < n; ++v) {
        std::uniform_int_distribution<VertexId> parent(0, v - 1);
        pairs.emplace_back(parent(rng), v);
    }
    std::bernoulli_distribution extra(p);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (extra(rng))
                pairs.emplace_back(u, v);
    return emd::build_graph(n, pairs);
}

}  // namespace oracle
