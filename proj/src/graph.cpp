#include "emd/graph.hpp"

#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace emd {

DisconnectedGraph::DisconnectedGraph(VertexId source, VertexId unreachable)
    : Error("graph is disconnected: vertex " + std::to_string(unreachable) +
            " is unreachable from vertex " + std::to_string(source)),
      source_(source),
      unreachable_(unreachable)
{
}

bool Graph::has_edge(VertexId a, VertexId b) const
{
    if (a >= vertex_count() || b >= vertex_count())
        return false;
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::ptrdiff_t Graph::edge_index(VertexId a, VertexId b) const
{
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return -1;
    return it - edges_.begin();
}

bool Graph::is_connected() const
{
    if (vertex_count() == 0)
        return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertex_count();
}

Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<VertexId, VertexId>> edge_list)
{
    Graph g;
    g.adjacency_.resize(vertex_count);
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a >= vertex_count || b >= vertex_count)
            throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") has an id outside [0, " + std::to_string(vertex_count) + ")");
        if (a == b)
            throw GraphError("self-loop at vertex " + std::to_string(a));
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : g.adjacency_)
        std::sort(adj.begin(), adj.end());
    g.edges_ = std::move(edges);
    return g;
}

Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<VertexId, VertexId>> edge_list)
{
    return build_graph(vertex_count,
                       std::span<const std::pair<VertexId, VertexId>>(edge_list.begin(),
                                                                      edge_list.size()));
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Distance> entries)
    : n_(n), d_(std::move(entries))
{
    if (d_.size() != n_ * n_)
        throw Error("distance matrix needs n*n entries");
}

Distance DistanceMatrix::diameter() const
{
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

namespace {

constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

void bfs_into(const Graph& g, VertexId source, std::span<Distance> out)
{
    std::fill(out.begin(), out.end(), kUnreached);
    std::deque<VertexId> queue{source};
    out[source] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v))
            if (out[w] == kUnreached) {
                out[w] = static_cast<Distance>(out[v] + 1);
                queue.push_back(w);
            }
    }
    for (std::size_t v = 0; v < out.size(); ++v)
        if (out[v] == kUnreached)
            throw DisconnectedGraph(source, static_cast<VertexId>(v));
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, VertexId source)
{
    if (source >= g.vertex_count())
        throw GraphError("source vertex " + std::to_string(source) + " out of range");
    std::vector<Distance> row(g.vertex_count());
    bfs_into(g, source, row);
    return row;
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned workers)
{
    const std::size_t n = g.vertex_count();
    std::vector<Distance> entries(n * n);
    auto rows = [&](std::size_t first, std::size_t step) {
        for (std::size_t s = first; s < n; s += step)
            bfs_into(g, static_cast<VertexId>(s), {entries.data() + s * n, n});
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers <= 1) {
        rows(0, 1);
    }
    else {
        // Each thread owns disjoint rows; the first failure is rethrown.
        std::vector<std::exception_ptr> failures(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    rows(w, workers);
                }
                catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto& f : failures)
            if (f)
                std::rethrow_exception(f);
    }
    return DistanceMatrix(n, std::move(entries));
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

Graph parse_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;

    auto fail = [&](const std::string& why) {
        throw GraphError("edge list line " + std::to_string(line_no) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c' || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string tag;
            if (!(fields >> tag >> vertex_count >> edge_count) || tag != "p")
                fail("expected header 'p <vertex_count> <edge_count>'");
            have_header = true;
            continue;
        }
        long long a = -1, b = -1;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            fail("expected 'u v'");
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertex_count ||
            static_cast<std::size_t>(b) >= vertex_count)
            fail("vertex id out of range");
        pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (!have_header)
        throw GraphError("edge list is empty (missing 'p' header)");
    if (pairs.size() != edge_count)
        throw GraphError("edge list header announces " + std::to_string(edge_count) +
                         " edges but " + std::to_string(pairs.size()) + " were given");
    Graph g = build_graph(vertex_count, pairs);
    if (g.edge_count() != edge_count)
        throw GraphError("edge list contains duplicate edges");
    return g;
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot open " + path);
    return parse_edge_list(in);
}

}  // namespace emd
