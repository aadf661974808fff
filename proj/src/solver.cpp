#include "emd/solver.hpp"

#include "emd/structure.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

namespace emd {

namespace {

constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

// Immutable search data shared by all workers.
struct SearchSpace {
    std::size_t object_count = 0;
    Distance max_distance = 0;
    // columns[c] = distance from every object to candidate c
    std::vector<std::vector<Distance>> columns;
    std::vector<VertexId> candidates;  // ascending
    // groups_of[c] = exclusion groups candidate c belongs to. A group is a
    // set of vertices of which at most one may be left out of a resolving set.
    std::vector<std::vector<std::uint32_t>> groups_of;
    std::size_t group_count = 0;
};

struct LevelResult {
    std::optional<std::vector<VertexId>> witness;
    std::uint64_t examined = 0;
    bool aborted = false;
};

// Shared, monotone state for one size level.
struct LevelControl {
    std::atomic<std::size_t> next_block{0};
    std::atomic<std::size_t> best_block{kNoBlock};
    std::atomic<std::uint64_t>* total_examined = nullptr;
    std::optional<std::uint64_t> budget;
    std::atomic<bool> budget_hit{false};
};

struct BlockResult {
    std::optional<std::vector<VertexId>> witness;
    std::uint64_t examined = 0;
    bool completed = false;
};

// Depth-first lexicographic enumeration of k-subsets with incremental
// partition refinement of the objects' codes.
class Worker {
public:
    Worker(const SearchSpace& space, std::size_t k)
        : space_(space),
          k_(k),
          classes_(k + 1, std::vector<std::uint32_t>(space.object_count, 0)),
          class_count_(k + 1, space.object_count ? 1 : 0),
          excluded_(space.group_count, 0),
          chosen_(k)
    {
        stamp_.assign(space.object_count * (space.max_distance + 1u) + 1, 0);
        label_.assign(stamp_.size(), 0);
    }

    BlockResult run(std::span<const std::size_t> prefix, std::size_t block, LevelControl& ctl)
    {
        block_ = block;
        ctl_ = &ctl;
        result_ = {};
        stopped_ = false;
        std::fill(excluded_.begin(), excluded_.end(), 0);

        std::size_t next = 0;
        bool feasible = true;
        for (std::size_t depth = 0; depth < prefix.size() && feasible; ++depth) {
            for (std::size_t c = next; c < prefix[depth] && feasible; ++c)
                feasible = exclude(c);
            choose(depth, prefix[depth]);
            next = prefix[depth] + 1;
        }
        if (feasible)
            descend(prefix.size(), next);
        result_.completed = !stopped_;
        flush();
        return std::move(result_);
    }

private:
    bool exclude(std::size_t c)
    {
        bool ok = true;
        for (auto grp : space_.groups_of[c])
            ok = ++excluded_[grp] < 2 && ok;
        return ok;
    }

    void include(std::size_t c)
    {
        for (auto grp : space_.groups_of[c])
            --excluded_[grp];
    }

    void choose(std::size_t depth, std::size_t c)
    {
        chosen_[depth] = c;
        refine(depth, c);
    }

    // classes_[depth + 1] = classes_[depth] split by the distances to candidate c.
    void refine(std::size_t depth, std::size_t c)
    {
        const auto& col = space_.columns[c];
        const auto& from = classes_[depth];
        auto& to = classes_[depth + 1];
        const std::size_t width = space_.max_distance + 1u;
        if (++generation_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            generation_ = 1;
        }
        std::uint32_t count = 0;
        for (std::size_t o = 0; o < space_.object_count; ++o) {
            const std::size_t key = from[o] * width + col[o];
            if (stamp_[key] != generation_) {
                stamp_[key] = generation_;
                label_[key] = count++;
            }
            to[o] = label_[key];
        }
        class_count_[depth + 1] = count;
    }

    void descend(std::size_t depth, std::size_t next)
    {
        if (stopped_ || result_.witness)
            return;
        const std::size_t n = space_.candidates.size();
        if (depth == k_) {
            leaf(next);
            return;
        }
        const std::size_t last = n - (k_ - depth);
        std::size_t undo_to = next;
        for (std::size_t c = next; c <= last; ++c) {
            choose(depth, c);
            descend(depth + 1, c + 1);
            if (stopped_ || result_.witness)
                break;
            // Past this point c is left out of every remaining subset.
            const bool ok = exclude(c);
            undo_to = c + 1;
            if (!ok)
                break;
        }
        for (std::size_t c = next; c < undo_to; ++c)
            include(c);
    }

    void leaf(std::size_t next)
    {
        const std::size_t n = space_.candidates.size();
        bool feasible = true;
        std::size_t c = next;
        for (; c < n && feasible; ++c)
            feasible = exclude(c);
        for (std::size_t u = next; u < c; ++u)
            include(u);
        if (!feasible)
            return;

        ++result_.examined;
        ++pending_;
        if (class_count_[k_] == space_.object_count) {
            std::vector<VertexId> w;
            for (std::size_t i = 0; i < k_; ++i)
                w.push_back(space_.candidates[chosen_[i]]);
            result_.witness = std::move(w);
            return;
        }
        if (pending_ >= 4096)
            flush();
    }

    void flush()
    {
        if (pending_ == 0 && !stopped_) {
            check_stop();
            return;
        }
        const auto total = ctl_->total_examined->fetch_add(pending_) + pending_;
        pending_ = 0;
        if (ctl_->budget && total > *ctl_->budget)
            ctl_->budget_hit = true;
        check_stop();
    }

    void check_stop()
    {
        if (ctl_->budget_hit || ctl_->best_block.load() < block_)
            stopped_ = true;
    }

    const SearchSpace& space_;
    std::size_t k_;
    std::vector<std::vector<std::uint32_t>> classes_;
    std::vector<std::uint32_t> class_count_;
    std::vector<int> excluded_;
    std::vector<std::size_t> chosen_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> label_;
    std::uint32_t generation_ = 0;
    std::uint64_t pending_ = 0;
    std::size_t block_ = 0;
    LevelControl* ctl_ = nullptr;
    BlockResult result_;
    bool stopped_ = false;
};

// Fixed-prefix blocks in lexicographic order: single first elements for
// k == 1, (first, second) pairs for k >= 2.
std::vector<std::vector<std::size_t>> make_blocks(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> blocks;
    if (k == 0 || k > n) {
        if (k == 0)
            blocks.push_back({});
        return blocks;
    }
    if (k == 1) {
        for (std::size_t a = 0; a < n; ++a)
            blocks.push_back({a});
        return blocks;
    }
    for (std::size_t a = 0; a + k <= n; ++a)
        for (std::size_t b = a + 1; b + k - 1 <= n; ++b)
            blocks.push_back({a, b});
    return blocks;
}

LevelResult search_level(const SearchSpace& space, std::size_t k, unsigned workers,
                         std::atomic<std::uint64_t>& total, std::optional<std::uint64_t> budget)
{
    const auto blocks = make_blocks(space.candidates.size(), k);
    std::vector<BlockResult> results(blocks.size());
    LevelControl ctl;
    ctl.total_examined = &total;
    ctl.budget = budget;
    if (budget && total.load() > *budget)
        ctl.budget_hit = true;

    auto work = [&] {
        Worker worker(space, k);
        for (;;) {
            const std::size_t b = ctl.next_block.fetch_add(1);
            if (b >= blocks.size() || ctl.budget_hit)
                return;
            if (ctl.best_block.load() < b)
                continue;
            results[b] = worker.run(blocks[b], b, ctl);
            if (results[b].witness) {
                std::size_t cur = ctl.best_block.load();
                while (b < cur && !ctl.best_block.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks.size())));
    if (workers == 1) {
        work();
    }
    else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    // Deterministic reduction: the first block (in lexicographic order) that
    // holds a witness wins; stats count only blocks up to it.
    LevelResult level;
    const std::size_t winner = ctl.best_block.load();
    const std::size_t end = winner == kNoBlock ? blocks.size() : winner + 1;
    for (std::size_t b = 0; b < end; ++b) {
        if (!results[b].completed && !results[b].witness) {
            level.aborted = true;
            level.examined = 0;
            for (const auto& r : results)
                level.examined += r.examined;
            return level;
        }
        level.examined += results[b].examined;
    }
    if (winner != kNoBlock)
        level.witness = results[winner].witness;
    return level;
}

SearchSpace build_space(const Graph& g, const DistanceMatrix& d, const SolveOptions& opts,
                        bool cubic_only)
{
    SearchSpace space;
    const std::size_t n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        if (!cubic_only || g.degree(v) == 3)
            space.candidates.push_back(v);

    space.max_distance = d.diameter();
    space.object_count = opts.target == Target::edge ? g.edge_count() : n;
    for (VertexId v : space.candidates) {
        std::vector<Distance> col;
        col.reserve(space.object_count);
        if (opts.target == Target::edge)
            for (const Edge& e : g.edges())
                col.push_back(edge_vertex_distance(d, e, v));
        else
            for (VertexId u = 0; u < n; ++u)
                col.push_back(d(u, v));
        space.columns.push_back(std::move(col));
    }

    space.groups_of.assign(space.candidates.size(), {});
    if (opts.target != Target::edge || !opts.structure_pruning)
        return space;
    Decomposition dec;
    try {
        dec = decompose(g);
    }
    catch (const StructureError&) {
        return space;  // not a silicate network: no structural pruning
    }
    // Two cubic vertices p, q of one tetrahedron (or of a twin, around its
    // hinge h) left out of S make the edges hp and hq indistinguishable, so
    // each such cubic set is an exclusion group.
    std::vector<std::vector<VertexId>> groups;
    for (const auto& t : dec.tetrahedra)
        if (t.cubic_vertices.size() >= 2)
            groups.push_back(t.cubic_vertices);
    for (const auto& t : dec.twins)
        groups.push_back(t.cubic_set);

    std::vector<std::ptrdiff_t> index_of(n, -1);
    for (std::size_t c = 0; c < space.candidates.size(); ++c)
        index_of[space.candidates[c]] = static_cast<std::ptrdiff_t>(c);
    for (std::size_t grp = 0; grp < groups.size(); ++grp)
        for (VertexId v : groups[grp])
            if (index_of[v] >= 0)
                space.groups_of[index_of[v]].push_back(static_cast<std::uint32_t>(grp));
    space.group_count = groups.size();
    return space;
}


// Runs size levels over one candidate space and tracks what has been proven.
class Minimizer {
public:
    Minimizer(const SolveOptions& opts, std::atomic<std::uint64_t>& total)
        : opts_(opts), total_(total), workers_(std::max(1u, opts.parallel_workers))
    {
    }

    struct Outcome {
        int proven_infeasible = -1;
        int best_size = -1;
        std::vector<VertexId> best;
        bool exact = false;
    };

    LevelResult level(const SearchSpace& space, int k)
    {
        auto r = search_level(space, static_cast<std::size_t>(k), workers_, total_,
                              opts_.budget_subsets);
        examined_ += r.examined;
        return r;
    }

    /// Smallest resolving size over `space`, starting at `start`. Sizes at or
    /// below `proven` are already known infeasible.
    Outcome minimize(const SearchSpace& space, int start, int proven)
    {
        Outcome out;
        out.proven_infeasible = proven;
        const int n = static_cast<int>(space.candidates.size());
        const int cap = std::min(n, opts_.max_size.value_or(n));
        int k = std::min(std::max(start, proven + 1), cap);
        if (k <= proven)
            return out;

        auto r = level(space, k);
        if (r.aborted)
            return out;
        if (r.witness) {
            out.best_size = k;
            out.best = *r.witness;
            // Confirm downwards; monotonicity makes one infeasible size enough.
            while (out.best_size - 1 > out.proven_infeasible) {
                auto below = level(space, out.best_size - 1);
                if (below.aborted)
                    return out;
                if (!below.witness) {
                    out.proven_infeasible = out.best_size - 1;
                    break;
                }
                --out.best_size;
                out.best = *below.witness;
            }
            out.exact = out.proven_infeasible == out.best_size - 1;
            return out;
        }
        out.proven_infeasible = k;
        for (++k; k <= cap; ++k) {
            auto up = level(space, k);
            if (up.aborted)
                return out;
            if (up.witness) {
                out.best_size = k;
                out.best = *up.witness;
                out.exact = true;
                return out;
            }
            out.proven_infeasible = k;
        }
        return out;
    }

    std::uint64_t examined() const { return examined_; }

private:
    const SolveOptions& opts_;
    std::atomic<std::uint64_t>& total_;
    unsigned workers_;
    std::uint64_t examined_ = 0;
};

void apply(Certificate& cert, const Minimizer::Outcome& out)
{
    cert.infeasible_size_checked = out.proven_infeasible;
    cert.lower_bound = out.proven_infeasible + 1;
    if (out.best_size >= 0) {
        cert.upper_bound = out.best_size;
        cert.witness = LandmarkSet(out.best);
    }
    if (out.exact) {
        cert.dimension = out.best_size;
        cert.optimal = true;
    }
}

}  // namespace

Certificate solve(const Graph& g, const SolveOptions& opts)
{
    if (opts.start_size && *opts.start_size < 0)
        throw Error("start size must be non-negative");
    if (opts.max_size && *opts.max_size < 0)
        throw Error("max size must be non-negative");
    const auto started = std::chrono::steady_clock::now();
    const DistanceMatrix d = all_pairs_distances(g);
    std::atomic<std::uint64_t> total{0};
    Minimizer search(opts, total);

    Certificate cert;
    cert.target = opts.target;
    cert.upper_bound = static_cast<int>(g.vertex_count());
    {
        std::vector<VertexId> all(g.vertex_count());
        std::iota(all.begin(), all.end(), VertexId{0});
        cert.witness = LandmarkSet(std::move(all));
    }
    auto finish = [&] {
        cert.stats.subsets_examined = search.examined();
        cert.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                .count();
        return cert;
    };

    const int start = opts.start_size.value_or(1);
    if (!opts.restrict_to_cubic) {
        apply(cert, search.minimize(build_space(g, d, opts, false), start, -1));
        return finish();
    }

    cert.restricted_to_cubic = true;
    const auto cubic = search.minimize(build_space(g, d, opts, true), start, -1);
    // Infeasibility over cubic vertices proves nothing about other sets.
    if (cubic.best_size >= 0) {
        cert.upper_bound = cubic.best_size;
        cert.witness = LandmarkSet(cubic.best);
    }
    if (!cubic.exact)
        return finish();
    cert.dimension = cubic.best_size;
    cert.upper_bound_conditional = true;
    if (!opts.confirm_unrestricted || cubic.best_size == 0)
        return finish();

    const auto full = build_space(g, d, opts, false);
    const int below = cubic.best_size - 1;
    auto check = search.level(full, below);
    if (check.aborted)
        return finish();
    if (!check.witness) {
        cert.upper_bound_conditional = false;
        cert.optimal = true;
        cert.infeasible_size_checked = below;
        cert.lower_bound = below + 1;
        return finish();
    }
    // Non-cubic vertices do better: continue downwards over all vertices.
    cert.restricted_to_cubic = false;
    cert.upper_bound_conditional = false;
    cert.dimension.reset();
    cert.upper_bound = below;
    cert.witness = LandmarkSet(*check.witness);
    apply(cert, search.minimize(full, below, -1));
    return finish();
}

Certificate exact_edge_metric_dimension(const Graph& g, SolveOptions opts)
{
    opts.target = Target::edge;
    return solve(g, opts);
}

Certificate exact_metric_dimension(const Graph& g, SolveOptions opts)
{
    opts.target = Target::vertex;
    return solve(g, opts);
}

bool is_minimal(const Graph& g, const LandmarkSet& s, Target target)
{
    const DistanceMatrix d = all_pairs_distances(g);
    auto resolves = [&](const LandmarkSet& x) {
        return target == Target::edge ? is_edge_resolving(g, d, x).resolving
                                      : is_vertex_resolving(g, d, x).resolving;
    };
    if (!resolves(s))
        throw Error("is_minimal: the given set is not resolving");
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<VertexId> rest;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop)
                rest.push_back(s[i]);
        if (resolves(LandmarkSet(std::move(rest))))
            return false;
    }
    return true;
}

std::string certificate_json(const Certificate& c, const CertificateContext& ctx,
                             bool include_timing)
{
    nlohmann::ordered_json j;
    j["format"] = "emd-certificate";
    j["version"] = 1;
    j["source"] = ctx.source;
    if (!ctx.family.empty()) {
        j["family"] = ctx.family;
        j["n"] = ctx.n;
    }
    else {
        j["family"] = nullptr;
        j["n"] = nullptr;
    }
    j["target"] = to_string(c.target);
    j["dimension"] = c.dimension ? nlohmann::ordered_json(*c.dimension) : nullptr;
    j["optimal"] = c.optimal;
    j["witness"] = std::vector<VertexId>(c.witness.ids().begin(), c.witness.ids().end());
    j["infeasible_size_checked"] = c.infeasible_size_checked;
    j["lower_bound"] = c.lower_bound;
    j["upper_bound"] = c.upper_bound;
    j["restricted_to_cubic"] = c.restricted_to_cubic;
    j["upper_bound_conditional"] = c.upper_bound_conditional;
    nlohmann::ordered_json stats;
    stats["subsets_examined"] = c.stats.subsets_examined;
    if (include_timing)
        stats["elapsed_ms"] = c.stats.elapsed_ms;
    j["stats"] = stats;
    return j.dump(2) + "\n";
}

}  // namespace emd
