#pragma once

#include "emd/resolve.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace emd {

struct SolveOptions {
    Target target = Target::edge;
    /// First size tried. Sizes below it are still confirmed infeasible, so a
    /// wrong start only costs time. Defaults to 1.
    std::optional<int> start_size;
    std::optional<int> max_size;
    /// Search only degree-3 vertices. Not exact in general: the result is
    /// marked conditional unless `confirm_unrestricted` proves size
    /// dimension - 1 infeasible over all vertices.
    bool restrict_to_cubic = false;
    bool confirm_unrestricted = true;
    unsigned parallel_workers = 1;
    /// Stop after this many candidate sets have been evaluated.
    std::optional<std::uint64_t> budget_subsets;
    /// Skip sets that leave two cubic vertices of one tetrahedron or twin
    /// tetrahedron uncovered (edge target on silicate networks only).
    bool structure_pruning = true;
};

struct SolveStats {
    std::uint64_t subsets_examined = 0;
    double elapsed_ms = 0.0;
};

struct Certificate {
    Target target = Target::edge;
    /// Set only when the search reached a verdict (optimal or conditional).
    std::optional<int> dimension;
    /// Lexicographically smallest resolving set of size `dimension`
    /// (ascending ids).
    LandmarkSet witness;
    /// Largest size proven to admit no resolving set; -1 if none.
    int infeasible_size_checked = -1;
    bool optimal = false;
    bool restricted_to_cubic = false;
    bool upper_bound_conditional = false;
    int lower_bound = 0;
    int upper_bound = 0;
    SolveStats stats;
};

Certificate exact_edge_metric_dimension(const Graph& g, SolveOptions opts = {});
Certificate exact_metric_dimension(const Graph& g, SolveOptions opts = {});
Certificate solve(const Graph& g, const SolveOptions& opts);

/// True iff no single deletion from S still resolves. Throws Error if S is
/// not resolving in the first place.
bool is_minimal(const Graph& g, const LandmarkSet& s, Target target);

struct CertificateContext {
    std::string family;  // empty when unknown
    int n = 0;
    std::string source = "exact-solver";
};

/// Certificate JSON. Timing is left out unless requested so that runs with
/// different worker counts produce identical bytes.
std::string certificate_json(const Certificate& c, const CertificateContext& ctx,
                             bool include_timing = false);

}  // namespace emd
