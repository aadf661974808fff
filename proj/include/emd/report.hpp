#pragma once

#include "emd/silicate.hpp"
#include "emd/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace emd {

struct TableRow {
    Family family = Family::chain;
    int n = 0;
    int lower_bound = 0;
    int constructed_size = 0;
    bool constructed_verified = false;
    std::optional<int> exact_dimension;
    int predicted = 0;
    /// Every present value equals `predicted` and the constructed set resolves.
    bool agree = false;
};

struct TableOptions {
    /// Subsets the exact solver may evaluate per row; 0 skips the exact column.
    std::uint64_t budget_subsets = 0;
    unsigned workers = 1;
};

TableRow table_row(Family family, int n, const TableOptions& opts);
std::vector<TableRow> build_table(Family family, int n_from, int n_to, const TableOptions& opts);

std::string table_text(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace emd
