#include "emd/report.hpp"

#include "emd/construct.hpp"
#include "emd/structure.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace emd {

TableRow table_row(Family family, int n, const TableOptions& opts)
{
    const SilicateSpec spec{family, n, std::nullopt};
    const LabeledSilicate sil = make_silicate(spec);

    TableRow row;
    row.family = family;
    row.n = n;
    row.lower_bound = lemma_lower_bound(spec);
    row.predicted = predicted_dimension(family, n);
    const LandmarkSet constructed = construct_ers(sil, labeling_for(family, n));
    row.constructed_size = static_cast<int>(constructed.size());
    row.constructed_verified = is_edge_resolving(sil.graph, constructed).resolving;

    if (opts.budget_subsets > 0) {
        SolveOptions so;
        so.start_size = row.lower_bound;
        so.budget_subsets = opts.budget_subsets;
        so.parallel_workers = opts.workers;
        const Certificate cert = exact_edge_metric_dimension(sil.graph, so);
        if (cert.optimal)
            row.exact_dimension = cert.dimension;
    }

    row.agree = row.constructed_verified && row.lower_bound == row.predicted &&
                row.constructed_size == row.predicted &&
                (!row.exact_dimension || *row.exact_dimension == row.predicted);
    return row;
}

std::vector<TableRow> build_table(Family family, int n_from, int n_to, const TableOptions& opts)
{
    if (n_from > n_to)
        throw Error("empty range: from " + std::to_string(n_from) + " > to " +
                    std::to_string(n_to));
    std::vector<TableRow> rows;
    for (int n = n_from; n <= n_to; ++n)
        rows.push_back(table_row(family, n, opts));
    return rows;
}

std::string table_text(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "# silicate-emd table v1\n";
    out << std::left << std::setw(8) << "family" << std::right << std::setw(5) << "n"
        << std::setw(8) << "lower" << std::setw(13) << "constructed" << std::setw(10)
        << "verified" << std::setw(7) << "exact" << std::setw(11) << "predicted"
        << std::setw(7) << "agree" << '\n';
    for (const auto& r : rows) {
        out << std::left << std::setw(8) << to_string(r.family) << std::right << std::setw(5)
            << r.n << std::setw(8) << r.lower_bound << std::setw(13) << r.constructed_size
            << std::setw(10) << (r.constructed_verified ? "yes" : "no") << std::setw(7)
            << (r.exact_dimension ? std::to_string(*r.exact_dimension) : "-") << std::setw(11)
            << r.predicted << std::setw(7) << (r.agree ? "yes" : "NO") << '\n';
    }
    return out.str();
}

std::string table_json(const std::vector<TableRow>& rows)
{
    nlohmann::ordered_json j;
    j["format"] = "emd-table";
    j["version"] = 1;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["family"] = to_string(r.family);
        row["n"] = r.n;
        row["lower_bound"] = r.lower_bound;
        row["constructed_size"] = r.constructed_size;
        row["constructed_verified"] = r.constructed_verified;
        row["exact_dimension"] =
            r.exact_dimension ? nlohmann::ordered_json(*r.exact_dimension) : nullptr;
        row["predicted"] = r.predicted;
        row["agree"] = r.agree;
        arr.push_back(row);
    }
    j["rows"] = arr;
    return j.dump(2) + "\n";
}

}  // namespace emd
