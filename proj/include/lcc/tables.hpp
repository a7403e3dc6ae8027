#pragma once

#include "lcc/liere.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcc {

// What the published minuscule (table 2) and weight multiplicity free
// nonminuscule (table 3) tables assert about one highest weight.
struct TablePrediction {
    int table = 0;
    std::string column;   // image group as printed, e.g. "Sl_n/mu_(k,n)"
    std::string formula;  // dimension formula as printed
    Integer dim;
    bool minuscule = false;
    FsType fs = FsType::none;
};

std::optional<TablePrediction> table_prediction(const RootSystem& rs, const Weight& lambda);

struct TableRowCheck {
    WmfEntry entry;
    std::optional<TablePrediction> prediction;
    bool dim_ok = false, minuscule_ok = false, fs_ok = false;
    bool ok() const { return prediction && dim_ok && minuscule_ok && fs_ok; }
};

struct TableCheck {
    std::vector<TableRowCheck> rows;                      // one per classified entry
    std::vector<std::pair<RootSystemPtr, Weight>> missing;  // tabulated but not classified
    std::size_t mismatches() const;
};

TableCheck compare_with_tables(const std::vector<WmfEntry>& entries, int max_rank, const Integer& max_dim);

}  // namespace lcc
