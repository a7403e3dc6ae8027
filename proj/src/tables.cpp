#include "lcc/tables.hpp"

#include <set>

namespace lcc {

namespace {

Weight unit(int rank, int i) {
    Weight w(rank, 0);
    w[i - 1] = 1;
    return w;
}

FsType by_residue(int n, std::set<int> symp, std::set<int> orth) {
    if (symp.count(n % 4)) return FsType::symplectic;
    if (orth.count(n % 4)) return FsType::orthogonal;
    return FsType::none;
}

}  // namespace

std::optional<TablePrediction> table_prediction(const RootSystem& rs, const Weight& lambda) {
    const int r = rs.rank();
    int nonzero = 0, at = -1;
    for (int i = 0; i < r; ++i)
        if (lambda[i] != 0) {
            ++nonzero;
            at = i + 1;
        }
    if (nonzero != 1) return std::nullopt;
    const int c = lambda[at - 1];
    auto pow2 = [](int k) -> Integer { return Integer(1) << k; };
    TablePrediction p;
    switch (rs.type()) {
        case 'A': {
            const int n = r + 1;
            if (c == 1) {
                p = {2, "Sl_n/mu_(k,n)", "C(n,k)", binomial(n, at), true,
                     (n == 2 * at) ? (n % 4 == 0 ? FsType::orthogonal : FsType::symplectic) : FsType::none};
                return p;
            }
            if (at == 1 || at == r) {
                p = {3, "Sl_n/mu_(k,n)", "C(n+k-1,k)", binomial(n + c - 1, c), false, FsType::none};
                return p;
            }
            return std::nullopt;
        }
        case 'B':
            if (c != 1) return std::nullopt;
            if (at == r) return TablePrediction{2, "Spin_{2n+1}", "2^n", pow2(r), true, by_residue(r, {1, 2}, {0, 3})};
            if (at == 1) return TablePrediction{3, "SO_{2n+1}", "2n+1", 2 * r + 1, false, FsType::orthogonal};
            return std::nullopt;
        case 'C':
            if (c != 1) return std::nullopt;
            if (at == 1) return TablePrediction{2, "Sp_{2n}", "2n", 2 * r, true, FsType::symplectic};
            if (r == 3 && at == 3) return TablePrediction{3, "Sp_6", "14", 14, false, FsType::symplectic};
            return std::nullopt;
        case 'D':
            if (c != 1) return std::nullopt;
            if (at == 1) return TablePrediction{2, "SO_{2n}", "2n", 2 * r, true, FsType::orthogonal};
            if (at >= r - 1) return TablePrediction{2, "Spin_{2n}", "2^{n-1}", pow2(r - 1), true, by_residue(r, {2}, {0})};
            return std::nullopt;
        case 'E':
            if (c != 1) return std::nullopt;
            if (r == 6 && (at == 1 || at == 6)) return TablePrediction{2, "E_6", "27", 27, true, FsType::none};
            if (r == 7 && at == 7) return TablePrediction{2, "E_7", "56", 56, true, FsType::symplectic};
            return std::nullopt;
        case 'G':
            if (c == 1 && at == 1) return TablePrediction{3, "G_2", "7", 7, false, FsType::orthogonal};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::size_t TableCheck::mismatches() const {
    std::size_t m = missing.size();
    for (const auto& r : rows)
        if (!r.ok()) ++m;
    return m;
}

TableCheck compare_with_tables(const std::vector<WmfEntry>& entries, int max_rank, const Integer& max_dim) {
    TableCheck out;
    std::set<std::pair<std::string, Weight>> seen;
    for (const auto& e : entries) {
        TableRowCheck row{e, table_prediction(*e.rs, e.lambda)};
        if (row.prediction) {
            row.dim_ok = row.prediction->dim == e.dim;
            row.minuscule_ok = row.prediction->minuscule == e.minuscule;
            row.fs_ok = row.prediction->fs == e.fs;
        }
        seen.insert({e.rs->name(), e.lambda});
        out.rows.push_back(std::move(row));
    }
    // Every tabulated highest weight within the bounds must have been classified.
    for (const auto& rs : simple_types(max_rank)) {
        const int r = rs->rank();
        std::vector<Weight> cands;
        for (int i = 1; i <= r; ++i) cands.push_back(unit(r, i));
        for (int end : {1, r})
            for (int k = 2;; ++k) {
                Weight w(r, 0);
                w[end - 1] = k;
                auto p = table_prediction(*rs, w);
                if (!p || p->dim > max_dim) break;
                cands.push_back(w);
            }
        for (const auto& w : cands) {
            auto p = table_prediction(*rs, w);
            if (!p || p->dim > max_dim) continue;
            if (!seen.count({rs->name(), w})) {
                seen.insert({rs->name(), w});
                out.missing.emplace_back(rs, w);
            }
        }
    }
    return out;
}

}  // namespace lcc
