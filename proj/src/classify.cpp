#include "lcc/liere.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcc {

Integer center_class_order(const RootSystem& rs, const Weight& lambda) {
    const int n = rs.rank();
    Integer order = 1;
    for (int i = 0; i < n; ++i) {
        Integer num = 0;
        for (int j = 0; j < n; ++j) num += lambda[j] * rs.cartan_adjugate()[j][i];
        Rational c(num, rs.cartan_det());
        c.canonicalize();
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return order;
}

Integer kernel_order(const RootSystem& rs, const Weight& lambda) {
    return abs(rs.cartan_det()) / center_class_order(rs, lambda);
}

std::string image_group_label(const RootSystem& rs, const Weight& lambda) {
    const int n = rs.rank();
    const Integer ker = kernel_order(rs, lambda);
    const std::string k = ker.get_str();
    auto quotient = [&](const std::string& base) { return ker == 1 ? base : base + "/mu_" + k; };
    switch (rs.type()) {
        case 'A': return quotient("Sl_" + std::to_string(n + 1));
        case 'B': return ker == 1 ? "Spin_" + std::to_string(2 * n + 1) : "SO_" + std::to_string(2 * n + 1);
        case 'C': return ker == 1 ? "Sp_" + std::to_string(2 * n) : "PSp_" + std::to_string(2 * n);
        case 'D': {
            std::string m = std::to_string(2 * n);
            if (ker == 4) return "PSO_" + m;
            // Same class as varpi_1 means the image is SO; half-spin images
            // keep the table's "Spin" name.
            Weight delta = lambda;
            delta[0] -= 1;
            if (ker == 2 && center_class_order(rs, delta) == 1) return "SO_" + m;
            return "Spin_" + m;
        }
        case 'E': return quotient("E_" + std::to_string(n));
        case 'F': return "F_4";
        case 'G': return "G_2";
    }
    return rs.name();
}

std::vector<Weight> dominant_weights_up_to_dim(const RootSystem& rs, const Integer& max_dim) {
    const int n = rs.rank();
    Weight zero(n, 0);
    std::set<Weight> seen{zero};
    std::vector<Weight> frontier{zero}, found;
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (int i = 0; i < n; ++i) {
                Weight v = w;
                ++v[i];
                if (!seen.insert(v).second) continue;
                // weyl_dim is strictly increasing in each coordinate.
                if (weyl_dim(rs, v) > max_dim) continue;
                next.push_back(v);
                found.push_back(v);
            }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [&](const Weight& a, const Weight& b) {
        Integer da = weyl_dim(rs, a), db = weyl_dim(rs, b);
        return da != db ? da < db : a > b;
    });
    return found;
}

std::vector<WmfEntry> classify_wmf(int max_rank, const Integer& max_dim, ClassifyOptions opt) {
    std::vector<WmfEntry> out;
    for (const auto& rs : simple_types(max_rank)) {
        for (const auto& lambda : dominant_weights_up_to_dim(*rs, max_dim)) {
            if (opt.self_dual_only && !self_dual(*rs, lambda)) continue;
            if (!is_wmf(*rs, lambda)) continue;
            WmfEntry e;
            e.rs = rs;
            e.lambda = lambda;
            e.dim = weyl_dim(*rs, lambda);
            e.minuscule = is_minuscule(*rs, lambda);
            e.quasi_minuscule = is_quasi_minuscule(*rs, lambda);
            e.fs = fs_type(*rs, lambda);
            e.image = image_group_label(*rs, lambda);
            e.kernel = kernel_order(*rs, lambda);
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<QmMatch> quasi_minuscule_dim_search(const Integer& dim, int max_rank) {
    std::vector<QmMatch> out;
    for (const auto& rs : simple_types(max_rank))
        for (const auto& lambda : dominant_weights_up_to_dim(*rs, dim)) {
            Integer d = weyl_dim(*rs, lambda);
            if (d == dim && is_quasi_minuscule(*rs, lambda)) out.push_back({rs, lambda, d});
        }
    return out;
}

bool orbit_rank_bound(const RootSystem& rs, const Weight& w) {
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return true;
    return orbit_size(rs, w) >= rs.rank();
}

bool root_multiple_condition(const RootSystem& rs, const Weight& lambda) {
    // A dominant weight is a multiple of a root iff it is a positive multiple
    // of a dominant root, i.e. of the highest or highest short root.
    auto parallel = [&](const Weight& mu, const Weight& r) {
        for (int i = 0; i < rs.rank(); ++i) {
            if (static_cast<long>(mu[i]) * r[i] < 0) return false;
            for (int j = 0; j < rs.rank(); ++j)
                if (static_cast<long>(mu[i]) * r[j] != static_cast<long>(mu[j]) * r[i]) return false;
        }
        return true;
    };
    Weight zero(rs.rank(), 0);
    for (const auto& mu : dominant_weights(rs, lambda)) {
        if (mu == zero) continue;
        if (parallel(mu, rs.highest_root()) || parallel(mu, rs.highest_short_root())) return true;
    }
    return false;
}

}  // namespace lcc
