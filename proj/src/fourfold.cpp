#include "lcc/schottky.hpp"

#include <stdexcept>

namespace lcc {

namespace {

Weight fundamental(int rank, int i) {
    Weight w(rank, 0);
    w[i - 1] = 1;
    return w;
}

[[noreturn]] void inconsistent(const std::string& what) {
    throw std::logic_error("fourfold_table: " + what);
}

}  // namespace

FourfoldTable fourfold_table() {
    const int g = 4;
    FourfoldTable t;

    // Smooth theta divisor: Sp_24 acting on its standard representation.
    {
        PpavInput p{g, 0};
        auto cc = cc_odp(p);
        auto grp = theta_group(p);
        if (!grp.determined) inconsistent("smooth case undetermined");
        auto rs = RootSystem::make('C', static_cast<int>(grp.size / 2));
        Weight w = fundamental(rs->rank(), 1);
        t.rows.push_back({"A4sm", orbit_size(*rs, w).get_str(), weyl_dim(*rs, w).get_str(), "varpi_1", grp.label, ""});
        t.cc_degree.push_back(degree(cc).get_str());
    }

    // Nonhyperelliptic Jacobian: two ordinary double points, Alt^3 of Sl_{c0}.
    {
        PpavInput p{g, 2};
        auto cc = cc_odp(p);
        auto sol = fake_jacobian_solve(g, cc, false);
        if (!sol.feasible) inconsistent("nonhyperelliptic degree equation has no solution");
        auto rs = RootSystem::make('A', static_cast<int>(sol.c0.get_si()) - 1);
        Weight w = fundamental(rs->rank(), g - 1);
        Character alt = char_alt(g - 1, freudenthal_character(rs, fundamental(rs->rank(), 1)));
        auto parts = decompose(alt);
        if (parts.size() != 1 || parts[0].first != w) inconsistent("Alt^3 of the standard is not irreducible");
        t.rows.push_back({"J4nh", orbit_size(*rs, w).get_str(), weyl_dim(*rs, w).get_str(), "varpi_3",
                          image_group_label(*rs, w), ""});
        t.cc_degree.push_back(degree(cc).get_str());
    }

    // Hyperelliptic Jacobian: Sp_{2g-2} on Alt^{g-1}/Alt^{g-3} of the standard.
    {
        const int c0 = 2 * g - 2;
        auto rs = RootSystem::make('C', c0 / 2);
        Character std1 = freudenthal_character(rs, fundamental(rs->rank(), 1));
        Character quotient = char_add(char_alt(g - 1, std1), char_alt(g - 3, std1), -1);
        auto parts = decompose(quotient);
        Weight w = fundamental(rs->rank(), g - 1);
        if (parts.size() != 1 || parts[0].first != w || parts[0].second != 1)
            inconsistent("Alt^3/Alt^1 of the C3 standard is not irreducible");
        Integer dim = quotient.dimension();
        auto sol = fake_jacobian_solve_degree(g, dim, true);
        if (!sol.feasible || sol.c0 != c0) inconsistent("hyperelliptic degree equation disagrees");
        t.rows.push_back({"J4h", orbit_size(*rs, w).get_str(), dim.get_str(), "varpi_3", image_group_label(*rs, w), ""});
        t.cc_degree.push_back(dim.get_str());
    }

    // Vanishing theta nulls: k = 1..10 ordinary double points.
    {
        bool linear = true;
        for (int k = 1; k <= 10; ++k) {
            PpavInput p{g, k};
            p.gauss_finite = true;
            p.non_jacobian = true;
            auto cc = cc_odp(p);
            auto grp = theta_group(p);
            if (!grp.determined) inconsistent("theta-null group undetermined at k=" + std::to_string(k));
            auto rs = RootSystem::make('C', static_cast<int>(grp.size / 2));
            Weight w = fundamental(rs->rank(), 1);
            Integer deg = orbit_size(*rs, w), dim = weyl_dim(*rs, w);
            if (deg != 24 - 2 * k || dim != 24 - 2 * k || degree(cc) != dim) linear = false;
            t.theta_null.emplace_back(k, deg, dim, grp.label);
        }
        if (!linear) inconsistent("theta-null row is not 24 - 2k");
        t.rows.push_back({"Theta_null^k", "24-2k", "24-2k", "varpi_1", "Sp_{24-2k}",
                          "assuming the Gauss map is finite if k=2"});
        t.cc_degree.push_back("24-2k");
    }
    return t;
}

}  // namespace lcc
