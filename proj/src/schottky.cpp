#include "lcc/schottky.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace lcc {

Integer odp_divisor_degree(int g, int k) { return factorial(g) - 2 * Integer(k); }

namespace {

constexpr long kMaxFiberPoints = 6000;

struct FiberBuilder {
    int free = 0;
    std::vector<std::int64_t> torsion;  // cyclic factors, in creation order
    struct Point {
        std::vector<std::pair<int, int>> free_coeffs;   // (generator, coefficient)
        std::vector<std::pair<int, int>> torsion_coeffs;  // (factor, residue)
    };
    std::vector<Point> points;

    int new_free() { return free++; }
    int new_torsion(std::int64_t d) {
        torsion.push_back(d);
        return static_cast<int>(torsion.size()) - 1;
    }

    GroupRingElement build() const {
        // Invariant-factor order: ascending cyclic orders 2 | 4 or 2 | 2 | 2.
        std::vector<int> order(torsion.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return torsion[a] < torsion[b]; });
        std::vector<std::int64_t> sorted;
        std::vector<int> slot(torsion.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sorted.push_back(torsion[order[i]]);
            slot[order[i]] = static_cast<int>(i);
        }
        FgAbelianGroup group(free, sorted);
        GroupRingElement x(group);
        for (const auto& p : points) {
            GroupElement e = group.zero();
            for (auto [gen, c] : p.free_coeffs) e[gen] += c;
            for (auto [t, r] : p.torsion_coeffs) e[free + slot[t]] += r;
            x.add_term(e, 1);
        }
        return x;
    }
};

void check_input(const PpavInput& p) {
    if (p.g < 2) throw std::invalid_argument("cc_odp: requires g >= 2");
    if (p.k < 0) throw std::invalid_argument("cc_odp: requires k >= 0");
    if (p.g > 20) throw std::invalid_argument("cc_odp: g too large for the model");
    if (odp_divisor_degree(p.g, p.k) <= 0) throw std::invalid_argument("cc_odp: g! - 2k must be positive");
}

}  // namespace

CleanCycleModel cc_odp(const PpavInput& p) {
    check_input(p);
    const int g = p.g;
    const Integer N = odp_divisor_degree(g, p.k);
    CleanCycleModel c;
    c.g = g;

    CycleComponent theta;
    theta.label = "Theta";
    theta.dim = g - 1;
    theta.gauss_finite = p.gauss_finite;
    // Isolated singularities: c_{M,i} = [Theta]^{g-i} = (g-i)! mu_i for i >= 1.
    theta.cm = ChowVector(g);
    theta.cm[0] = Rational(N);
    for (int i = 1; i < g; ++i) theta.cm[i] = Rational(factorial(g - i));
    c.components.push_back(theta);

    const bool odd = g % 2 == 1;
    if (odd)
        for (int i = 1; i <= p.k; ++i) c.components.push_back(point_component(g, "e" + std::to_string(i)));

    // Fiber over a very general covector.
    const Integer total = N + (odd ? p.k : 0);
    if (total > kMaxFiberPoints) return c;
    FiberBuilder fb;
    const long n = N.get_si();
    if (p.stabilizer_trivial) {
        for (long j = 0; j < n / 2; ++j) {
            int x = fb.new_free();
            fb.points.push_back({{{x, 1}}, {}});
            fb.points.push_back({{{x, -1}}, {}});
        }
    } else {
        if (n % 4 != 0)
            throw std::invalid_argument("cc_odp: a 2-torsion stabilizer needs 4 | g! - 2k (flag stabilizer_trivial)");
        int s = fb.new_torsion(2);
        for (long j = 0; j < n / 4; ++j) {
            int x = fb.new_free();
            for (int sign : {1, -1}) {
                fb.points.push_back({{{x, sign}}, {}});
                fb.points.push_back({{{x, sign}}, {{s, 1}}});
            }
        }
    }
    if (odd && p.k > 0) {
        if (p.pairwise_torsion_independent) {
            // A symmetric set of double points is a union of pairs +-y and
            // 2-torsion points; independence allows at most one of the latter.
            if (p.k % 2 == 0 && !p.double_points_sum_zero)
                throw std::invalid_argument(
                    "cc_odp: an even number of pairwise torsion independent symmetric points sums to zero "
                    "(flags double_points_sum_zero / pairwise_torsion_independent)");
            for (int j = 0; j < p.k / 2; ++j) {
                int y = fb.new_free();
                fb.points.push_back({{{y, 1}}, {}});
                fb.points.push_back({{{y, -1}}, {}});
            }
            if (p.k % 2 == 1) {
                if (p.double_points_sum_zero) fb.points.push_back({{}, {}});
                else fb.points.push_back({{}, {{fb.new_torsion(2), 1}}});
            }
        } else if (p.k == 2) {
            if (p.double_points_sum_zero) {
                int t = fb.new_torsion(4);  // e1 = -e2 of order 4
                fb.points.push_back({{}, {{t, 1}}});
                fb.points.push_back({{}, {{t, 3}}});
            } else {
                int a = fb.new_torsion(2), b = fb.new_torsion(2);
                fb.points.push_back({{}, {{a, 1}}});
                fb.points.push_back({{}, {{b, 1}}});
            }
        } else {
            return c;  // no recipe for torsion-dependent configurations
        }
    }
    c.fiber = fb.build();
    validate(c);
    return c;
}

namespace {

std::vector<long> sorted_unique(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<long>& v, long x) { return std::binary_search(v.begin(), v.end(), x); }

long lie_algebra_dim(const RootSystem& rs) {
    return rs.rank() + 2 * static_cast<long>(rs.positive_roots().size());
}

bool is_standard(const RootSystem& rs, const Weight& lambda) {
    if (rs.type() != 'B' && rs.type() != 'C' && rs.type() != 'D') return false;
    Weight v1(rs.rank(), 0);
    v1[0] = 1;
    return lambda == v1;
}

struct Alternative {
    std::string text;
    long lie_dim;
};

// Irreducible wmf representations of dimension n with the given type; for
// symplectic ones only minuscule, matching the S-set definitions.
std::vector<Alternative> alternatives(long n, FsType fs) {
    std::vector<Alternative> out;
    for (const auto& e : classify_wmf(s_set_rank_bound(n), n, {true})) {
        if (e.dim != n || e.fs != fs || is_standard(*e.rs, e.lambda)) continue;
        if (fs == FsType::symplectic && !e.minuscule) continue;
        out.push_back({e.rs->name() + " " + weight_label(e.lambda) + " (" + e.image + ")", lie_algebra_dim(*e.rs)});
    }
    return out;
}

GroupDescriptor settle(GroupDescriptor d, long n, FsType fs, long classical_lie_dim, bool in_set) {
    if (!in_set) {
        d.determined = true;
        d.reason = "dimension outside the exceptional set";
        return d;
    }
    bool all_coincide = true;
    for (const auto& a : alternatives(n, fs)) {
        d.alternatives.push_back(a.text);
        if (a.lie_dim != classical_lie_dim) all_coincide = false;
    }
    if (all_coincide) {
        d.determined = true;
        d.reason = "exceptional dimension, but every alternative has the same Lie algebra dimension";
    } else {
        d.determined = false;
        d.reason = "undetermined: exceptional dimension";
    }
    return d;
}

}  // namespace

int s_set_rank_bound(long bound) {
    return std::max(2, static_cast<int>(std::bit_width(static_cast<unsigned long>(std::max(bound, 1L)))) + 1);
}

SSets s_sets(long bound) {
    if (bound < 1) throw std::invalid_argument("s_sets: bound must be >= 1");
    std::vector<long> minus{56}, plus{7};
    for (long n = 1;; ++n) {
        Integer c = binomial(2 * n, n);
        if (c > bound) break;
        (n % 2 ? minus : plus).push_back(c.get_si());
    }
    for (long n = 1; n < 62 && (1L << n) <= bound; ++n) {
        long r = n % 4;
        (r == 1 || r == 2 ? minus : plus).push_back(1L << n);
    }
    SSets s;
    for (long x : sorted_unique(minus))
        if (x <= bound) s.minus.push_back(x);
    for (long x : sorted_unique(plus))
        if (x <= bound) s.plus.push_back(x);
    return s;
}

SSets s_sets_from_classification(long bound, int max_rank) {
    std::vector<long> minus, plus;
    for (const auto& e : classify_wmf(max_rank, bound, {true})) {
        if (is_standard(*e.rs, e.lambda)) continue;
        long d = e.dim.get_si();
        if (e.fs == FsType::symplectic && e.minuscule) minus.push_back(d);
        if (e.fs == FsType::orthogonal) plus.push_back(d);
    }
    return {sorted_unique(minus), sorted_unique(plus)};
}

GroupDescriptor theta_group(const PpavInput& p) {
    check_input(p);
    GroupDescriptor d;
    if (p.g > 12) {
        d.reason = "undetermined: g too large for the model";
        return d;
    }
    if (!p.symmetric) {
        d.reason = "undetermined: theta divisor not symmetric (flag symmetric)";
        return d;
    }
    const long gfac = factorial(p.g).get_si();
    if (p.g % 2 == 0) {
        const long n = gfac - 2L * p.k;
        d.family = "Sp";
        d.size = n;
        d = settle(d, n, FsType::symplectic, n * (n + 1) / 2, contains(s_sets(n).minus, n));
        if (!d.determined && p.g == 4 && p.k == 2) {
            if (p.gauss_finite && p.non_jacobian) {
                d.determined = true;
                d.reason =
                    "Sl_6/mu_3 would give [3]_*cc = Alt^3(Lambda) with Lambda supported over a curve, "
                    "forcing a Jacobian; excluded by flags gauss_finite and non_jacobian";
            } else {
                d.reason += " (g=4, k=2 needs flags gauss_finite and non_jacobian)";
            }
        }
    } else {
        const long n = gfac - p.k;
        d.family = p.double_points_sum_zero ? "SO" : "O";
        d.size = n;
        if (p.pairwise_torsion_independent) {
            d = settle(d, n, FsType::orthogonal, n * (n - 1) / 2, contains(s_sets(n).plus, n));
        } else if (p.g == 5 && p.k == 2) {
            // Weights: one orbit of size deg(Lambda_Theta) = 116 plus at most
            // two more weights; rank <= 2 Weyl groups are too small for that,
            // and rank > 2 forces a single nonzero orbit (quasi-minuscule).
            const Integer big = odp_divisor_degree(p.g, p.k);
            bool small_rank_excluded = true;
            for (const auto& rs : simple_types(2))
                if (rs->rank() <= 2 && rs->weyl_group_order() >= big) small_rank_excluded = false;
            auto qm = quasi_minuscule_dim_search(n, 20);
            if (small_rank_excluded && qm.empty()) {
                d.determined = true;
                d.reason = "quasi-minuscule search in dimension " + std::to_string(n) +
                           " (rank <= 20) is empty and rank <= 2 is excluded by orbit sizes";
            } else {
                d.reason = "undetermined: quasi-minuscule alternative found";
                for (const auto& m : qm) d.alternatives.push_back(m.rs->name() + " " + weight_label(m.lambda));
            }
        } else {
            d.reason = "undetermined: double points differ by torsion (flag pairwise_torsion_independent)";
        }
    }
    if (d.determined) d.label = d.family + "_" + std::to_string(d.size);
    return d;
}

Integer alt_cm1_coefficient(int k, const Integer& c0) {
    if (k <= 0) return 0;
    Rational s = 0;
    const SymExpr ek = schur_to_powersum(Partition::ones(k));
    for (const auto& [beta, m] : ek.terms())
        s += m * Rational(cm1_partition_product(beta, c0));
    if (!is_integer(s)) throw std::logic_error("alt_cm1_coefficient: non-integral");
    return s.get_num();
}

Genus5Record genus5_obstruction(const CleanCycleModel& cc) {
    if (cc.g != 5) throw std::invalid_argument("genus5_obstruction: requires g = 5");
    if (cc.valid_through() < 1) throw std::invalid_argument("genus5_obstruction: c_{M,1} of the cycle is unknown");
    for (const auto& comp : cc.components)
        if (comp.dim != 0 && comp.dim != cc.g - 1)
            throw std::invalid_argument(
                "genus5_obstruction: requires isolated singularities (components of dim 0 or g-1 only)");
    Genus5Record r;
    r.g = 5;
    const int n = r.g - 1;
    r.c0 = 2 * r.g - 2;
    r.fake_dimension = binomial(r.c0.get_si(), n);
    auto e4 = schur_to_powersum(Partition::ones(n));
    auto parts = partitions(n);
    std::reverse(parts.begin(), parts.end());
    Rational alt = 0;
    for (const auto& beta : parts) {
        PartitionCoefficient pc{beta, e4.coefficient(beta), cm1_partition_product(beta, r.c0)};
        alt += pc.m * Rational(pc.cm1_factor);
        r.partitions.push_back(pc);
    }
    if (!is_integer(alt)) throw std::logic_error("genus5_obstruction: non-integral Alt coefficient");
    r.alt_coefficient = alt.get_num();
    r.e = r.g - 1;
    r.cc_cm1 = ChowVector(r.g);
    r.cc_cm1[1] = total_cm(cc)[1];
    r.left_side = pushforward_n(r.e.get_si(), r.cc_cm1);
    r.c1 = fraction(1, r.alt_coefficient) * r.left_side;
    r.integral = is_integral(r.c1);
    r.verdict = r.integral ? "not excluded at degree 1"
                           : "excluded: not a nonhyperelliptic fake Jacobian with isolated singularities";
    return r;
}

Genus5Record genus5_obstruction(const PpavInput& p) {
    if (p.g != 5) throw std::invalid_argument("genus5_obstruction: requires g = 5");
    return genus5_obstruction(cc_odp(p));
}

namespace {

FakeJacobianSolution solve_degree(int g, const Integer& degree, bool hyper) {
    if (g < 2) throw std::invalid_argument("fake_jacobian_solve: requires g >= 2");
    FakeJacobianSolution s;
    s.g = g;
    s.hyperelliptic = hyper;
    s.target_degree = degree;
    auto f = [&](long c) -> Integer { return binomial(c, g - 1) - (hyper ? binomial(c, g - 3) : Integer(0)); };
    for (long c = 0;; ++c) {
        Integer v = f(c);
        if (v == degree) s.c0_solutions.push_back(c);
        if (c > 2L * g + 2 && v > degree) break;
    }
    if (s.c0_solutions.empty()) {
        s.reason = "not a fake Jacobian: no integer c0 solves the degree equation";
        return s;
    }
    s.feasible = true;
    s.c0 = s.c0_solutions.front();
    s.e = hyper ? std::gcd(2, g - 1) : g - 1;
    s.c1_coefficient = alt_cm1_coefficient(g - 1, s.c0) - (hyper ? alt_cm1_coefficient(g - 3, s.c0) : Integer(0));
    if (s.c0_solutions.size() > 1) s.reason = "degree equation has several solutions; using the smallest";
    return s;
}

}  // namespace

FakeJacobianSolution fake_jacobian_solve_degree(int g, const Integer& degree, bool hyperelliptic) {
    return solve_degree(g, degree, hyperelliptic);
}

FakeJacobianSolution fake_jacobian_solve(int g, const CleanCycleModel& target, bool hyperelliptic) {
    if (target.g != g) throw std::invalid_argument("fake_jacobian_solve: target has a different g");
    FakeJacobianSolution s = solve_degree(g, degree(target), hyperelliptic);
    if (!s.feasible || g < 2 || target.valid_through() < 1) return s;
    s.target_cm1 = total_cm(target)[1];
    if (s.c1_coefficient == 0) {
        s.reason = "degree-1 equation does not involve c_1";
        return s;
    }
    s.c1 = Rational(s.e * s.e) * *s.target_cm1 / Rational(s.c1_coefficient);
    s.c1_integral = is_integer(*s.c1);
    s.c1_effective = *s.c1 >= 0;
    if (!s.c1_integral) s.reason = "not a fake Jacobian: solved c_1 is not integral";
    return s;
}

SummandBound summand_bound(const std::vector<int>& support_dims, int d_z) {
    SummandBound b;
    b.d_z = d_z;
    int m = 0;
    for (int d : support_dims)
        if (d > 0 && (m == 0 || d < m)) m = d;
    if (m == 0) return b;
    b.vacuous = false;
    b.delta = fraction(m, 2);
    b.no_decomposition = b.delta > Rational(d_z / 2);
    return b;
}

SimplicityRecord simplicity_criteria(const CleanCycleModel& c, const std::string& divisor_label, int m_bound) {
    if (m_bound < 1) throw std::invalid_argument("simplicity_criteria: bound must be positive");
    const CycleComponent* div = nullptr;
    for (const auto& comp : c.components)
        if (comp.label == divisor_label) div = &comp;
    if (!div) throw std::invalid_argument("simplicity_criteria: no component labelled '" + divisor_label + "'");
    if (div->dim != c.g - 1 || div->aggregate)
        throw std::invalid_argument("simplicity_criteria: designated component is not a divisor");
    SimplicityRecord r;
    r.bound = m_bound;
    r.criterion1 = 3 * div->mult * div->cm[0].get_num() > degree(c);
    r.criterion2 = std::all_of(c.components.begin(), c.components.end(), [&](const CycleComponent& comp) {
        return &comp == div || comp.mult == 0 || comp.dim == 0;
    });
    r.criterion3_applicable = div->gauss_finite && c.valid_through() == c.g - 1;
    if (r.criterion3_applicable) {
        r.criterion3 = true;
        for (int m = 1; m <= m_bound && r.criterion3; ++m) {
            ChowVector lhs = total_cm(adams_push(2L * m, c));
            ChowVector mz = pushforward_n(m, div->cm);
            if (lhs == pontryagin(mz, mz, c.g - 1)) r.criterion3 = false;
        }
    }
    r.criterion4_available = c.fiber.has_value();
    if (r.criterion4_available) r.criterion4 = essentially_multiplicity_free(c, m_bound);
    r.proved = r.criterion1 || r.criterion2;
    r.verified_up_to_bound = r.criterion3 || r.criterion4;
    return r;
}

bool verify_inverse_galois(const GroupRingElement& target, const TensorConstruction& s, long e,
                           const std::vector<GroupRingElement>& candidates) {
    for (const auto& x : candidates)
        if (!(x.group() == target.group())) throw std::invalid_argument("verify_inverse_galois: group mismatch");
    return gr_adams(e, target) == eval_construction(s, candidates);
}

}  // namespace lcc
