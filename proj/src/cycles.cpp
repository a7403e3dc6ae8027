#include "lcc/cycles.hpp"

#include <cstdlib>

namespace lcc {

namespace {

[[noreturn]] void violated(const std::string& where, const std::string& what) {
    throw InvariantViolation(where + ": " + what);
}

}  // namespace

void validate(const CycleComponent& c, int g) {
    const std::string where = "component '" + c.label + "'";
    if (c.cm.g() != g) violated(where, "cm length must equal g");
    if (c.dim < 0 || c.dim > g - 1) violated(where, "dim must lie in [0, g-1]");
    for (int i = c.dim + 1; i < g; ++i)
        if (c.cm[i] != 0) violated(where, "cm coordinate above dim must vanish");
    if (c.aggregate) return;
    if (c.cm[c.dim] == 0) violated(where, "cm coordinate at dim must be nonzero ([Z] is the top class)");
    if (!is_integer(c.cm[0]) || c.cm[0] <= 0) violated(where, "gauss degree cm[0] must be a positive integer");
    if (c.dim == 0) {
        for (int i = 1; i < g; ++i)
            if (c.cm[i] != 0) violated(where, "point component must have cm = (1,0,...,0)");
        if (c.cm[0] != 1) violated(where, "point component must have cm = (1,0,...,0)");
    }
}

void validate(const CleanCycleModel& c) {
    if (c.g < 1) violated("cycle", "g must be >= 1");
    if (c.cm_valid_through < -1 || c.cm_valid_through > c.g - 1)
        violated("cycle", "cm_valid_through must lie in [0, g-1]");
    for (const auto& comp : c.components) validate(comp, c.g);
    if (c.fiber) {
        Integer d = 0;
        for (const auto& comp : c.components) {
            if (!is_integer(comp.cm[0])) violated("cycle", "fiber present but a gauss degree is non-integral");
            d += comp.mult * comp.cm[0].get_num();
        }
        if (c.fiber->augmentation() != d)
            violated("cycle", "fiber coefficient sum must equal the degree sum over components");
    }
}

CycleComponent point_component(int g, std::string label, Integer mult) {
    CycleComponent p;
    p.label = std::move(label);
    p.dim = 0;
    p.mult = std::move(mult);
    p.cm = minimal_class(g, 0);
    p.gauss_finite = true;
    return p;
}

CleanCycleModel origin_point(int g, const FgAbelianGroup& fiber_group) {
    CleanCycleModel c;
    c.g = g;
    c.components.push_back(point_component(g, "origin"));
    c.fiber = GroupRingElement::one(fiber_group);
    return c;
}

Integer degree(const CleanCycleModel& c) {
    Rational d = 0;
    for (const auto& comp : c.components) d += Rational(comp.mult) * comp.cm[0];
    if (!is_integer(d)) throw NonIntegralError("degree: non-integral gauss degree sum");
    return d.get_num();
}

ChowVector total_cm(const CleanCycleModel& c) {
    ChowVector t(c.g);
    for (const auto& comp : c.components) t += Rational(comp.mult) * comp.cm;
    return truncate(t, c.valid_through());
}

bool all_gauss_finite(const CleanCycleModel& c) {
    for (const auto& comp : c.components)
        if (!comp.gauss_finite) return false;
    return true;
}

bool effective(const CleanCycleModel& c) {
    for (const auto& comp : c.components)
        if (comp.mult < 0) return false;
    return true;
}

namespace {

void check_trunc(int d_trunc, const CleanCycleModel& c1, const CleanCycleModel& c2) {
    if (d_trunc < 0 || d_trunc > c1.g - 1) throw std::invalid_argument("d_trunc must lie in [0, g-1]");
    if (d_trunc > c1.valid_through() || d_trunc > c2.valid_through())
        throw std::invalid_argument("d_trunc exceeds the index through which input CM data is known");
    if (d_trunc >= 2 && !all_gauss_finite(c1) && !all_gauss_finite(c2))
        throw std::invalid_argument(
            "d_trunc >= 2 requires finite Gauss maps on all components of one factor (flag gauss_finite)");
}

CleanCycleModel aggregate_model(int g, const ChowVector& cm, int d_trunc, bool finite,
                                std::optional<GroupRingElement> fiber, std::string label) {
    CleanCycleModel out;
    out.g = g;
    out.cm_valid_through = d_trunc;
    out.fiber = std::move(fiber);
    CycleComponent agg;
    agg.label = std::move(label);
    agg.cm = cm;
    agg.dim = std::max(cm.top_index(), 0);
    agg.gauss_finite = finite;
    agg.aggregate = true;
    out.components.push_back(std::move(agg));
    return out;
}

}  // namespace

CleanCycleModel convolve(const CleanCycleModel& c1, const CleanCycleModel& c2, int d_trunc) {
    if (c1.g != c2.g) throw std::invalid_argument("convolve: dimension mismatch");
    check_trunc(d_trunc, c1, c2);
    std::optional<GroupRingElement> fiber;
    if (c1.fiber && c2.fiber) fiber = gr_multiply(*c1.fiber, *c2.fiber);
    ChowVector cm = pontryagin(total_cm(c1), total_cm(c2), d_trunc);
    return aggregate_model(c1.g, cm, d_trunc, all_gauss_finite(c1) && all_gauss_finite(c2),
                           std::move(fiber), "convolution");
}

CleanCycleModel adams_push(long n, const CleanCycleModel& c) {
    if (n == 0) throw std::invalid_argument("adams_push: n must be nonzero");
    CleanCycleModel out = c;
    for (auto& comp : out.components) comp.cm = pushforward_n(n, comp.cm);
    if (out.fiber) out.fiber = gr_adams(n, *out.fiber);
    return out;
}

CleanCycleModel schur_cycle(const Partition& alpha, const CleanCycleModel& c, int d_trunc) {
    if (alpha.empty()) throw std::invalid_argument("schur_cycle: empty partition");
    check_trunc(d_trunc, c, c);
    const int g = c.g;
    ChowVector base = total_cm(c);
    ChowVector acc(g);
    for (const auto& term : adams_expansion(alpha)) {
        ChowVector prod = minimal_class(g, 0);
        for (int p : term.cycle_type.parts()) prod = pontryagin(prod, pushforward_n(p, base), d_trunc);
        acc += Rational(term.weight) * prod;
    }
    acc = fraction(1, factorial(alpha.degree())) * acc;
    if (!is_integral(acc))
        throw NonIntegralError("schur_cycle " + alpha.to_string() + ": non-integral aggregate CM class");
    std::optional<GroupRingElement> fiber;
    if (c.fiber) fiber = schur_apply(alpha, *c.fiber);
    return aggregate_model(g, acc, d_trunc, all_gauss_finite(c), std::move(fiber),
                           "schur" + alpha.to_string());
}

Integer cm1_partition_product(const Partition& beta, const Integer& c0) {
    if (c0 < 0) throw std::invalid_argument("cm1_partition_product: c0 must be nonnegative");
    if (beta.empty()) return 0;
    Integer squares = 0;
    for (int b : beta.parts()) squares += b * b;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), c0.get_mpz_t(), beta.length() - 1);
    return squares * pw;
}

int mindim_bound(int d1, int d2) { return std::abs(d1 - d2); }

bool reduced(const CleanCycleModel& c) {
    for (const auto& comp : c.components)
        if (comp.mult != 1) return false;
    if (c.fiber)
        for (const auto& [e, k] : c.fiber->coeffs())
            if (k != 1) return false;
    return true;
}

bool essentially_multiplicity_free(const CleanCycleModel& c, int n_max) {
    if (!c.fiber) throw std::invalid_argument("essentially_multiplicity_free requires a fiber model");
    for (int n = 1; n <= n_max; ++n)
        if (!reduced(adams_push(n, c))) return false;
    return true;
}

}  // namespace lcc
