#include "lcc/cycles.hpp"

#include <doctest.h>

#include <random>

using namespace lcc;

namespace {

// Divisor-like component: degree d, cm_i = (g-i)! for i >= 1.
CycleComponent theta_like(int g, long d, const std::string& label = "Theta") {
    CycleComponent c;
    c.label = label;
    c.dim = g - 1;
    std::vector<Rational> cm(g);
    cm[0] = d;
    for (int i = 1; i < g; ++i) cm[i] = factorial(g - i);
    c.cm = ChowVector(g, cm);
    return c;
}

CleanCycleModel points(int g, int n) {
    CleanCycleModel c;
    c.g = g;
    for (int i = 0; i < n; ++i) c.components.push_back(point_component(g, "p" + std::to_string(i)));
    return c;
}

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("component invariants are named on violation") {
    auto bad = theta_like(3, 4);
    bad.cm[2] = 0;
    CHECK_THROWS_WITH_AS(validate(bad, 3), doctest::Contains("cm coordinate at dim"), InvariantViolation);
    auto above = point_component(3, "p");
    above.cm[1] = 1;
    CHECK_THROWS_WITH_AS(validate(above, 3), doctest::Contains("above dim"), InvariantViolation);
    auto neg = theta_like(3, 0);
    CHECK_THROWS_WITH_AS(validate(neg, 3), doctest::Contains("gauss degree"), InvariantViolation);
    auto wrong_g = theta_like(3, 4);
    CHECK_THROWS_AS(validate(wrong_g, 4), InvariantViolation);
    CHECK_NOTHROW(validate(theta_like(3, 4), 3));
}

TEST_CASE("fiber degree must match component degrees") {
    CleanCycleModel c = origin_point(2, FgAbelianGroup(1, {}));
    CHECK_NOTHROW(validate(c));
    c.fiber->add_term({1}, 1);
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("fiber coefficient sum"), InvariantViolation);
}

TEST_CASE("degree and total Chern-Mather class") {
    CleanCycleModel c;
    c.g = 3;
    c.components.push_back(theta_like(3, 4));
    c.components.push_back(point_component(3, "e", 2));
    CHECK(degree(c) == 6);
    CHECK(total_cm(c) == ChowVector(3, {6, 2, 1}));
    CHECK_FALSE(all_gauss_finite(c));
    CHECK(effective(c));
    c.components[1].mult = -1;
    CHECK_FALSE(effective(c));
}

TEST_CASE("convolution multiplies degrees and fibers") {
    FgAbelianGroup z(1, {});
    CleanCycleModel a = points(3, 2), b = points(3, 3);
    a.fiber = GroupRingElement(z);
    a.fiber->add_term({1}, 1);
    a.fiber->add_term({-1}, 1);
    b.fiber = GroupRingElement(z);
    b.fiber->add_term({0}, 3);
    auto c = convolve(a, b, 2);
    CHECK(degree(c) == 6);
    CHECK(c.fiber->augmentation() == 6);
    CHECK(c.components.size() == 1);
    CHECK(c.components[0].aggregate);
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("convolution truncation needs finite Gauss maps beyond degree one") {
    CleanCycleModel t;
    t.g = 4;
    t.components.push_back(theta_like(4, 24));
    CHECK_NOTHROW(convolve(t, t, 1));
    CHECK_THROWS_WITH_AS(convolve(t, t, 2), doctest::Contains("gauss_finite"), std::invalid_argument);
    auto p = points(4, 1);
    auto tp = convolve(t, p, 3);
    CHECK(total_cm(tp) == total_cm(t));
    auto tt = convolve(t, t, 1);
    // (24 + 6 mu_1) * (24 + 6 mu_1) = 576 + 288 mu_1 in degree <= 1.
    CHECK(total_cm(tt) == ChowVector(4, {576, 288, 0, 0}));
    CHECK(tt.valid_through() == 1);
    CHECK_THROWS_AS(convolve(tt, t, 2), std::invalid_argument);
}

TEST_CASE("Adams pushforward") {
    CleanCycleModel t;
    t.g = 3;
    t.components.push_back(theta_like(3, 6));
    auto t2 = adams_push(2, t);
    CHECK(t2.components[0].cm == ChowVector(3, {6, 8, 16}));
    CHECK(degree(t2) == degree(t));
    CHECK_THROWS_AS(adams_push(0, t), std::invalid_argument);
}

TEST_CASE("Schur functors of cycles") {
    CleanCycleModel t;
    t.g = 3;
    t.components.push_back(theta_like(3, 6));
    auto alt2 = schur_cycle(Partition({1, 1}), t, 1);
    CHECK(degree(alt2) == 15);
    auto sym2 = schur_cycle(Partition({2}), t, 1);
    CHECK(degree(sym2) == 21);
    // c_1 of Alt^2: (p_1^2 - p_2)/2 in degree one: (2*6*2 - 4*2)/2 = 8.
    CHECK(total_cm(alt2)[1] == 8);
    CHECK(total_cm(sym2)[1] == 16);
    CHECK_THROWS_AS(schur_cycle(Partition(), t, 1), std::invalid_argument);
}

TEST_CASE("degree-one class of partition products") {
    // c_{M,1}(Lambda_[beta]) = (sum beta_i^2) c0^(l-1) c_1.
    CHECK(cm1_partition_product(Partition({1, 1, 1, 1}), 8) == 4 * 512);
    CHECK(cm1_partition_product(Partition({2, 1, 1}), 8) == 6 * 64);
    CHECK(cm1_partition_product(Partition({2, 2}), 8) == 64);
    CHECK(cm1_partition_product(Partition({3, 1}), 8) == 80);
    CHECK(cm1_partition_product(Partition({4}), 8) == 16);
    CHECK(cm1_partition_product(Partition(), 8) == 0);
}

TEST_CASE("property: partition products match explicit convolution") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int g = 3 + trial % 3;
        long c0 = 1 + rng() % 9, c1 = 1 + rng() % 5;
        CleanCycleModel l;
        l.g = g;
        CycleComponent comp;
        comp.label = "L";
        comp.dim = 1;
        comp.aggregate = true;
        std::vector<Rational> cm(g);
        cm[0] = c0;
        cm[1] = c1;
        comp.cm = ChowVector(g, cm);
        l.components.push_back(comp);
        auto parts = partitions(1 + trial % 4);
        const Partition& beta = parts[trial % parts.size()];
        CleanCycleModel acc = points(g, 1);
        for (int b : beta.parts()) acc = convolve(acc, adams_push(b, l), 1);
        CHECK(total_cm(acc)[1] == Rational(cm1_partition_product(beta, c0) * c1));
    }
}

TEST_CASE("dimension bound and reducedness") {
    CHECK(mindim_bound(4, 1) == 3);
    CHECK(mindim_bound(1, 4) == 3);
    FgAbelianGroup z(1, {});
    CleanCycleModel c = points(2, 2);
    c.fiber = GroupRingElement(z);
    c.fiber->add_term({1}, 1);
    c.fiber->add_term({-1}, 1);
    CHECK(reduced(c));
    CHECK(essentially_multiplicity_free(c, 5));
    CleanCycleModel d = points(2, 2);
    d.fiber = GroupRingElement(FgAbelianGroup(0, {2}));
    d.fiber->add_term({0}, 1);
    d.fiber->add_term({1}, 1);
    CHECK(reduced(d));
    CHECK_FALSE(essentially_multiplicity_free(d, 2));
    CHECK_THROWS_AS(essentially_multiplicity_free(points(2, 1), 2), std::invalid_argument);
}

}  // TEST_SUITE
