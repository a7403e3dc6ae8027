#pragma once

#include "lcc/arith.hpp"

#include <vector>

namespace lcc {

// Numerical class sum a_i mu_i in CH_{<g}(A) of a very general ppav, where
// mu_i = [Theta]^{g-i}/(g-i)! generates CH_i. Integrality verdicts assume
// this rank-one lattice; they say nothing about special ppavs.
class ChowVector {
public:
    ChowVector() = default;
    explicit ChowVector(int g);  // zero vector
    ChowVector(int g, std::vector<Rational> coords);

    int g() const { return g_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](int i) const { return coords_.at(i); }
    Rational& operator[](int i) { return coords_.at(i); }
    const Rational& degree() const { return coords_.at(0); }
    int top_index() const;  // largest i with a_i != 0, or -1

    ChowVector& operator+=(const ChowVector& o);
    bool operator==(const ChowVector& o) const = default;

private:
    int g_ = 0;
    std::vector<Rational> coords_;
};

ChowVector operator+(ChowVector a, const ChowVector& b);
ChowVector operator*(const Rational& c, ChowVector a);

// mu_a * mu_b = C(a+b, a) mu_{a+b}; indices above d_trunc are zeroed.
ChowVector pontryagin(const ChowVector& x, const ChowVector& y, int d_trunc);
ChowVector pushforward_n(long n, const ChowVector& x);  // a_i -> n^{2i} a_i
ChowVector truncate(const ChowVector& x, int d_trunc);

bool is_integral(const ChowVector& x);
bool is_effective(const ChowVector& x);
ChowVector theta_power(int g, int k);  // [Theta]^k = k! mu_{g-k}, 1 <= k <= g
ChowVector minimal_class(int g, int i);

}  // namespace lcc
