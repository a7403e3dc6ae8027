#include "lcc/chow.hpp"

#include <stdexcept>

namespace lcc {

ChowVector::ChowVector(int g) : g_(g), coords_(g) {
    if (g < 1) throw std::invalid_argument("ChowVector: g must be >= 1");
}

ChowVector::ChowVector(int g, std::vector<Rational> coords) : g_(g), coords_(std::move(coords)) {
    if (g < 1) throw std::invalid_argument("ChowVector: g must be >= 1");
    if (static_cast<int>(coords_.size()) != g)
        throw std::invalid_argument("ChowVector: expected " + std::to_string(g) + " coordinates");
}

int ChowVector::top_index() const {
    for (int i = g_ - 1; i >= 0; --i)
        if (coords_[i] != 0) return i;
    return -1;
}

ChowVector& ChowVector::operator+=(const ChowVector& o) {
    if (g_ != o.g_) throw std::invalid_argument("ChowVector: dimension mismatch");
    for (int i = 0; i < g_; ++i) coords_[i] += o.coords_[i];
    return *this;
}

ChowVector operator+(ChowVector a, const ChowVector& b) { return a += b; }

ChowVector operator*(const Rational& c, ChowVector a) {
    for (int i = 0; i < a.g(); ++i) a[i] *= c;
    return a;
}

ChowVector pontryagin(const ChowVector& x, const ChowVector& y, int d_trunc) {
    if (x.g() != y.g()) throw std::invalid_argument("pontryagin: dimension mismatch");
    int g = x.g();
    if (d_trunc < 0 || d_trunc > g - 1) throw std::invalid_argument("pontryagin: d_trunc out of range");
    ChowVector z(g);
    for (int a = 0; a <= d_trunc; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; a + b <= d_trunc; ++b)
            if (y[b] != 0) z[a + b] += Rational(binomial(a + b, a)) * x[a] * y[b];
    }
    return z;
}

ChowVector pushforward_n(long n, const ChowVector& x) {
    ChowVector z = x;
    Integer n2 = Integer(n) * n, f = 1;
    for (int i = 0; i < x.g(); ++i, f *= n2) z[i] *= f;
    return z;
}

ChowVector truncate(const ChowVector& x, int d_trunc) {
    ChowVector z = x;
    for (int i = d_trunc + 1; i < x.g(); ++i) z[i] = 0;
    return z;
}

bool is_integral(const ChowVector& x) {
    for (const auto& a : x.coords())
        if (!is_integer(a)) return false;
    return true;
}

bool is_effective(const ChowVector& x) {
    for (const auto& a : x.coords())
        if (a < 0) return false;
    return true;
}

ChowVector minimal_class(int g, int i) {
    if (i < 0 || i >= g) throw std::invalid_argument("minimal_class: index out of range");
    ChowVector z(g);
    z[i] = 1;
    return z;
}

ChowVector theta_power(int g, int k) {
    if (k < 1 || k > g) throw std::invalid_argument("theta_power: need 1 <= k <= g");
    ChowVector z(g);
    z[g - k] = Rational(factorial(k));
    return z;
}

}  // namespace lcc
