#include "lcc/liere.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lcc {

std::int64_t Character::multiplicity(const Weight& w) const {
    auto it = mult_.find(w);
    return it == mult_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto [it, fresh] = mult_.emplace(w, m);
    if (!fresh) {
        it->second += m;
        if (it->second == 0) mult_.erase(it);
    }
}

std::int64_t Character::dimension() const {
    std::int64_t d = 0;
    for (const auto& [w, m] : mult_) d += m;
    return d;
}

bool Character::genuine() const {
    return std::all_of(mult_.begin(), mult_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::vector<std::pair<Weight, std::int64_t>> Character::sorted() const {
    std::vector<std::pair<Weight, std::int64_t>> v(mult_.begin(), mult_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return v;
}

bool Character::operator==(const Character& o) const {
    return rs_->name() == o.rs_->name() && mult_ == o.mult_;
}

namespace {

void require_same(const Character& x, const Character& y) {
    if (x.root_system()->name() != y.root_system()->name())
        throw std::invalid_argument("characters of different root systems");
}

Weight plus(const Weight& a, const Weight& b, int k = 1) {
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + k * b[i];
    return c;
}

void require_dominant(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
}

}  // namespace

std::vector<Weight> dominant_weights(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    std::unordered_map<Weight, char, WeightHash> seen{{lambda, 1}};
    std::vector<Weight> out{lambda}, frontier{lambda};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& mu : frontier)
            for (const auto& a : rs.positive_roots()) {
                Weight nu = plus(mu, a, -1);
                if (!rs.is_dominant(nu)) continue;
                if (seen.emplace(nu, 1).second) {
                    next.push_back(nu);
                    out.push_back(std::move(nu));
                }
            }
        frontier = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        auto ha = rs.scaled_height(a), hb = rs.scaled_height(b);
        return ha != hb ? ha > hb : a > b;
    });
    return out;
}

std::optional<std::vector<std::pair<Weight, std::int64_t>>> dominant_multiplicities(
    const RootSystem& rs, const Weight& lambda, std::optional<std::int64_t> abort_above) {
    std::vector<std::pair<Weight, std::int64_t>> out;
    // sl_2 weight spaces are lines; the recursion below would cost O(k^2).
    if (rs.rank() == 1) {
        require_dominant(rs, lambda);
        for (int mu = lambda[0]; mu >= 0; mu -= 2) out.emplace_back(Weight{mu}, 1);
        return out;
    }
    auto dom = dominant_weights(rs, lambda);
    std::unordered_map<Weight, std::int64_t, WeightHash> m;
    Weight rho = rs.rho();
    Weight lr = plus(lambda, rho);
    const std::int64_t top = rs.form(lr, lr);
    for (const auto& mu : dom) {
        std::int64_t value = 1;
        if (mu != lambda) {
            std::int64_t num = 0;
            for (const auto& a : rs.positive_roots()) {
                Weight nu = plus(mu, a);
                while (true) {
                    auto it = m.find(rs.dominant(nu));
                    if (it == m.end()) break;  // alpha-strings through weights are unbroken
                    num += it->second * rs.form(nu, a);
                    nu = plus(nu, a);
                }
            }
            Weight mr = plus(mu, rho);
            std::int64_t den = top - rs.form(mr, mr);
            if (den <= 0 || (2 * num) % den != 0) throw std::logic_error("Freudenthal recursion failed");
            value = 2 * num / den;
        }
        if (abort_above && value > *abort_above) return std::nullopt;
        if (value > 0) {
            m.emplace(mu, value);
            out.emplace_back(mu, value);
        }
    }
    return out;
}

Character freudenthal_character(const RootSystemPtr& rs, const Weight& lambda) {
    Character ch(rs);
    const auto dom = dominant_multiplicities(*rs, lambda);
    for (const auto& [mu, k] : *dom)
        for (const auto& w : weyl_orbit(*rs, mu)) ch.add(w, k);
    return ch;
}

Character char_add(const Character& x, const Character& y, std::int64_t scale_y) {
    require_same(x, y);
    Character z = x;
    for (const auto& [w, m] : y.weights()) z.add(w, scale_y * m);
    return z;
}

Character char_tensor(const Character& x, const Character& y) {
    require_same(x, y);
    Character z(x.root_system());
    for (const auto& [a, ma] : x.weights())
        for (const auto& [b, mb] : y.weights()) z.add(plus(a, b), ma * mb);
    return z;
}

Character char_adams(long n, const Character& x) {
    Character z(x.root_system());
    for (const auto& [w, m] : x.weights()) {
        Weight v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = static_cast<int>(n * w[i]);
        z.add(v, m);
    }
    return z;
}

Character char_schur(const Partition& alpha, const Character& x) {
    const auto& rs = x.root_system();
    Character one(rs);
    one.add(Weight(rs->rank(), 0), 1);
    if (alpha.empty()) return one;
    std::map<int, Character> adams;
    Character acc(rs);
    for (const auto& term : adams_expansion(alpha)) {
        Character prod = one;
        for (int p : term.cycle_type.parts()) {
            auto it = adams.find(p);
            if (it == adams.end()) it = adams.emplace(p, char_adams(p, x)).first;
            prod = char_tensor(prod, it->second);
        }
        acc = char_add(acc, prod, term.weight.get_si());
    }
    const std::int64_t nfac = factorial(alpha.degree()).get_si();
    Character out(rs);
    for (const auto& [w, m] : acc.weights()) {
        if (m % nfac != 0) throw NonIntegralError("char_schur " + alpha.to_string() + ": non-integral multiplicity");
        out.add(w, m / nfac);
    }
    return out;
}

Character char_alt(int k, const Character& x) { return char_schur(Partition::ones(k), x); }

Character char_sym(int k, const Character& x) {
    return char_schur(k == 0 ? Partition() : Partition(std::vector<int>{k}), x);
}

std::int64_t constituent_multiplicity(const Character& x, const Weight& nu) {
    const auto& rs = *x.root_system();
    Weight rho = rs.rho();
    Weight target = plus(nu, rho);
    std::int64_t total = 0;
    for (const auto& [mu, m] : x.weights()) {
        int sign = 1;
        if (rs.dominant(plus(mu, rho), &sign) == target) total += sign * m;
    }
    return total;
}

std::vector<std::pair<Weight, std::int64_t>> decompose(const Character& x) {
    const auto& rs = x.root_system();
    Character rest = x;
    std::vector<std::pair<Weight, std::int64_t>> out;
    while (!rest.weights().empty()) {
        const Weight* best = nullptr;
        std::int64_t best_h = 0;
        for (const auto& [w, m] : rest.weights()) {
            if (!rs->is_dominant(w)) continue;
            auto h = rs->scaled_height(w);
            if (!best || h > best_h || (h == best_h && w > *best)) {
                best = &w;
                best_h = h;
            }
        }
        if (!best) throw std::invalid_argument("decompose: input is not a character (no dominant weight left)");
        Weight lambda = *best;
        std::int64_t c = rest.multiplicity(lambda);
        if (c < 0) throw std::invalid_argument("decompose: negative multiplicity, input is not a character");
        rest = char_add(rest, freudenthal_character(rs, lambda), -c);
        out.emplace_back(lambda, c);
    }
    return out;
}

const char* fs_name(FsType t) {
    switch (t) {
        case FsType::orthogonal: return "orthogonal";
        case FsType::symplectic: return "symplectic";
        case FsType::none: return "none";
    }
    return "?";
}

bool self_dual(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    return rs.dual(lambda) == lambda;
}

namespace {

FsType fs_from_counts(std::int64_t sym, std::int64_t alt) {
    if (sym == 0 && alt == 0) return FsType::none;
    if (sym == 1 && alt == 0) return FsType::orthogonal;
    if (sym == 0 && alt == 1) return FsType::symplectic;
    throw std::logic_error("invariant bilinear forms on an irreducible representation must be unique");
}

}  // namespace

FsType fs_type(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    std::int64_t tensor = 0, adams = 0;
    if (rs.rank() == 1) {
        // Same counts on the string k, k-2, ..., -k; s(x) = -x, rho = 1.
        auto racah = [](long x) { return x == 1 ? 1 : x == -1 ? -1 : 0; };
        const long k = lambda[0];
        for (long mu = k; mu >= -k; mu -= 2) {
            tensor += racah(k + 1 + mu);
            adams += racah(2 * mu + 1);
        }
        return fs_from_counts((tensor + adams) / 2, (tensor - adams) / 2);
    }
    Weight rho = rs.rho();
    Weight lr = plus(lambda, rho);
    const auto dom = dominant_multiplicities(rs, lambda);
    for (const auto& [mu, k] : *dom)
        for (const auto& w : weyl_orbit(rs, mu)) {
            int s = 1;
            if (rs.dominant(plus(lr, w), &s) == rho) tensor += s * k;
            Weight two = plus(rho, w, 2);
            if (rs.dominant(std::move(two), &s) == rho) adams += s * k;
        }
    if ((tensor + adams) % 2 != 0) throw std::logic_error("Sym^2 trivial count is not integral");
    return fs_from_counts((tensor + adams) / 2, (tensor - adams) / 2);
}

FsType fs_type_by_decomposition(const RootSystemPtr& rs, const Weight& lambda) {
    Character v = freudenthal_character(rs, lambda);
    Weight zero(rs->rank(), 0);
    auto trivial = [&](const Character& c) {
        for (const auto& [w, m] : decompose(c))
            if (w == zero) return m;
        return std::int64_t{0};
    };
    return fs_from_counts(trivial(char_sym(2, v)), trivial(char_alt(2, v)));
}

// Covering relations among dominant weights are differences of positive
// roots, so only the weights lambda - alpha need inspecting.
bool is_minuscule(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    for (const auto& a : rs.positive_roots())
        if (rs.is_dominant(plus(lambda, a, -1))) return false;
    return true;
}

bool is_quasi_minuscule(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    Weight zero(rs.rank(), 0);
    if (lambda == zero) return false;
    for (const auto& a : rs.positive_roots()) {
        Weight below = plus(lambda, a, -1);
        if (below != zero && rs.is_dominant(below)) return false;
    }
    return true;
}

bool is_wmf(const RootSystem& rs, const Weight& lambda) {
    return dominant_multiplicities(rs, lambda, 1).has_value();
}

}  // namespace lcc
