#include "lcc/lambda.hpp"

#include <numeric>
#include <stdexcept>

namespace lcc {

FgAbelianGroup::FgAbelianGroup(int rank, std::vector<std::int64_t> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    if (rank_ < 0) throw std::invalid_argument("group rank must be nonnegative");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw std::invalid_argument("torsion orders must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("torsion must be in invariant-factor form (d_i | d_{i+1})");
    }
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(int rank, std::vector<std::int64_t> d) {
    for (auto x : d)
        if (x < 1) throw std::invalid_argument("cyclic orders must be positive");
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            std::int64_t g = std::gcd(d[i], d[j]);
            std::int64_t l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    std::vector<std::int64_t> inv;
    for (auto x : d)
        if (x > 1) inv.push_back(x);
    return FgAbelianGroup(rank, std::move(inv));
}

GroupElement FgAbelianGroup::canonical(GroupElement e) const {
    if (e.size() != arity()) throw std::invalid_argument("group element has wrong arity");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        auto& r = e[rank_ + i];
        r %= torsion_[i];
        if (r < 0) r += torsion_[i];
    }
    return e;
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c(arity());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return canonical(std::move(c));
}

GroupElement FgAbelianGroup::scale(std::int64_t n, const GroupElement& a) const {
    GroupElement c(arity());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = n * a[i];
    return canonical(std::move(c));
}

GroupRingElement GroupRingElement::one(const FgAbelianGroup& g) {
    return monomial(g, g.zero());
}

GroupRingElement GroupRingElement::monomial(const FgAbelianGroup& g, GroupElement e, Integer c) {
    GroupRingElement x(g);
    x.add_term(std::move(e), c);
    return x;
}

Integer GroupRingElement::coefficient(const GroupElement& e) const {
    auto it = coeffs_.find(group_.canonical(e));
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(GroupElement e, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(group_.canonical(std::move(e)), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Integer GroupRingElement::augmentation() const {
    Integer s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

bool GroupRingElement::effective() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

namespace {

void require_same_group(const GroupRingElement& x, const GroupRingElement& y) {
    if (!(x.group() == y.group())) throw std::invalid_argument("group ring elements over different groups");
}

}  // namespace

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x, y);
    GroupRingElement z = x;
    for (const auto& [e, c] : y.coeffs()) z.add_term(e, c);
    return z;
}

GroupRingElement gr_scale(const Integer& c, const GroupRingElement& x) {
    GroupRingElement z(x.group());
    if (c == 0) return z;
    for (const auto& [e, a] : x.coeffs()) z.add_term(e, c * a);
    return z;
}

GroupRingElement gr_multiply(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x, y);
    const auto& g = x.group();
    GroupRingElement z(g);
    for (const auto& [a, ca] : x.coeffs())
        for (const auto& [b, cb] : y.coeffs()) z.add_term(g.add(a, b), ca * cb);
    return z;
}

GroupRingElement gr_adams(std::int64_t n, const GroupRingElement& x) {
    const auto& g = x.group();
    GroupRingElement z(g);
    for (const auto& [e, c] : x.coeffs()) z.add_term(g.scale(n, e), c);
    return z;
}

GroupRingElement schur_apply(const Partition& alpha, const GroupRingElement& x) {
    const auto& g = x.group();
    if (alpha.empty()) return GroupRingElement::one(g);
    std::map<int, GroupRingElement> adams;
    for (int p : alpha.parts()) adams.try_emplace(p, gr_adams(p, x));
    GroupRingElement acc(g);
    for (const auto& term : adams_expansion(alpha)) {
        GroupRingElement prod = GroupRingElement::one(g);
        for (int p : term.cycle_type.parts()) {
            if (!adams.count(p)) adams.emplace(p, gr_adams(p, x));
            prod = gr_multiply(prod, adams.at(p));
        }
        acc = gr_add(acc, gr_scale(term.weight, prod));
    }
    Integer nfac = factorial(alpha.degree());
    GroupRingElement out(g);
    for (const auto& [e, c] : acc.coeffs()) {
        if (!mpz_divisible_p(c.get_mpz_t(), nfac.get_mpz_t()))
            throw NonIntegralError("schur_apply " + alpha.to_string() + ": non-integral coefficient");
        out.add_term(e, c / nfac);
    }
    return out;
}

GroupRingElement lambda_op(int k, const GroupRingElement& x) {
    if (k < 0) throw std::invalid_argument("lambda_op: k must be nonnegative");
    return schur_apply(Partition::ones(k), x);
}

TensorConstruction TensorConstruction::variable(int index) {
    if (index < 1) throw std::invalid_argument("construction leaf index must be >= 1");
    TensorConstruction t;
    t.kind_ = Kind::variable;
    t.index_ = index;
    return t;
}

TensorConstruction TensorConstruction::direct_sum(std::vector<TensorConstruction> children) {
    TensorConstruction t;
    t.kind_ = Kind::direct_sum;
    t.children_ = std::move(children);
    return t;
}

TensorConstruction TensorConstruction::tensor(std::vector<TensorConstruction> children) {
    TensorConstruction t;
    t.kind_ = Kind::tensor;
    t.children_ = std::move(children);
    return t;
}

TensorConstruction TensorConstruction::schur(Partition alpha, TensorConstruction child) {
    TensorConstruction t;
    t.kind_ = Kind::schur;
    t.alpha_ = std::move(alpha);
    t.children_.push_back(std::move(child));
    return t;
}

int TensorConstruction::max_index() const {
    int m = kind_ == Kind::variable ? index_ : 0;
    for (const auto& c : children_) m = std::max(m, c.max_index());
    return m;
}

namespace {

GroupRingElement eval_rec(const TensorConstruction& s, const std::vector<GroupRingElement>& xs,
                          const FgAbelianGroup& g) {
    using K = TensorConstruction::Kind;
    switch (s.kind()) {
        case K::variable:
            return xs.at(s.index() - 1);
        case K::direct_sum: {
            GroupRingElement acc(g);
            for (const auto& c : s.children()) acc = gr_add(acc, eval_rec(c, xs, g));
            return acc;
        }
        case K::tensor: {
            GroupRingElement acc = GroupRingElement::one(g);
            for (const auto& c : s.children()) acc = gr_multiply(acc, eval_rec(c, xs, g));
            return acc;
        }
        case K::schur:
            return schur_apply(s.partition(), eval_rec(s.children().front(), xs, g));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

GroupRingElement eval_construction(const TensorConstruction& s,
                                   const std::vector<GroupRingElement>& xs) {
    if (xs.empty()) throw std::invalid_argument("eval_construction: no arguments");
    if (s.max_index() > static_cast<int>(xs.size()))
        throw std::invalid_argument("eval_construction: leaf index exceeds argument count");
    for (const auto& x : xs) require_same_group(xs.front(), x);
    return eval_rec(s, xs, xs.front().group());
}

}  // namespace lcc
