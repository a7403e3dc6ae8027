#pragma once

#include "lcc/arith.hpp"
#include "lcc/symfun.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lcc {

// Free coordinates first, then torsion residues in [0, d_i).
using GroupElement = std::vector<std::int64_t>;

// Z^rank + (+)_i Z/d_i in invariant-factor form: d_i >= 2, d_i | d_{i+1}.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    FgAbelianGroup(int rank, std::vector<std::int64_t> torsion);
    // Accepts any list of orders >= 2 and converts to invariant factors.
    static FgAbelianGroup from_cyclic_orders(int rank, std::vector<std::int64_t> orders);

    int rank() const { return rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    std::size_t arity() const { return rank_ + torsion_.size(); }

    GroupElement zero() const { return GroupElement(arity(), 0); }
    GroupElement canonical(GroupElement e) const;  // throws on wrong arity
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(std::int64_t n, const GroupElement& a) const;

    bool operator==(const FgAbelianGroup& o) const = default;

private:
    int rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

class GroupRingElement {
public:
    using Coeffs = std::map<GroupElement, Integer>;

    GroupRingElement() = default;
    explicit GroupRingElement(FgAbelianGroup g) : group_(std::move(g)) {}
    static GroupRingElement one(const FgAbelianGroup& g);
    static GroupRingElement monomial(const FgAbelianGroup& g, GroupElement e, Integer c = 1);

    const FgAbelianGroup& group() const { return group_; }
    const Coeffs& coeffs() const { return coeffs_; }
    Integer coefficient(const GroupElement& e) const;
    void add_term(GroupElement e, const Integer& c);  // canonicalizes e, drops zeros

    Integer augmentation() const;  // coefficient sum
    bool effective() const;        // all coefficients >= 0
    bool is_zero() const { return coeffs_.empty(); }

    bool operator==(const GroupRingElement& o) const = default;

private:
    FgAbelianGroup group_;
    Coeffs coeffs_;
};

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_scale(const Integer& c, const GroupRingElement& x);
GroupRingElement gr_multiply(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_adams(std::int64_t n, const GroupRingElement& x);

// Throw NonIntegralError when the rational combination is not integral.
GroupRingElement schur_apply(const Partition& alpha, const GroupRingElement& x);
GroupRingElement lambda_op(int k, const GroupRingElement& x);  // k = 0 gives 1

class TensorConstruction {
public:
    enum class Kind { variable, direct_sum, tensor, schur };

    static TensorConstruction variable(int index);  // 1-based
    static TensorConstruction direct_sum(std::vector<TensorConstruction> children);
    static TensorConstruction tensor(std::vector<TensorConstruction> children);
    static TensorConstruction schur(Partition alpha, TensorConstruction child);

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    const Partition& partition() const { return alpha_; }
    const std::vector<TensorConstruction>& children() const { return children_; }
    int max_index() const;

private:
    Kind kind_ = Kind::variable;
    int index_ = 1;
    Partition alpha_;
    std::vector<TensorConstruction> children_;
};

// Leaf i is xs[i-1]; empty sums/products give 0/1 of the common group.
GroupRingElement eval_construction(const TensorConstruction& s,
                                   const std::vector<GroupRingElement>& xs);

}  // namespace lcc
