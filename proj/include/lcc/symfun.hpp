#pragma once

#include "lcc/arith.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lcc {

class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    static Partition sorted(std::vector<int> parts);  // sorts descending first
    static Partition ones(int n);
    static Partition parse(const std::string& text);  // "2,1,1"; "" is the empty partition

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }
    std::vector<int> multiplicities() const;  // m_i for i = 1..max part, index i
    std::string to_string() const;            // "(2,1,1)"

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// Lexicographic descending: (4) precedes (3,1).
std::vector<Partition> partitions(int n);

enum class Basis { powersum, elementary, schur };
const char* basis_name(Basis b);

class SymExpr {
public:
    using Terms = std::map<Partition, Rational, std::greater<>>;

    explicit SymExpr(Basis b) : basis_(b) {}

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool homogeneous() const { return homogeneous_; }
    Rational coefficient(const Partition& p) const;
    void add(const Partition& p, const Rational& c);  // drops zero sums

    bool operator==(const SymExpr& o) const {
        return basis_ == o.basis_ && terms_ == o.terms_;
    }

private:
    Basis basis_;
    Terms terms_;
    bool homogeneous_ = true;
    int degree_ = -1;
};

Integer z_coefficient(const Partition& beta);
// Symmetric-group character chi^alpha at cycle type beta; equal degrees required.
Integer mn_character(const Partition& alpha, const Partition& beta);

SymExpr schur_to_powersum(const Partition& alpha);
SymExpr elementary_to_powersum(int n);

// n! * m_{alpha beta} = chi^alpha(beta) * n!/z_beta, an integer. Consumers sum
// integer-weighted products of Adams images and divide by n! once.
struct AdamsTerm {
    Partition cycle_type;
    Integer weight;
};
std::vector<AdamsTerm> adams_expansion(const Partition& alpha);

}  // namespace lcc
