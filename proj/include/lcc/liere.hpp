#pragma once

#include "lcc/arith.hpp"
#include "lcc/symfun.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcc {

// Coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

// Bourbaki numbering. cartan[i][j] = <alpha_i, alpha_j^vee>, so row i is
// alpha_i in fundamental coordinates.
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> make(char type, int rank);
    static std::shared_ptr<const RootSystem> parse(const std::string& name);  // "A5", "E6"

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    // Squared lengths, shortest simple root = 1.
    const std::vector<int>& root_lengths() const { return lengths_; }
    // Fundamental coordinates; simple_coords holds the same roots in the simple-root basis.
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    const std::vector<std::vector<int>>& positive_roots_simple() const { return pos_simple_; }
    // <mu, alpha^vee> = sum_j coroot_coeffs[a][j] * mu_j.
    const std::vector<std::vector<int>>& coroot_coeffs() const { return coroots_; }
    Weight rho() const { return Weight(rank_, 1); }
    // -w0(varpi_i) = varpi_{dual_perm[i]}.
    const std::vector<int>& dual_perm() const { return dual_perm_; }
    const Integer& weyl_group_order() const { return weyl_order_; }
    const Integer& cartan_det() const { return det_; }
    // det(C) * C^{-1}, integral.
    const std::vector<std::vector<Integer>>& cartan_adjugate() const { return adj_; }
    const Weight& highest_root() const { return highest_root_; }
    const Weight& highest_short_root() const { return highest_short_; }

    // 2 det(C) (x, y), an integer form on the weight lattice.
    std::int64_t form(const Weight& x, const Weight& y) const;
    // det(C) * height; strictly increases along positive roots.
    std::int64_t scaled_height(const Weight& x) const;
    std::int64_t pairing(const Weight& mu, std::size_t root) const;  // <mu, alpha^vee>

    Weight reflect(int i, Weight w) const;
    // Dominant conjugate; sign receives (-1)^{length of the reflection word}.
    Weight dominant(Weight w, int* sign = nullptr) const;
    bool is_dominant(const Weight& w) const;
    Weight dual(const Weight& w) const;  // -w0(w) for dominant w

private:
    RootSystem() = default;
    void build(char type, int rank);

    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> lengths_;
    std::vector<Weight> pos_roots_;
    std::vector<std::vector<int>> pos_simple_;
    std::vector<std::vector<int>> coroots_;
    std::vector<int> dual_perm_;
    Integer weyl_order_;
    Integer det_;
    std::vector<std::vector<Integer>> adj_;
    std::vector<std::vector<std::int64_t>> form_;
    std::vector<std::int64_t> height_;
    Weight highest_root_, highest_short_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Weyl-invariant weight multiplicities. Multiplicities may be negative only
// transiently (virtual characters); genuine characters are positive.
class Character {
public:
    using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

    explicit Character(RootSystemPtr rs) : rs_(std::move(rs)) {}

    const RootSystemPtr& root_system() const { return rs_; }
    const Map& weights() const { return mult_; }
    std::int64_t multiplicity(const Weight& w) const;
    void add(const Weight& w, std::int64_t m);
    std::int64_t dimension() const;
    bool genuine() const;  // all multiplicities positive
    std::vector<std::pair<Weight, std::int64_t>> sorted() const;

    bool operator==(const Character& o) const;

private:
    RootSystemPtr rs_;
    Map mult_;
};

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);  // sorted
Integer orbit_size(const RootSystem& rs, const Weight& w);  // |W| / |W_J|, no enumeration
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

// Dominant weights of V_lambda, highest first (by height).
std::vector<Weight> dominant_weights(const RootSystem& rs, const Weight& lambda);
// Multiplicities of the dominant weights. With abort_above set, returns
// nullopt as soon as a multiplicity exceeds it.
std::optional<std::vector<std::pair<Weight, std::int64_t>>> dominant_multiplicities(
    const RootSystem& rs, const Weight& lambda, std::optional<std::int64_t> abort_above = {});
Character freudenthal_character(const RootSystemPtr& rs, const Weight& lambda);

Character char_tensor(const Character& x, const Character& y);
Character char_add(const Character& x, const Character& y, std::int64_t scale_y = 1);
Character char_adams(long n, const Character& x);
Character char_schur(const Partition& alpha, const Character& x);  // throws NonIntegralError
Character char_alt(int k, const Character& x);
Character char_sym(int k, const Character& x);

// Racah/Brauer-Klimyk count of V_nu inside x, without peeling.
std::int64_t constituent_multiplicity(const Character& x, const Weight& nu);
// Peeling by highest dominant weight; throws std::invalid_argument if x is not genuine.
std::vector<std::pair<Weight, std::int64_t>> decompose(const Character& x);

enum class FsType { orthogonal, symplectic, none };
const char* fs_name(FsType t);

bool self_dual(const RootSystem& rs, const Weight& lambda);
// Trivial constituent of Sym^2 V vs Alt^2 V, counted with the Racah formula
// on V (x) V and Psi^2 V.
FsType fs_type(const RootSystem& rs, const Weight& lambda);
// Same verdict from the full characters of Sym^2 and Alt^2 and decompose().
FsType fs_type_by_decomposition(const RootSystemPtr& rs, const Weight& lambda);

bool is_minuscule(const RootSystem& rs, const Weight& lambda);
bool is_quasi_minuscule(const RootSystem& rs, const Weight& lambda);
bool is_wmf(const RootSystem& rs, const Weight& lambda);

// Order of lambda in P/Q.
Integer center_class_order(const RootSystem& rs, const Weight& lambda);
// Order of the kernel of the simply connected group acting on V_lambda.
Integer kernel_order(const RootSystem& rs, const Weight& lambda);
std::string image_group_label(const RootSystem& rs, const Weight& lambda);

// All simple types of rank <= max_rank up to isomorphism:
// A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6-8, F4, G2.
std::vector<RootSystemPtr> simple_types(int max_rank);

// Dominant lambda != 0 with weyl_dim <= max_dim, in BFS order from 0.
std::vector<Weight> dominant_weights_up_to_dim(const RootSystem& rs, const Integer& max_dim);

struct WmfEntry {
    RootSystemPtr rs;
    Weight lambda;
    Integer dim;
    bool minuscule = false;
    bool quasi_minuscule = false;
    FsType fs = FsType::none;
    std::string image;
    Integer kernel;
};

struct ClassifyOptions {
    bool self_dual_only = false;
};

std::vector<WmfEntry> classify_wmf(int max_rank, const Integer& max_dim, ClassifyOptions opt = {});
std::string weight_label(const Weight& w);  // "varpi_3", "2varpi_1+varpi_2", "0"
std::string weight_coords(const Weight& w); // "0,0,1,0,0"
// Coordinates "0,1,0" or a label "varpi_2"; rejects non-dominant weights.
Weight parse_weight(const std::string& text, int rank);

struct QmMatch {
    RootSystemPtr rs;
    Weight lambda;
    Integer dim;
};
std::vector<QmMatch> quasi_minuscule_dim_search(const Integer& dim, int max_rank);
bool orbit_rank_bound(const RootSystem& rs, const Weight& w);
bool root_multiple_condition(const RootSystem& rs, const Weight& lambda);

}  // namespace lcc
