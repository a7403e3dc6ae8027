#pragma once

#include "lcc/cycles.hpp"
#include "lcc/liere.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcc {

// Geometric hypotheses are inputs, never inferred.
struct PpavInput {
    int g = 5;
    int k = 0;  // ordinary double points
    bool symmetric = true;
    bool double_points_sum_zero = true;
    bool pairwise_torsion_independent = true;
    bool stabilizer_trivial = true;
    bool gauss_finite = false;
    // Excludes the Sl_6/mu_3 alternative in g = 4, k = 2 (Jacobians have it).
    bool non_jacobian = false;
};

struct GroupDescriptor {
    bool determined = false;
    std::string family;  // Sp, SO, O, ...
    long size = 0;
    std::string label;   // "Sp_22"; empty when undetermined
    std::string reason;
    std::vector<std::string> alternatives;  // other (type, weight) pairs of the same dimension
};

// Divisor Gauss degree g! - 2k.
Integer odp_divisor_degree(int g, int k);
CleanCycleModel cc_odp(const PpavInput& p);
GroupDescriptor theta_group(const PpavInput& p);

struct SSets {
    std::vector<long> minus, plus;
};
// From the closed formulas, n >= 1.
SSets s_sets(long bound);
// Dimensions of symplectic minuscule / orthogonal wmf representations other
// than the standard ones of B_n, C_n, D_n, read off classify_wmf.
SSets s_sets_from_classification(long bound, int max_rank);
int s_set_rank_bound(long bound);

struct PartitionCoefficient {
    Partition beta;
    Rational m;          // coefficient of p_beta in e_{g-1}
    Integer cm1_factor;  // c_{M,1}(Lambda_[beta]) / c_1
};

struct Genus5Record {
    int g = 5;
    Integer c0;
    Integer fake_dimension;  // C(c0, g-1)
    std::vector<PartitionCoefficient> partitions;  // lexicographic ascending
    Integer alt_coefficient;
    Integer e;
    ChowVector cc_cm1;      // c_{M,1}(cc) in the mu basis
    ChowVector left_side;   // [e]_* applied to c_{M,1}(cc)
    ChowVector c1;          // solved c_{M,1}(Lambda)
    bool integral = false;
    std::string verdict;
};
Genus5Record genus5_obstruction(const CleanCycleModel& cc);
Genus5Record genus5_obstruction(const PpavInput& p);

struct FakeJacobianSolution {
    bool feasible = false;
    std::string reason;
    int g = 0;
    bool hyperelliptic = false;
    Integer target_degree;
    std::vector<Integer> c0_solutions;
    Integer c0;
    Integer e;
    Integer c1_coefficient;              // coefficient of c_1 in the degree-1 equation
    std::optional<Rational> target_cm1;  // mu_1 coordinate of the target, if known
    std::optional<Rational> c1;          // mu_1 coordinate of Lambda
    bool c1_integral = false;
    bool c1_effective = false;
};
// Alt^{g-1} (resp. Alt^{g-1} - Alt^{g-3}) degree-1 coefficient per unit c_1.
Integer alt_cm1_coefficient(int k, const Integer& c0);
FakeJacobianSolution fake_jacobian_solve(int g, const CleanCycleModel& target, bool hyperelliptic);
FakeJacobianSolution fake_jacobian_solve_degree(int g, const Integer& degree, bool hyperelliptic);

struct SummandBound {
    bool vacuous = true;
    Rational delta;
    int d_z = 0;
    bool no_decomposition = false;  // delta > floor(d_Z / 2)
};
SummandBound summand_bound(const std::vector<int>& support_dims, int d_z);

struct SimplicityRecord {
    bool criterion1 = false;
    bool criterion2 = false;
    bool criterion3_applicable = false;
    bool criterion3 = false;  // up to bound only
    bool criterion4_available = false;
    bool criterion4 = false;  // up to bound only
    int bound = 4;
    bool proved = false;      // via (1) or (2)
    bool verified_up_to_bound = false;
};
SimplicityRecord simplicity_criteria(const CleanCycleModel& c, const std::string& divisor_label, int m_bound = 4);

struct FourfoldRow {
    std::string stratum;
    std::string deg_gauss;
    std::string dim_omega;
    std::string omega;
    std::string group;
    std::string note;
};
struct FourfoldTable {
    std::vector<FourfoldRow> rows;
    // Per k = 1..10 for the theta-null row: (deg gauss, dim omega, group).
    std::vector<std::tuple<int, Integer, Integer, std::string>> theta_null;
    // degree(cc) per row, for comparison with the Gauss degree column.
    std::vector<std::string> cc_degree;
};
FourfoldTable fourfold_table();

bool verify_inverse_galois(const GroupRingElement& target, const TensorConstruction& s, long e,
                           const std::vector<GroupRingElement>& candidates);

}  // namespace lcc
