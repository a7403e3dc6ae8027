#pragma once

#include "lcc/chow.hpp"
#include "lcc/lambda.hpp"
#include "lcc/symfun.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcc {

// Names the violated invariant in what().
class InvariantViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// cm excludes the multiplicity. An aggregate component stands for a sum of
// unknown clean components: only its CM totals and degree are meaningful.
struct CycleComponent {
    std::string label;
    int dim = 0;
    Integer mult = 1;
    ChowVector cm;
    bool gauss_finite = false;
    bool aggregate = false;
};

struct CleanCycleModel {
    int g = 1;
    std::vector<CycleComponent> components;
    std::optional<GroupRingElement> fiber;
    // CM data above this index is unknown (quotient CH_{<=d}).
    int cm_valid_through = -1;  // -1 means g-1

    int valid_through() const { return cm_valid_through < 0 ? g - 1 : cm_valid_through; }
};

void validate(const CycleComponent& c, int g);
void validate(const CleanCycleModel& c);

CycleComponent point_component(int g, std::string label, Integer mult = 1);
CleanCycleModel origin_point(int g, const FgAbelianGroup& fiber_group = {});

Integer degree(const CleanCycleModel& c);
ChowVector total_cm(const CleanCycleModel& c);  // sum mult * cm, truncated to valid_through
bool all_gauss_finite(const CleanCycleModel& c);
bool effective(const CleanCycleModel& c);

// d_trunc = 1 is always justified; d_trunc >= 2 needs every component of c1
// or of c2 to have finite Gauss map.
CleanCycleModel convolve(const CleanCycleModel& c1, const CleanCycleModel& c2, int d_trunc);
CleanCycleModel adams_push(long n, const CleanCycleModel& c);  // n != 0
CleanCycleModel schur_cycle(const Partition& alpha, const CleanCycleModel& c, int d_trunc);

// Degree-1 coefficient of c_M(Lambda_[beta]) per unit of c_1, for c_M(Lambda) = (c0, c1, ...).
Integer cm1_partition_product(const Partition& beta, const Integer& c0);

int mindim_bound(int d1, int d2);
bool reduced(const CleanCycleModel& c);
// Throws std::invalid_argument without a fiber model.
bool essentially_multiplicity_free(const CleanCycleModel& c, int n_max);

}  // namespace lcc
