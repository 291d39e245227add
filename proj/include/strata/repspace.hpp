/* The two representations: group shape, coordinate numbering, weights in
 * t*, pairing, and the case-1 factor-swap involution sigma. */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "strata/exact.hpp"

namespace strata {

enum class CaseId { Case1 = 1, Case2 = 2 };

inline constexpr int kAmbientDim = 8;

struct GroupShape {
    std::vector<int> factor_sizes;  // case 1: {3,3,2}; case 2: {6,2}
};
GroupShape group_shape(CaseId c);

/* Half-open [begin, end) index ranges of the factor blocks in the
 * 8-dimensional ambient weight space. */
std::vector<std::pair<int, int>> factor_blocks(CaseId c);

enum class FactorKind { Standard, Wedge2 };

struct RepSpec {
    CaseId case_id;
    std::vector<std::pair<int, FactorKind>> factors;
};
RepSpec rep_spec(CaseId c);

/* Case 1: (i1, i2, i3) with i1,i2 in 1..3, i3 in 1..2.
 * Case 2: (i1 < i2, i3) with i1,i2 in 1..6, i3 (slice) in 1..2. */
struct CoordIndex {
    int i1, i2, i3;
    int serial;  // 1-based, matching the numbering tables
};

const std::vector<CoordIndex> &enumerate_coordinates(CaseId c);
int dim_v(CaseId c);  // 18 or 30

const CoordIndex &coord_by_serial(CaseId c, int serial);
std::string coord_name(CaseId c, int serial);        // e.g. "231"
int serial_of_name(CaseId c, const std::string &n);  // inverse

struct WeightVector {
    QVector entries;  // length 8
    enum Flavor { Raw, Projected } flavor;
};

WeightVector raw_weight(CaseId c, const CoordIndex &ci);
WeightVector project_to_tstar(CaseId c, const WeightVector &w);
QVector project_to_tstar(CaseId c, const QVector &v);
Rational pairing(const QVector &a, const QVector &b);

/* sigma (case 1 only): swap the roles of the first two GL3 factors. */
QVector sigma_swap_beta(const QVector &beta8);
int sigma_swap_serial(int serial);
QVector sigma_swap_point(const QVector &point18);

}  // namespace strata
