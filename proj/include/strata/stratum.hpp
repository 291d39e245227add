/* Per-beta stratum data: Z/W coordinate sets, Levi block partition,
 * primitive 1-PS lambda_beta, indivisible character chi_beta. */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/repspace.hpp"

namespace strata {

struct Beta {
    int index;
    QVector vec;  // length 8, zero block sums, per-factor non-decreasing
    CaseId case_id;
};

struct StratumData {
    Beta beta;
    std::vector<int> z_serials;  // ascending
    std::vector<int> w_serials;  // ascending
    /* Per factor: ordered partition of 1..n_i into consecutive blocks of
     * equal beta entries (local 1-based indices). */
    std::vector<std::vector<std::vector<int>>> levi;
    std::vector<long> lambda;          // primitive integer vector, length 8
    std::vector<std::vector<long>> chi_exponents;  // per factor, per block
};

StratumData derive_stratum(const Beta &beta);

/* chi_beta evaluated on a block-diagonal Levi element, given as one
 * matrix per factor: product over Levi blocks of det(block)^exponent. */
Rational chi_value(const StratumData &data, const std::vector<QMatrix> &g);

/* Primitive integer vector with the direction of v (all-zero input is an
 * error). */
std::vector<long> primitive_integer_vector(const QVector &v);

/* Levi cut positions per factor (local, 1-based; cut after position p). */
std::vector<std::vector<int>> levi_cuts(const StratumData &data);

/* Golden fixture: the tabulated Levi label, Z and W serials per stratum. */
struct StratumFixture {
    int index;
    std::vector<std::vector<int>> levi_cuts;  // per factor
    std::vector<int> z_serials;
    bool has_w = false;
    std::vector<int> w_serials;
};
std::map<int, StratumFixture> load_stratum_tables(CaseId c,
                                                  const std::string &dir);

}  // namespace strata
