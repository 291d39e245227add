/* Emptiness certificates: elimination steps justified by the elimination
 * lemmas, plus an integer 1-PS orthogonal to beta with strictly positive
 * weights on the residual coordinates; and an exact linear-feasibility
 * search for such a 1-PS. */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/stratum.hpp"

namespace strata {

struct EliminationStep {
    /* Standard, TallMatrix, Pair2xM2, Pair2xM32, Pair3xM32,
     * WittAlternating */
    std::string lemma_id;
    std::vector<int> dims;    // lemma dimension parameters
    std::vector<int> module;  // coordinate serials, canonical order
    std::vector<int> zeroed;  // ascending serials
};

struct OnePS {
    std::vector<long> exponents;  // length 8, zero block sums
};

struct EmptinessCertificate {
    int beta_index;
    std::vector<EliminationStep> steps;
    OnePS lam;
    std::vector<std::pair<int, long>> residual_weights;  // serial -> weight
};

std::map<int, EmptinessCertificate> load_certificates(CaseId c,
                                                      const std::string &dir);

long weight_of(const OnePS &lam, CaseId c, int serial);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::pair<int, long>> weights;  // residual serial -> weight
};

/* Checks, in order: (a) every elimination step's declared module matches
 * the stratum's structure and its zeroed set is the lemma's pattern;
 * (b) lam has zero block sums; (c) <lam, beta> = 0; (d) positive weight
 * on every residual Z coordinate. */
VerifyReport verify_certificate(const EmptinessCertificate &cert,
                                const StratumData &data);

bool check_elimination_applicability(const EliminationStep &step,
                                     const StratumData &data);

/* Exact linear feasibility: integer c with zero block sums, <c,beta> = 0
 * and <c, wt(j)> >= 1 for all residual serials; primitive scaling. */
std::optional<std::vector<long>> find_oneps(const StratumData &data,
                                            const std::vector<int> &residual);

}  // namespace strata
