/* The catalog of candidate vectors beta (49 + 81) and its independent
 * re-derivation by exact minimum-norm-point enumeration. */

#pragma once

#include <string>
#include <vector>

#include "strata/stratum.hpp"

namespace strata {

enum class Status { NonEmpty, Empty };
enum class OrbitSet { SinglePoint, Ex2, NA };

struct CatalogEntry {
    Beta beta;
    Status status;
    OrbitSet orbit_set;
};

struct BetaCatalog {
    CaseId case_id;
    std::vector<CatalogEntry> entries;  // ordered by index
};

BetaCatalog load_catalog(CaseId c, const std::string &fixtures_dir);

/* Unique minimum-norm point of the convex hull, computed exactly by
 * projecting the origin onto the affine hulls of affinely independent
 * subsets and certifying optimality against the full point set. */
QVector closest_point_convex_hull(const std::vector<QVector> &points);

/* Re-derive the candidate set: minimum-norm points of hulls of subsets of
 * projected coordinate weights (size <= dim t* + 1), filtered by the
 * minimal-vector property and mapped to dominant representatives.
 * Result sorted lexicographically. */
std::vector<QVector> enumerate_candidates(CaseId c, int jobs = 1);

/* Per-factor non-decreasing reordering. */
QVector dominant_representative(CaseId c, const QVector &v);

}  // namespace strata
