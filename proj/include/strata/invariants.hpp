/* Group actions on both representation spaces, the theta / Castling
 * machinery, relative-invariant evaluation from the s-expression fixture
 * grammar, representative verification, unipotent W-part reduction, and
 * the quadratic-etale-algebra orbit classifier. */

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strata/betaset.hpp"
#include "strata/stratum.hpp"

namespace strata {

/* A point of the representation space, indexed by serial - 1. */
using PointV = QVector;

/* One invertible matrix per group factor (3,3,2 or 6,2). */
using GroupElement = std::vector<QMatrix>;

GroupElement identity_element(CaseId c);

PointV act(CaseId c, const GroupElement &g, const PointV &x);

/* [[a,b],[c,d]] -> [[d,-c],[-b,a]]; multiplicative automorphism of M2. */
QMatrix theta(const QMatrix &a);

/* h1 ^ h2 ^ h3 in the third wedge of M2, identified with M2 so that
 * castling_phi(-E11 + E22, E12, E21) = I2. */
QMatrix castling_phi(const QMatrix &h1, const QMatrix &h2, const QMatrix &h3);

/* Invariant expressions: (x NAME), (int K), (mat N M e...), (det e),
 * (theta e), (pf e...), (phi e e e), (wedge3 e*6), (wedge4 e*14),
 * (mul e...), (add e...), (sub e...), (pow e K). */
struct InvariantExpr {
    std::string head;                 // op name, or atom text when leaf
    std::vector<InvariantExpr> args;  // empty for atoms
    bool is_atom = false;
};

InvariantExpr parse_invariant(const std::string &text);

Rational eval_invariant(CaseId c, const InvariantExpr &e, const PointV &x);

struct UnipPosition {
    int factor;  // 1-based
    int row, col;  // local 1-based, row below col in the beta ordering
};

struct Representative {
    int index = 0;
    PointV point;
    std::string invariant_text;
    InvariantExpr invariant;
    std::vector<long> character;  // full-torus exponents, length 8
    Rational power;               // m with m * proj(character) = primitive beta
    std::vector<UnipPosition> unip;
};

std::map<int, Representative> load_representatives(CaseId c,
                                                   const std::string &dir);

/* Random invertible matrix with entries in {-3..3}. */
QMatrix random_invertible(int n, std::mt19937_64 &rng);

/* Random element of the Levi subgroup M_beta: block diagonal within each
 * factor according to the stratum's Levi decomposition. */
GroupElement random_levi_element(const StratumData &data,
                                 std::mt19937_64 &rng);

/* Value of the character whose per-block det exponents are the entries of
 * `exponents` (one per torus coordinate, constant on Levi blocks). */
Rational character_value(const StratumData &data,
                         const std::vector<long> &exponents,
                         const GroupElement &g);

struct CheckReport {
    bool ok = true;
    std::string error;
};

/* P(g x) = chi(g) P(x) for `trials` random g in M_beta and random x, where
 * chi is the det-character read off rep.character; also checks that
 * power * proj(character) equals the primitive vector along beta. */
CheckReport check_equivariance(const Representative &rep,
                               const StratumData &data, int trials,
                               std::uint64_t seed);

/* R(i) supported on Z_beta only, and P(R(i)) != 0. */
CheckReport verify_representative(const Representative &rep,
                                  const StratumData &data);

struct UnipWitness {
    UnipPosition pos;
    Rational value;
};

/* Clears the W_beta-part of y (whose Z-part is arbitrary but typically
 * R(i)) by exact coordinate descent over the stratum's free unipotent
 * entries, lowest instability weight first.  Throws if some W coordinate
 * is uncontrollable. */
std::pair<std::vector<UnipWitness>, PointV> reduce_unipotent(
    const Representative &rep, const StratumData &data, const PointV &y);

struct OrbitDescriptor {
    OrbitSet kind = OrbitSet::SinglePoint;
    long disc_class = 1;  // square-free; 1 means the split algebra QxQ
    bool reduced = true;  // false if trial division could not finish
};

std::string orbit_label(const OrbitDescriptor &d);

/* Square-free part of a nonzero rational (sign included). */
std::pair<long, bool> square_class(const Rational &q);

/* Pencil discriminant classifier for the two one-parameter strata
 * (Case1 index 29, Case2 index 67).  Throws on degenerate pencils. */
OrbitDescriptor ex2_class(CaseId c, int index, const PointV &x);

}  // namespace strata
