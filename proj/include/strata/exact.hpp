/* Exact rational arithmetic and linear algebra: vectors, matrices,
 * reduced row echelon form, linear solving, determinant, Pfaffian. */

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strata {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational &at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational &at(int r, int c) const {
        return a_[static_cast<size_t>(r) * cols_ + c];
    }
    bool operator==(const QMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix &o) const;
    QMatrix operator+(const QMatrix &o) const;
    QMatrix operator-(const QMatrix &o) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/* Reduced row echelon form plus pivot column indices. */
std::pair<QMatrix, std::vector<int>> rref(const QMatrix &m);

/* Exact solution set of a x = b. */
struct LinearSolution {
    enum Kind { Unique, NoSolution, Parametric } kind;
    QVector particular;                 // valid unless NoSolution
    std::vector<QVector> nullspace;     // basis; nonempty iff Parametric
};
LinearSolution solve_linear(const QMatrix &a, const QVector &b);

/* Exact determinant by fraction-free (Bareiss) elimination. */
Rational det(const QMatrix &m);

/* Exact Pfaffian of an alternating matrix (checked: m^T = -m, zero
 * diagonal, even dimension); pf(m)^2 = det(m). */
Rational pfaffian(const QMatrix &m);

/* Small parsing helpers shared by the fixture loaders. */
Rational parse_rational(const std::string &s);
std::string rational_str(const Rational &q);
std::vector<std::string> split_ws(const std::string &line);

/* Exact linear feasibility of {x >= 0 : A x = b} by phase-1 simplex
 * with Bland's rule.  Returns a feasible point or nullopt. */
std::optional<QVector> lp_feasible(const QMatrix &a, const QVector &b);

}  // namespace strata
