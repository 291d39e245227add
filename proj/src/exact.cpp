#include "strata/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace strata {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix &o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    QMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < o.cols_; ++c)
                p.at(r, c) += at(r, k) * o.at(k, c);
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape");
    QMatrix s(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) s.at(r, c) = at(r, c) + o.at(r, c);
    return s;
}

QMatrix QMatrix::operator-(const QMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape");
    QMatrix s(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) s.at(r, c) = at(r, c) - o.at(r, c);
    return s;
}

std::pair<QMatrix, std::vector<int>> rref(const QMatrix &m) {
    QMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Rational inv = 1 / a.at(r, c);
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

LinearSolution solve_linear(const QMatrix &a, const QVector &b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve_linear shape");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    auto [rr, pivots] = rref(aug);
    LinearSolution sol;
    for (int v : pivots)
        if (v == a.cols()) {
            sol.kind = LinearSolution::NoSolution;
            return sol;
        }
    sol.particular.assign(a.cols(), Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        sol.particular[pivots[k]] = rr.at(static_cast<int>(k), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int v : pivots) is_pivot[v] = true;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        QVector nv(a.cols(), Rational(0));
        nv[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            nv[pivots[k]] = -rr.at(static_cast<int>(k), c);
        sol.nullspace.push_back(std::move(nv));
    }
    sol.kind = sol.nullspace.empty() ? LinearSolution::Unique
                                     : LinearSolution::Parametric;
    return sol;
}

Rational det(const QMatrix &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
    int n = m.rows();
    if (n == 0) return 1;
    QMatrix a = m;
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) -
                              a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

Rational pf_rec(const QMatrix &m, std::vector<int> idx) {
    if (idx.empty()) return 1;
    int a = idx[0];
    Rational total(0);
    for (size_t t = 1; t < idx.size(); ++t) {
        const Rational &v = m.at(a, idx[t]);
        if (v == 0) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (size_t u = 1; u < idx.size(); ++u)
            if (u != t) rest.push_back(idx[u]);
        Rational sub = pf_rec(m, std::move(rest));
        if (t % 2 == 1)
            total += v * sub;
        else
            total -= v * sub;
    }
    return total;
}

}  // namespace

Rational pfaffian(const QMatrix &m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("pfaffian: need even square matrix");
    for (int r = 0; r < m.rows(); ++r) {
        if (m.at(r, r) != 0)
            throw std::invalid_argument("pfaffian: nonzero diagonal");
        for (int c = r + 1; c < m.cols(); ++c)
            if (m.at(r, c) != -m.at(c, r))
                throw std::invalid_argument("pfaffian: not alternating");
    }
    std::vector<int> idx(m.rows());
    for (int i = 0; i < m.rows(); ++i) idx[i] = i;
    return pf_rec(m, std::move(idx));
}

Rational parse_rational(const std::string &s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational &q) { return q.get_str(); }

std::vector<std::string> split_ws(const std::string &line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::optional<QVector> lp_feasible(const QMatrix &a, const QVector &b) {
    int m = a.rows(), n = a.cols();
    if (m != static_cast<int>(b.size()))
        throw std::invalid_argument("lp_feasible shape");
    /* Phase-1 tableau: columns = original vars + artificials + rhs.
     * Rows normalized so rhs >= 0; minimize the sum of artificials. */
    int cols = n + m + 1;
    QMatrix t(m + 1, cols);
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) {
        int s = b[r] < 0 ? -1 : 1;
        for (int c = 0; c < n; ++c) t.at(r, c) = s * a.at(r, c);
        t.at(r, n + r) = 1;
        t.at(r, cols - 1) = s * b[r];
        basis[r] = n + r;
    }
    for (int c = 0; c < cols; ++c) {
        Rational sum(0);
        for (int r = 0; r < m; ++r) sum += t.at(r, c);
        t.at(m, c) = -sum;  // objective row: minimize sum of artificials
    }
    for (int r = 0; r < m; ++r) t.at(m, n + r) = 0;
    while (true) {
        int enter = -1;  // Bland: smallest index with negative reduced cost
        for (int c = 0; c < cols - 1; ++c)
            if (t.at(m, c) < 0) { enter = c; break; }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (t.at(r, enter) <= 0) continue;
            Rational ratio = t.at(r, cols - 1) / t.at(r, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) return std::nullopt;  // unbounded phase 1: cannot occur
        Rational piv = t.at(leave, enter);
        for (int c = 0; c < cols; ++c) t.at(leave, c) /= piv;
        for (int r = 0; r <= m; ++r) {
            if (r == leave || t.at(r, enter) == 0) continue;
            Rational f = t.at(r, enter);
            for (int c = 0; c < cols; ++c)
                t.at(r, c) -= f * t.at(leave, c);
        }
        basis[leave] = enter;
    }
    if (t.at(m, cols - 1) != 0) return std::nullopt;  // artificials remain
    QVector x(n, Rational(0));
    for (int r = 0; r < m; ++r) {
        if (basis[r] < n) {
            x[basis[r]] = t.at(r, cols - 1);
        } else if (t.at(r, cols - 1) != 0) {
            /* Degenerate zero-level artificial left in the basis is fine;
             * a nonzero one contradicts objective value 0. */
            return std::nullopt;
        }
    }
    return x;
}

}  // namespace strata
