#include "strata/betaset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

namespace strata {

BetaCatalog load_catalog(CaseId c, const std::string &fixtures_dir) {
    std::string path = fixtures_dir + "/betas_case" +
                       (c == CaseId::Case1 ? std::string("1") : "2") + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    BetaCatalog cat;
    cat.case_id = c;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] != "beta" || toks.size() != 12)
            throw std::runtime_error(path + ": bad record: " + line);
        CatalogEntry e;
        e.beta.case_id = c;
        e.beta.index = std::stoi(toks[1]);
        for (int i = 0; i < kAmbientDim; ++i)
            e.beta.vec.push_back(parse_rational(toks[2 + i]));
        auto blocks = factor_blocks(c);
        for (auto [lo, hi] : blocks) {
            Rational sum(0);
            for (int i = lo; i < hi; ++i) {
                sum += e.beta.vec[i];
                if (i > lo && e.beta.vec[i] < e.beta.vec[i - 1])
                    throw std::runtime_error(path + ": beta " + toks[1] +
                                             " not dominant");
            }
            if (sum != 0)
                throw std::runtime_error(path + ": beta " + toks[1] +
                                         " has nonzero block sum");
        }
        bool all_zero = true;
        for (const Rational &q : e.beta.vec) all_zero = all_zero && q == 0;
        if (all_zero)
            throw std::runtime_error(path + ": beta " + toks[1] + " is zero");
        if (toks[10] == "nonempty")
            e.status = Status::NonEmpty;
        else if (toks[10] == "empty")
            e.status = Status::Empty;
        else
            throw std::runtime_error(path + ": beta " + toks[1] +
                                     " bad status " + toks[10]);
        if (toks[11] == "single")
            e.orbit_set = OrbitSet::SinglePoint;
        else if (toks[11] == "ex2")
            e.orbit_set = OrbitSet::Ex2;
        else if (toks[11] == "none")
            e.orbit_set = OrbitSet::NA;
        else
            throw std::runtime_error(path + ": beta " + toks[1] +
                                     " bad orbit set " + toks[11]);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

namespace {

/* Projection of the origin onto the affine hull of the selected points,
 * via the bordered Gram system; returns the barycentric coordinates or an
 * empty vector when the points are affinely dependent. */
QVector affine_projection_coeffs(const std::vector<QVector> &pts,
                                 const std::vector<int> &sel) {
    int k = static_cast<int>(sel.size());
    QMatrix sys(k + 1, k + 1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            sys.at(i, j) = pairing(pts[sel[i]], pts[sel[j]]);
        sys.at(i, k) = 1;
        sys.at(k, i) = 1;
    }
    QVector rhs(k + 1, Rational(0));
    rhs[k] = 1;
    LinearSolution sol = solve_linear(sys, rhs);
    if (sol.kind != LinearSolution::Unique) return {};
    sol.particular.pop_back();  // drop the multiplier
    return sol.particular;
}

QVector combine(const std::vector<QVector> &pts, const std::vector<int> &sel,
                const QVector &coeff) {
    QVector p(pts[sel[0]].size(), Rational(0));
    for (size_t i = 0; i < sel.size(); ++i)
        for (size_t d = 0; d < p.size(); ++d)
            p[d] += coeff[i] * pts[sel[i]][d];
    return p;
}

bool all_nonneg(const QVector &v) {
    for (const Rational &q : v)
        if (q < 0) return false;
    return true;
}

}  // namespace

QVector closest_point_convex_hull(const std::vector<QVector> &points) {
    if (points.empty())
        throw std::invalid_argument("closest_point: empty input");
    size_t dim = points[0].size();
    int maxk = std::min(points.size(), dim + 1);
    std::vector<int> sel;
    QVector best;
    bool have_best = false;
    Rational best_norm;
    auto consider = [&] {
        QVector coeff = affine_projection_coeffs(points, sel);
        if (coeff.empty() || !all_nonneg(coeff)) return;
        QVector p = combine(points, sel, coeff);
        Rational pp = pairing(p, p);
        for (const QVector &q : points)
            if (pairing(p, q) < pp) return;  // not optimal for the full set
        if (!have_best || pp < best_norm) {
            best = std::move(p);
            best_norm = pp;
            have_best = true;
        }
    };
    auto rec = [&](auto &&self, int start) -> void {
        if (!sel.empty()) consider();
        if (static_cast<int>(sel.size()) == maxk) return;
        for (int i = start; i < static_cast<int>(points.size()); ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0);
    if (!have_best) throw std::logic_error("closest_point: no candidate");
    return best;
}

QVector dominant_representative(CaseId c, const QVector &v) {
    QVector out = v;
    for (auto [lo, hi] : factor_blocks(c))
        std::sort(out.begin() + lo, out.begin() + hi);
    return out;
}

namespace {

/* Membership of beta in conv{w : <w,beta> >= <beta,beta>}: beta is then
 * automatically the minimum-norm point of that hull. */
bool is_minimal_vector(CaseId c, const QVector &beta,
                       const std::vector<QVector> &weights) {
    Rational bb = pairing(beta, beta);
    std::vector<const QVector *> side;
    for (const QVector &w : weights)
        if (pairing(w, beta) >= bb) side.push_back(&w);
    if (side.empty()) return false;
    int n = static_cast<int>(side.size());
    QMatrix a(kAmbientDim + 1, n);
    QVector b(kAmbientDim + 1);
    for (int d = 0; d < kAmbientDim; ++d) {
        for (int j = 0; j < n; ++j) a.at(d, j) = (*side[j])[d];
        b[d] = beta[d];
    }
    for (int j = 0; j < n; ++j) a.at(kAmbientDim, j) = 1;
    b[kAmbientDim] = 1;
    return lp_feasible(a, b).has_value();
}

}  // namespace

std::vector<QVector> enumerate_candidates(CaseId c, int jobs) {
    std::vector<QVector> weights;
    for (const CoordIndex &ci : enumerate_coordinates(c))
        weights.push_back(project_to_tstar(c, raw_weight(c, ci).entries));
    int nw = static_cast<int>(weights.size());
    int tstar_dim = c == CaseId::Case1 ? 5 : 6;
    int maxk = tstar_dim + 1;

    if (jobs < 1) jobs = 1;
    std::vector<std::set<QVector>> partial(jobs);
    auto worker = [&](int wid) {
        std::vector<int> sel;
        auto rec = [&](auto &&self, int start) -> void {
            if (!sel.empty()) {
                QVector coeff = affine_projection_coeffs(weights, sel);
                if (!coeff.empty() && all_nonneg(coeff)) {
                    QVector p = combine(weights, sel, coeff);
                    bool zero = true;
                    for (const Rational &q : p) zero = zero && q == 0;
                    if (!zero)
                        partial[wid].insert(dominant_representative(c, p));
                }
            }
            if (static_cast<int>(sel.size()) == maxk) return;
            for (int i = start; i < nw; ++i) {
                if (sel.empty() && i % jobs != wid) continue;
                sel.push_back(i);
                self(self, i + 1);
                sel.pop_back();
            }
        };
        rec(rec, 0);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto &t : threads) t.join();
    }
    std::set<QVector> merged;
    for (auto &s : partial) merged.insert(s.begin(), s.end());

    std::vector<QVector> out;
    for (const QVector &cand : merged)
        if (is_minimal_vector(c, cand, weights)) out.push_back(cand);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strata
