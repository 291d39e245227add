#include "strata/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace strata {

namespace {

int case1_serial(int i1, int i2, int i3) {
    return (i3 - 1) * 9 + (i1 - 1) * 3 + i2;
}

int case2_serial(int a, int b, int s) {
    return (s - 1) * 15 + (a - 1) * 6 - a * (a - 1) / 2 + (b - a);
}

}  // namespace

GroupElement identity_element(CaseId c) {
    GroupElement g;
    for (auto [lo, hi] : factor_blocks(c))
        g.push_back(QMatrix::identity(hi - lo));
    return g;
}

PointV act(CaseId c, const GroupElement &g, const PointV &x) {
    PointV out(x.size(), Rational(0));
    if (c == CaseId::Case1) {
        const QMatrix &g1 = g[0], &g2 = g[1], &g3 = g[2];
        for (int i1 = 1; i1 <= 3; ++i1)
            for (int i2 = 1; i2 <= 3; ++i2)
                for (int i3 = 1; i3 <= 2; ++i3) {
                    Rational v(0);
                    for (int j1 = 1; j1 <= 3; ++j1)
                        for (int j2 = 1; j2 <= 3; ++j2)
                            for (int j3 = 1; j3 <= 2; ++j3)
                                v += g1.at(i1 - 1, j1 - 1) *
                                     g2.at(i2 - 1, j2 - 1) *
                                     g3.at(i3 - 1, j3 - 1) *
                                     x[case1_serial(j1, j2, j3) - 1];
                    out[case1_serial(i1, i2, i3) - 1] = v;
                }
        return out;
    }
    const QMatrix &g1 = g[0], &g2 = g[1];
    std::vector<QMatrix> slices;
    for (int s = 1; s <= 2; ++s) {
        QMatrix a(6, 6);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                const Rational &v = x[case2_serial(i, j, s) - 1];
                a.at(i - 1, j - 1) = v;
                a.at(j - 1, i - 1) = -v;
            }
        slices.push_back(g1 * a * g1.transpose());
    }
    for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                out[case2_serial(i, j, k) - 1] =
                    g2.at(k - 1, 0) * slices[0].at(i - 1, j - 1) +
                    g2.at(k - 1, 1) * slices[1].at(i - 1, j - 1);
    return out;
}

QMatrix theta(const QMatrix &a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw std::invalid_argument("theta: expects a 2x2 matrix");
    QMatrix out(2, 2);
    out.at(0, 0) = a.at(1, 1);
    out.at(0, 1) = -a.at(1, 0);
    out.at(1, 0) = -a.at(0, 1);
    out.at(1, 1) = a.at(0, 0);
    return out;
}

QMatrix castling_phi(const QMatrix &h1, const QMatrix &h2, const QMatrix &h3) {
    const QMatrix *hs[3] = {&h1, &h2, &h3};
    /* flatten each h over the basis (E11, E12, E21, E22) */
    Rational h[3][4];
    for (int i = 0; i < 3; ++i) {
        h[i][0] = hs[i]->at(0, 0);
        h[i][1] = hs[i]->at(0, 1);
        h[i][2] = hs[i]->at(1, 0);
        h[i][3] = hs[i]->at(1, 1);
    }
    QMatrix out(2, 2);
    for (int j = 0; j < 4; ++j) {
        /* wedge coefficient on the complementary 3 basis slots, with the
         * dual-basis sign (-1)^j */
        QMatrix m3(3, 3);
        int col = 0;
        for (int a = 0; a < 4; ++a) {
            if (a == j) continue;
            for (int i = 0; i < 3; ++i) m3.at(i, col) = h[i][a];
            ++col;
        }
        Rational d3 = det(m3);
        out.at(j / 2, j % 2) = j % 2 == 1 ? -d3 : d3;
    }
    return out;
}

InvariantExpr parse_invariant(const std::string &text) {
    std::string spaced;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            spaced += ' ';
            spaced += ch;
            spaced += ' ';
        } else {
            spaced += ch;
        }
    }
    auto toks = split_ws(spaced);
    size_t pos = 0;
    auto rd = [&](auto &&self) -> InvariantExpr {
        if (pos >= toks.size())
            throw std::invalid_argument("invariant: truncated expression");
        std::string t = toks[pos++];
        if (t == "(") {
            InvariantExpr e;
            if (pos >= toks.size() || toks[pos] == ")")
                throw std::invalid_argument("invariant: empty list");
            e.head = toks[pos++];
            while (pos < toks.size() && toks[pos] != ")")
                e.args.push_back(self(self));
            if (pos >= toks.size())
                throw std::invalid_argument("invariant: missing ')'");
            ++pos;
            return e;
        }
        if (t == ")") throw std::invalid_argument("invariant: stray ')'");
        InvariantExpr e;
        e.head = t;
        e.is_atom = true;
        return e;
    };
    InvariantExpr e = rd(rd);
    if (pos != toks.size())
        throw std::invalid_argument("invariant: trailing tokens");
    return e;
}

namespace {

struct Val {
    bool is_mat = false;
    Rational s;
    QMatrix m;
};

Rational scal(const Val &v) {
    if (!v.is_mat) return v.s;
    if (v.m.rows() == 1 && v.m.cols() == 1) return v.m.at(0, 0);
    throw std::invalid_argument("invariant: matrix where scalar needed");
}

long atom_int(const InvariantExpr &e) {
    if (!e.is_atom) throw std::invalid_argument("invariant: expected literal");
    return std::stol(e.head);
}

Val eval_node(CaseId c, const InvariantExpr &e, const PointV &x) {
    if (e.is_atom) throw std::invalid_argument("invariant: bare atom");
    const std::string &op = e.head;
    auto sub = [&](size_t i) { return eval_node(c, e.args[i], x); };
    if (op == "x") {
        Val v;
        v.s = x[serial_of_name(c, e.args[0].head) - 1];
        return v;
    }
    if (op == "int") {
        Val v;
        v.s = Rational(atom_int(e.args[0]));
        return v;
    }
    if (op == "mat") {
        int n = static_cast<int>(atom_int(e.args[0]));
        int m = static_cast<int>(atom_int(e.args[1]));
        if (static_cast<int>(e.args.size()) != 2 + n * m)
            throw std::invalid_argument("invariant: mat entry count");
        Val v;
        v.is_mat = true;
        v.m = QMatrix(n, m);
        for (int i = 0; i < n * m; ++i)
            v.m.at(i / m, i % m) = scal(sub(2 + i));
        return v;
    }
    if (op == "det") {
        Val v;
        v.s = det(sub(0).m);
        return v;
    }
    if (op == "theta") {
        Val v;
        v.is_mat = true;
        v.m = theta(sub(0).m);
        return v;
    }
    if (op == "pf") {
        static const std::map<size_t, int> sizes{
            {1, 2}, {3, 3}, {6, 4}, {10, 5}, {15, 6}};
        auto it = sizes.find(e.args.size());
        if (it == sizes.end())
            throw std::invalid_argument("invariant: pf entry count");
        int n = it->second;
        QMatrix a(n, n);
        size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rational val = scal(sub(k++));
                a.at(i, j) = val;
                a.at(j, i) = -val;
            }
        Val v;
        v.s = pfaffian(a);
        return v;
    }
    if (op == "phi") {
        Val v;
        v.is_mat = true;
        v.m = castling_phi(sub(0).m, sub(1).m, sub(2).m);
        return v;
    }
    if (op == "wedge3") {
        Rational a1 = scal(sub(0)), a2 = scal(sub(1)), a3 = scal(sub(2));
        Rational b12 = scal(sub(3)), b13 = scal(sub(4)), b23 = scal(sub(5));
        Val v;
        v.s = a1 * b23 - a2 * b13 + a3 * b12;
        return v;
    }
    if (op == "wedge4") {
        Rational q[14];
        for (int i = 0; i < 14; ++i) q[i] = scal(sub(i));
        const Rational *a = q, *v1 = q + 6, *w = q + 10;
        Val v;
        v.s = a[0] * (v1[2] * w[3] - v1[3] * w[2]) -
              a[1] * (v1[1] * w[3] - v1[3] * w[1]) +
              a[2] * (v1[1] * w[2] - v1[2] * w[1]) +
              a[3] * (v1[0] * w[3] - v1[3] * w[0]) -
              a[4] * (v1[0] * w[2] - v1[2] * w[0]) +
              a[5] * (v1[0] * w[1] - v1[1] * w[0]);
        return v;
    }
    if (op == "mul") {
        Rational sc(1);
        bool have_m = false;
        QMatrix m;
        for (size_t i = 0; i < e.args.size(); ++i) {
            Val v = sub(i);
            if (v.is_mat) {
                m = have_m ? m * v.m : v.m;
                have_m = true;
            } else {
                sc *= v.s;
            }
        }
        Val out;
        if (!have_m) {
            out.s = sc;
        } else if (m.rows() == 1 && m.cols() == 1) {
            out.s = sc * m.at(0, 0);
        } else {
            out.is_mat = true;
            out.m = QMatrix(m.rows(), m.cols());
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    out.m.at(i, j) = sc * m.at(i, j);
        }
        return out;
    }
    if (op == "add" || op == "sub") {
        Val acc = sub(0);
        for (size_t i = 1; i < e.args.size(); ++i) {
            Val v = sub(i);
            if (acc.is_mat != v.is_mat)
                throw std::invalid_argument("invariant: add/sub shapes");
            if (acc.is_mat) {
                for (int r = 0; r < acc.m.rows(); ++r)
                    for (int cc = 0; cc < acc.m.cols(); ++cc) {
                        if (op == "add")
                            acc.m.at(r, cc) += v.m.at(r, cc);
                        else
                            acc.m.at(r, cc) -= v.m.at(r, cc);
                    }
            } else {
                if (op == "add")
                    acc.s += v.s;
                else
                    acc.s -= v.s;
            }
        }
        return acc;
    }
    if (op == "pow") {
        Rational base = scal(sub(0));
        long k = atom_int(e.args[1]);
        Val v;
        v.s = 1;
        for (long i = 0; i < k; ++i) v.s *= base;
        return v;
    }
    throw std::invalid_argument("invariant: unknown op " + op);
}

}  // namespace

Rational eval_invariant(CaseId c, const InvariantExpr &e, const PointV &x) {
    return scal(eval_node(c, e, x));
}

std::map<int, Representative> load_representatives(CaseId c,
                                                   const std::string &dir) {
    std::string path = dir + "/representatives_case" +
                       (c == CaseId::Case1 ? std::string("1") : "2") + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<int, Representative> out;
    Representative cur;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "rep") {
            cur = Representative{};
            cur.index = std::stoi(toks[1]);
            cur.point.assign(dim_v(c), Rational(0));
            open = true;
        } else if (toks[0] == "point") {
            for (size_t i = 1; i < toks.size(); ++i) {
                auto pos = toks[i].find(':');
                int serial = std::stoi(toks[i].substr(0, pos));
                cur.point[serial - 1] = parse_rational(toks[i].substr(pos + 1));
            }
        } else if (toks[0] == "invariant") {
            auto pos = line.find("invariant");
            cur.invariant_text = line.substr(pos + 9);
            cur.invariant = parse_invariant(cur.invariant_text);
        } else if (toks[0] == "character") {
            for (size_t i = 1; i < toks.size(); ++i)
                cur.character.push_back(std::stol(toks[i]));
        } else if (toks[0] == "power") {
            cur.power = parse_rational(toks[1]);
        } else if (toks[0] == "unip") {
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i] == "-") continue;
                auto colon = toks[i].find(':');
                auto comma = toks[i].find(',');
                UnipPosition p;
                p.factor = std::stoi(toks[i].substr(0, colon));
                p.row = std::stoi(
                    toks[i].substr(colon + 1, comma - colon - 1));
                p.col = std::stoi(toks[i].substr(comma + 1));
                cur.unip.push_back(p);
            }
        } else if (toks[0] == "end") {
            out[cur.index] = cur;
            open = false;
        } else {
            throw std::runtime_error(path + ": unexpected line: " + line);
        }
    }
    if (open) throw std::runtime_error(path + ": unterminated record");
    return out;
}

QMatrix random_invertible(int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rational(d(rng));
        if (det(m) != 0) return m;
    }
}

GroupElement random_levi_element(const StratumData &data,
                                 std::mt19937_64 &rng) {
    GroupElement g;
    auto blocks = factor_blocks(data.beta.case_id);
    for (size_t f = 0; f < blocks.size(); ++f) {
        int n = blocks[f].second - blocks[f].first;
        QMatrix m(n, n);
        for (const auto &blk : data.levi[f]) {
            int k = static_cast<int>(blk.size());
            QMatrix sub = random_invertible(k, rng);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    m.at(blk[r] - 1, blk[c] - 1) = sub.at(r, c);
        }
        g.push_back(std::move(m));
    }
    return g;
}

Rational character_value(const StratumData &data,
                         const std::vector<long> &exponents,
                         const GroupElement &g) {
    auto blocks = factor_blocks(data.beta.case_id);
    Rational result(1);
    for (size_t f = 0; f < blocks.size(); ++f) {
        for (const auto &blk : data.levi[f]) {
            int k = static_cast<int>(blk.size());
            QMatrix sub(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    sub.at(r, c) = g[f].at(blk[r] - 1, blk[c] - 1);
            Rational dv = det(sub);
            long e = exponents[blocks[f].first + blk.front() - 1];
            if (dv == 0) throw std::invalid_argument("character: singular");
            Rational base = e >= 0 ? dv : 1 / dv;
            for (long i = 0; i < (e >= 0 ? e : -e); ++i) result *= base;
        }
    }
    return result;
}

CheckReport check_equivariance(const Representative &rep,
                               const StratumData &data, int trials,
                               std::uint64_t seed) {
    CheckReport rpt;
    CaseId c = data.beta.case_id;
    if (rep.character.size() != kAmbientDim) {
        rpt.ok = false;
        rpt.error = "character has wrong length";
        return rpt;
    }
    /* the character must be constant on each Levi block ... */
    auto blocks = factor_blocks(c);
    for (size_t f = 0; f < blocks.size(); ++f)
        for (const auto &blk : data.levi[f])
            for (int b : blk)
                if (rep.character[blocks[f].first + b - 1] !=
                    rep.character[blocks[f].first + blk.front() - 1]) {
                    rpt.ok = false;
                    rpt.error = "character not constant on a Levi block";
                    return rpt;
                }
    /* ... and positively proportional to beta: power * proj(d) = lambda */
    QVector d_q;
    for (long v : rep.character) d_q.push_back(Rational(v));
    QVector proj_d = project_to_tstar(c, d_q);
    if (rep.power <= 0) {
        rpt.ok = false;
        rpt.error = "power not positive";
        return rpt;
    }
    for (int i = 0; i < kAmbientDim; ++i)
        if (rep.power * proj_d[i] != Rational(data.lambda[i])) {
            rpt.ok = false;
            rpt.error = "character not proportional to beta";
            return rpt;
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int t = 0; t < trials; ++t) {
        GroupElement g = random_levi_element(data, rng);
        PointV x(dim_v(c), Rational(0));
        for (int s : data.z_serials) x[s - 1] = Rational(dist(rng));
        Rational lhs = eval_invariant(c, rep.invariant, act(c, g, x));
        Rational rhs = character_value(data, rep.character, g) *
                       eval_invariant(c, rep.invariant, x);
        if (lhs != rhs) {
            rpt.ok = false;
            rpt.error = "equivariance failed on trial " + std::to_string(t);
            return rpt;
        }
    }
    return rpt;
}

CheckReport verify_representative(const Representative &rep,
                                  const StratumData &data) {
    CheckReport rpt;
    CaseId c = data.beta.case_id;
    std::vector<bool> in_z(dim_v(c) + 1, false);
    for (int s : data.z_serials) in_z[s] = true;
    for (int s = 1; s <= dim_v(c); ++s)
        if (rep.point[s - 1] != 0 && !in_z[s]) {
            rpt.ok = false;
            rpt.error = "representative supported outside Z at serial " +
                        std::to_string(s);
            return rpt;
        }
    if (eval_invariant(c, rep.invariant, rep.point) == 0) {
        rpt.ok = false;
        rpt.error = "invariant vanishes at the representative";
    }
    return rpt;
}

namespace {

PointV act_single(CaseId c, const UnipPosition &p, const Rational &t,
                  const PointV &y) {
    GroupElement g = identity_element(c);
    g[p.factor - 1].at(p.row - 1, p.col - 1) = t;
    return act(c, g, y);
}

}  // namespace

std::pair<std::vector<UnipWitness>, PointV> reduce_unipotent(
    const Representative &rep, const StratumData &data, const PointV &y0) {
    CaseId c = data.beta.case_id;
    PointV y = y0;
    std::vector<UnipWitness> witness;
    /* clear W coordinates level by level in increasing instability weight;
     * the unipotent action only moves mass to strictly higher weights, so
     * already-cleared levels stay zero */
    std::map<Rational, std::vector<int>> levels;
    for (int s : data.w_serials)
        levels[pairing(data.beta.vec,
                       raw_weight(c, coord_by_serial(c, s)).entries)]
            .push_back(s);
    const size_t k = rep.unip.size();
    for (const auto &[lvl, serials] : levels) {
        /* Within one weight level the response to every unipotent parameter
         * is exactly linear: cross terms and the quadratic part of a single
         * move land on strictly higher levels only.  Solve for all
         * parameters at once, then apply the moves in sequence. */
        QMatrix a(serials.size(), k);
        QVector rhs;
        for (size_t j = 0; j < k; ++j) {
            PointV y1 = act_single(c, rep.unip[j], Rational(1), y);
            PointV y2 = act_single(c, rep.unip[j], Rational(2), y);
            for (size_t i = 0; i < serials.size(); ++i) {
                int s = serials[i];
                Rational v0 = y[s - 1], v1 = y1[s - 1], v2 = y2[s - 1];
                if (v2 - 2 * v1 + v0 != 0)
                    throw std::logic_error(
                        "reduce_unipotent: non-affine coordinate response");
                a.at(i, j) = v1 - v0;
            }
        }
        for (int s : serials) rhs.push_back(-y[s - 1]);
        LinearSolution sol = solve_linear(a, rhs);
        if (sol.kind == LinearSolution::NoSolution)
            throw std::runtime_error(
                "reduce_unipotent: uncontrollable W level " +
                rational_str(lvl));
        for (size_t j = 0; j < k; ++j) {
            if (sol.particular[j] == 0) continue;
            y = act_single(c, rep.unip[j], sol.particular[j], y);
            witness.push_back({rep.unip[j], sol.particular[j]});
        }
        for (int s : serials)
            if (y[s - 1] != 0)
                throw std::logic_error(
                    "reduce_unipotent: level failed to clear");
    }
    return {witness, y};
}

std::pair<long, bool> square_class(const Rational &q) {
    if (q == 0) throw std::invalid_argument("square_class: zero");
    mpz_class n = q.get_num() * q.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class cls(1);
    bool reduced = true;
    for (mpz_class p(2); p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) cls *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            /* even power; contributes nothing */
        } else if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            cls *= n;
        } else {
            cls *= n;
            reduced = false;
        }
    }
    if (neg) cls = -cls;
    if (!cls.fits_slong_p())
        throw std::overflow_error("square_class: class too large");
    return {cls.get_si(), reduced};
}

std::string orbit_label(const OrbitDescriptor &d) {
    if (d.kind == OrbitSet::SinglePoint) return "single orbit";
    if (d.disc_class == 1) return "Ex2: split algebra Q x Q";
    std::string s = "Ex2: Q(sqrt(" + std::to_string(d.disc_class) + "))";
    if (!d.reduced) s += " [discriminant not fully factored]";
    return s;
}

OrbitDescriptor ex2_class(CaseId c, int index, const PointV &x) {
    Rational a, b, cc;
    auto v = [&](const char *name) {
        return x[serial_of_name(c, name) - 1];
    };
    if (c == CaseId::Case1 && index == 29) {
        QMatrix A(2, 2), B(2, 2), S(2, 2);
        A.at(0, 0) = v("221");
        A.at(0, 1) = v("231");
        A.at(1, 0) = v("321");
        A.at(1, 1) = v("331");
        B.at(0, 0) = v("222");
        B.at(0, 1) = v("232");
        B.at(1, 0) = v("322");
        B.at(1, 1) = v("332");
        S = A + B;
        a = det(A);
        cc = det(B);
        b = det(S) - a - cc;
    } else if (c == CaseId::Case2 && index == 67) {
        auto pf4 = [&](int s) {
            QMatrix m(4, 4);
            static const int members[4] = {3, 4, 5, 6};
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    Rational e =
                        x[case2_serial(members[i], members[j], s) - 1];
                    m.at(i, j) = e;
                    m.at(j, i) = -e;
                }
            return m;
        };
        QMatrix A = pf4(1), B = pf4(2);
        a = pfaffian(A);
        cc = pfaffian(B);
        b = pfaffian(A + B) - a - cc;
    } else {
        throw std::invalid_argument("ex2_class: not a pencil stratum");
    }
    if (a == 0 && b == 0 && cc == 0)
        throw std::invalid_argument("ex2_class: pencil form vanishes");
    Rational disc = b * b - 4 * a * cc;
    if (disc == 0)
        throw std::invalid_argument("ex2_class: degenerate pencil");
    OrbitDescriptor d;
    d.kind = OrbitSet::Ex2;
    auto [cls, reduced] = square_class(disc);
    d.disc_class = cls;
    d.reduced = reduced;
    return d;
}

}  // namespace strata
