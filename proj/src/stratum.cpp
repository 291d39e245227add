#include "strata/stratum.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

namespace strata {

std::vector<long> primitive_integer_vector(const QVector &v) {
    mpz_class den(1);
    for (const Rational &q : v)
        den = den / gcd(den, q.get_den()) * q.get_den();
    mpz_class g(0);
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const Rational &q : v) {
        mpz_class n = q.get_num() * (den / q.get_den());
        ints.push_back(n);
        g = gcd(g, n);
    }
    if (g == 0) throw std::invalid_argument("primitive vector of zero");
    std::vector<long> out;
    out.reserve(v.size());
    for (const mpz_class &n : ints) {
        mpz_class r = n / g;
        if (!r.fits_slong_p()) throw std::overflow_error("primitive vector");
        out.push_back(r.get_si());
    }
    return out;
}

StratumData derive_stratum(const Beta &beta) {
    StratumData d;
    d.beta = beta;
    CaseId c = beta.case_id;
    Rational bb = pairing(beta.vec, beta.vec);
    for (const CoordIndex &ci : enumerate_coordinates(c)) {
        Rational p = pairing(beta.vec, raw_weight(c, ci).entries);
        if (p == bb)
            d.z_serials.push_back(ci.serial);
        else if (p > bb)
            d.w_serials.push_back(ci.serial);
    }
    for (auto [lo, hi] : factor_blocks(c)) {
        std::vector<std::vector<int>> part{{1}};
        for (int p = lo + 1; p < hi; ++p) {
            if (beta.vec[p] == beta.vec[p - 1])
                part.back().push_back(p - lo + 1);
            else
                part.push_back({p - lo + 1});
        }
        d.levi.push_back(std::move(part));
    }
    d.lambda = primitive_integer_vector(beta.vec);
    /* beta is constant on each Levi block, so the per-block values of the
     * primitive lambda already form the indivisible character exponents. */
    auto blocks = factor_blocks(c);
    for (size_t f = 0; f < blocks.size(); ++f) {
        std::vector<long> ex;
        for (const auto &blk : d.levi[f])
            ex.push_back(d.lambda[blocks[f].first + blk.front() - 1]);
        d.chi_exponents.push_back(std::move(ex));
    }
    return d;
}

Rational chi_value(const StratumData &data, const std::vector<QMatrix> &g) {
    auto blocks = factor_blocks(data.beta.case_id);
    if (g.size() != blocks.size())
        throw std::invalid_argument("chi_value: factor count");
    Rational result(1);
    for (size_t f = 0; f < blocks.size(); ++f) {
        int n = blocks[f].second - blocks[f].first;
        if (g[f].rows() != n || g[f].cols() != n)
            throw std::invalid_argument("chi_value: factor size");
        for (size_t b = 0; b < data.levi[f].size(); ++b) {
            const auto &blk = data.levi[f][b];
            int k = static_cast<int>(blk.size());
            QMatrix sub(k, k);
            for (int r = 0; r < k; ++r)
                for (int cc = 0; cc < k; ++cc)
                    sub.at(r, cc) = g[f].at(blk[r] - 1, blk[cc] - 1);
            Rational dv = det(sub);
            if (dv == 0) throw std::invalid_argument("chi_value: singular block");
            long e = data.chi_exponents[f][b];
            Rational p(1);
            Rational base = e >= 0 ? dv : 1 / dv;
            for (long i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
            result *= p;
        }
    }
    return result;
}

std::vector<std::vector<int>> levi_cuts(const StratumData &data) {
    std::vector<std::vector<int>> out;
    for (const auto &factor : data.levi) {
        std::vector<int> cuts;
        int pos = 0;
        for (size_t b = 0; b + 1 < factor.size(); ++b) {
            pos += static_cast<int>(factor[b].size());
            cuts.push_back(pos);
        }
        out.push_back(std::move(cuts));
    }
    return out;
}

namespace {

std::vector<std::vector<int>> parse_levi_label(const std::string &s) {
    std::vector<std::vector<int>> out{{}};
    std::string cur;
    auto flush = [&] {
        if (cur == "-" || cur.empty()) {
        } else {
            out.back().push_back(std::stoi(cur));
        }
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ';') {
            flush();
            out.push_back({});
        } else if (ch == ',') {
            flush();
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    return out;
}

}  // namespace

std::map<int, StratumFixture> load_stratum_tables(CaseId c,
                                                  const std::string &dir) {
    std::string path = dir + "/strata_case" +
                       (c == CaseId::Case1 ? std::string("1") : "2") + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<int, StratumFixture> out;
    StratumFixture cur;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "stratum") {
            if (open) throw std::runtime_error(path + ": nested stratum");
            cur = StratumFixture{};
            cur.index = std::stoi(toks[1]);
            if (toks.size() != 4 || toks[2] != "levi")
                throw std::runtime_error(path + ": bad stratum line");
            cur.levi_cuts = parse_levi_label(toks[3]);
            open = true;
        } else if (toks[0] == "z") {
            for (size_t i = 1; i < toks.size(); ++i)
                cur.z_serials.push_back(std::stoi(toks[i]));
        } else if (toks[0] == "w") {
            cur.has_w = true;
            for (size_t i = 1; i < toks.size(); ++i)
                cur.w_serials.push_back(std::stoi(toks[i]));
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

}  // namespace strata
