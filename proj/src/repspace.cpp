#include "strata/repspace.hpp"

#include <stdexcept>

namespace strata {

GroupShape group_shape(CaseId c) {
    return c == CaseId::Case1 ? GroupShape{{3, 3, 2}} : GroupShape{{6, 2}};
}

std::vector<std::pair<int, int>> factor_blocks(CaseId c) {
    if (c == CaseId::Case1) return {{0, 3}, {3, 6}, {6, 8}};
    return {{0, 6}, {6, 8}};
}

RepSpec rep_spec(CaseId c) {
    if (c == CaseId::Case1)
        return {c,
                {{1, FactorKind::Standard},
                 {2, FactorKind::Standard},
                 {3, FactorKind::Standard}}};
    return {c, {{1, FactorKind::Wedge2}, {2, FactorKind::Standard}}};
}

const std::vector<CoordIndex> &enumerate_coordinates(CaseId c) {
    static const std::vector<CoordIndex> case1 = [] {
        std::vector<CoordIndex> v;
        int serial = 1;
        for (int i3 = 1; i3 <= 2; ++i3)
            for (int i1 = 1; i1 <= 3; ++i1)
                for (int i2 = 1; i2 <= 3; ++i2)
                    v.push_back({i1, i2, i3, serial++});
        return v;
    }();
    static const std::vector<CoordIndex> case2 = [] {
        std::vector<CoordIndex> v;
        int serial = 1;
        for (int s = 1; s <= 2; ++s)
            for (int a = 1; a <= 6; ++a)
                for (int b = a + 1; b <= 6; ++b)
                    v.push_back({a, b, s, serial++});
        return v;
    }();
    return c == CaseId::Case1 ? case1 : case2;
}

int dim_v(CaseId c) { return c == CaseId::Case1 ? 18 : 30; }

const CoordIndex &coord_by_serial(CaseId c, int serial) {
    const auto &all = enumerate_coordinates(c);
    if (serial < 1 || serial > static_cast<int>(all.size()))
        throw std::out_of_range("coord serial");
    return all[serial - 1];
}

std::string coord_name(CaseId c, int serial) {
    const CoordIndex &ci = coord_by_serial(c, serial);
    return std::to_string(ci.i1) + std::to_string(ci.i2) +
           std::to_string(ci.i3);
}

int serial_of_name(CaseId c, const std::string &n) {
    if (n.size() != 3) throw std::invalid_argument("coord name " + n);
    int a = n[0] - '0', b = n[1] - '0', s = n[2] - '0';
    for (const CoordIndex &ci : enumerate_coordinates(c))
        if (ci.i1 == a && ci.i2 == b && ci.i3 == s) return ci.serial;
    throw std::invalid_argument("coord name " + n);
}

WeightVector raw_weight(CaseId c, const CoordIndex &ci) {
    QVector w(kAmbientDim, Rational(0));
    if (c == CaseId::Case1) {
        w[ci.i1 - 1] += 1;
        w[3 + ci.i2 - 1] += 1;
        w[6 + ci.i3 - 1] += 1;
    } else {
        w[ci.i1 - 1] += 1;
        w[ci.i2 - 1] += 1;
        w[6 + ci.i3 - 1] += 1;
    }
    return {std::move(w), WeightVector::Raw};
}

QVector project_to_tstar(CaseId c, const QVector &v) {
    QVector out = v;
    for (auto [lo, hi] : factor_blocks(c)) {
        Rational mean(0);
        for (int i = lo; i < hi; ++i) mean += v[i];
        mean /= (hi - lo);
        for (int i = lo; i < hi; ++i) out[i] -= mean;
    }
    return out;
}

WeightVector project_to_tstar(CaseId c, const WeightVector &w) {
    return {project_to_tstar(c, w.entries), WeightVector::Projected};
}

Rational pairing(const QVector &a, const QVector &b) {
    if (a.size() != b.size()) throw std::invalid_argument("pairing length");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVector sigma_swap_beta(const QVector &beta8) {
    if (beta8.size() != kAmbientDim)
        throw std::invalid_argument("sigma: expect length 8");
    QVector out(kAmbientDim);
    for (int i = 0; i < 3; ++i) {
        out[i] = beta8[3 + i];
        out[3 + i] = beta8[i];
    }
    out[6] = beta8[6];
    out[7] = beta8[7];
    return out;
}

int sigma_swap_serial(int serial) {
    const CoordIndex &ci = coord_by_serial(CaseId::Case1, serial);
    for (const CoordIndex &cj : enumerate_coordinates(CaseId::Case1))
        if (cj.i1 == ci.i2 && cj.i2 == ci.i1 && cj.i3 == ci.i3)
            return cj.serial;
    throw std::logic_error("sigma serial");
}

QVector sigma_swap_point(const QVector &point18) {
    if (point18.size() != 18)
        throw std::invalid_argument("sigma: expect length 18 (case 1)");
    QVector out(18);
    for (int s = 1; s <= 18; ++s)
        out[sigma_swap_serial(s) - 1] = point18[s - 1];
    return out;
}

}  // namespace strata
