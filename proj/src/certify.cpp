#include "strata/certify.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <stdexcept>

namespace strata {

namespace {

using Coord = std::array<int, 3>;

Coord coord_of(CaseId c, int serial) {
    const CoordIndex &ci = coord_by_serial(c, serial);
    return {ci.i1, ci.i2, ci.i3};
}

int serial_of(CaseId c, const Coord &co) {
    for (const CoordIndex &ci : enumerate_coordinates(c))
        if (ci.i1 == co[0] && ci.i2 == co[1] && ci.i3 == co[2])
            return ci.serial;
    throw std::logic_error("bad coordinate");
}

/* All subsets of `vals` with size in [lo, hi], in lexicographic order. */
std::vector<std::vector<int>> subsets_of(const std::vector<int> &vals, int lo,
                                         int hi = -1) {
    if (hi < 0) hi = static_cast<int>(vals.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, size_t start) -> void {
        int k = static_cast<int>(cur.size());
        if (k >= lo && k <= hi) out.push_back(cur);
        if (k == hi) return;
        for (size_t i = start; i < vals.size(); ++i) {
            cur.push_back(vals[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    /* match Python's combinations-by-size ordering: sort by (size, lex) */
    std::stable_sort(out.begin(), out.end(),
                     [](const auto &a, const auto &b) {
                         return a.size() < b.size();
                     });
    return out;
}

template <typename T>
std::vector<std::vector<T>> combinations(const std::vector<T> &vals, int k) {
    std::vector<std::vector<T>> out;
    std::vector<T> cur;
    auto rec = [&](auto &&self, size_t start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < vals.size(); ++i) {
            cur.push_back(vals[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/* SL-subgroup axes usable as module directions.  Sequential eliminations
 * act through stabilizer subgroups of the Levi, so any subset (size >= 2)
 * of a Levi block yields a usable SL; wedge axes are the 3-dimensional
 * representation on the pairs of a 3-subset; the slice axis needs the
 * last factor's block undivided. */
struct Axis {
    enum Kind { Slot, Member, Wedge, Slice } kind;
    int slot = -1;          // case 1: which tensor slot (0..2)
    std::vector<int> vals;  // axis values (Levi block subset)
    bool operator==(const Axis &o) const {
        return kind == o.kind && slot == o.slot && vals == o.vals;
    }
};

using Fixing = std::vector<std::pair<int, int>>;  // case 1: (slot, value)*
using Fixing2 = std::vector<int>;                 // case 2: tag-specific

std::vector<Axis> group_axes(const StratumData &data) {
    std::vector<Axis> axes;
    CaseId c = data.beta.case_id;
    if (c == CaseId::Case1) {
        for (int f = 0; f < 3; ++f)
            for (const auto &blk : data.levi[f])
                for (const auto &s : subsets_of(blk, 2))
                    axes.push_back({Axis::Slot, f, s});
    } else {
        for (const auto &blk : data.levi[0]) {
            for (const auto &s : subsets_of(blk, 2))
                axes.push_back({Axis::Member, -1, s});
            for (const auto &s : subsets_of(blk, 3, 3))
                axes.push_back({Axis::Wedge, -1, s});
        }
        if (data.levi[1].size() == 1)
            axes.push_back({Axis::Slice, -1, {1, 2}});
    }
    return axes;
}

int axis_len(const Axis &ax) {
    return ax.kind == Axis::Wedge ? 3 : static_cast<int>(ax.vals.size());
}

int axis_value(const Axis &ax, int i) {
    if (ax.kind == Axis::Wedge) return i;
    return ax.vals[i];
}

std::vector<Fixing> line_fixings1(const Axis &ax) {
    static const int dims[3] = {3, 3, 2};
    int o1 = -1, o2 = -1;
    for (int o = 0; o < 3; ++o)
        if (o != ax.slot) (o1 < 0 ? o1 : o2) = o;
    std::vector<Fixing> out;
    for (int a = 1; a <= dims[o1]; ++a)
        for (int b = 1; b <= dims[o2]; ++b)
            out.push_back({{o1, a}, {o2, b}});
    return out;
}

std::vector<Fixing2> line_fixings2(const Axis &ax) {
    std::vector<Fixing2> out;
    if (ax.kind == Axis::Member) {
        for (int o = 1; o <= 6; ++o) {
            if (std::count(ax.vals.begin(), ax.vals.end(), o)) continue;
            for (int s = 1; s <= 2; ++s) out.push_back({o, s});
        }
    } else if (ax.kind == Axis::Wedge) {
        out.push_back({1});
        out.push_back({2});
    } else {  // slice axis: one fixing per pair
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b) out.push_back({a, b});
    }
    return out;
}

std::vector<Coord> line_coords1(const Axis &ax, const Fixing &fix) {
    std::vector<Coord> out;
    for (int v : ax.vals) {
        Coord co{0, 0, 0};
        co[ax.slot] = v;
        for (auto [o, val] : fix) co[o] = val;
        out.push_back(co);
    }
    return out;
}

std::vector<Coord> line_coords2(const Axis &ax, const Fixing2 &fix) {
    std::vector<Coord> out;
    if (ax.kind == Axis::Member) {
        int o = fix[0], s = fix[1];
        for (int v : ax.vals)
            out.push_back({std::min(o, v), std::max(o, v), s});
    } else if (ax.kind == Axis::Wedge) {
        int s = fix[0];
        const auto &w = ax.vals;
        out.push_back({w[0], w[1], s});
        out.push_back({w[0], w[2], s});
        out.push_back({w[1], w[2], s});
    } else {
        out.push_back({fix[0], fix[1], 1});
        out.push_back({fix[0], fix[1], 2});
    }
    return out;
}

struct Line {
    Axis axis;
    std::vector<Coord> coords;
};

bool coords_in_z(const std::set<Coord> &z, const std::vector<Coord> &cs) {
    std::set<Coord> uniq(cs.begin(), cs.end());
    if (uniq.size() != cs.size()) return false;
    for (const Coord &co : cs)
        if (!z.count(co)) return false;
    return true;
}

std::vector<Line> all_lines(const StratumData &data, const std::set<Coord> &z) {
    std::vector<Line> out;
    CaseId c = data.beta.case_id;
    for (const Axis &ax : group_axes(data)) {
        if (c == CaseId::Case1) {
            for (const Fixing &fx : line_fixings1(ax)) {
                auto cs = line_coords1(ax, fx);
                if (coords_in_z(z, cs)) out.push_back({ax, cs});
            }
        } else {
            for (const Fixing2 &fx : line_fixings2(ax)) {
                auto cs = line_coords2(ax, fx);
                if (coords_in_z(z, cs)) out.push_back({ax, cs});
            }
        }
    }
    return out;
}

bool compatible_axes(CaseId c, const Axis &a1, const Axis &a2) {
    if (a1 == a2) return false;
    if (c == CaseId::Case1) return a1.slot != a2.slot;
    if (a1.kind == Axis::Slice || a2.kind == Axis::Slice)
        return a1.kind != a2.kind;
    if (a1.kind == Axis::Wedge || a2.kind == Axis::Wedge)
        return false;  // wedge pairs only combine with the slice axis
    for (int v : a1.vals)
        if (std::count(a2.vals.begin(), a2.vals.end(), v)) return false;
    return true;
}

std::vector<Fixing2> grid_fixings(CaseId c, const Axis &a1, const Axis &a2) {
    if (c == CaseId::Case1) {
        int f3 = 3 - a1.slot - a2.slot;
        std::vector<Fixing2> out;
        for (int v = 1; v <= (f3 < 2 ? 3 : 2); ++v) out.push_back({f3, v});
        return out;
    }
    bool m1 = a1.kind == Axis::Member, m2 = a2.kind == Axis::Member;
    bool s1 = a1.kind == Axis::Slice, s2 = a2.kind == Axis::Slice;
    if (m1 && m2) return {{1}, {2}};
    if ((m1 && s2) || (s1 && m2)) {
        const Axis &mem = m1 ? a1 : a2;
        std::vector<Fixing2> out;
        for (int o = 1; o <= 6; ++o)
            if (!std::count(mem.vals.begin(), mem.vals.end(), o))
                out.push_back({o});
        return out;
    }
    return {{}};  // wedge x slice
}

Coord grid_entry(CaseId c, const Axis &a1, int v1, const Axis &a2, int v2,
                 const Fixing2 &fix) {
    if (c == CaseId::Case1) {
        Coord co{0, 0, 0};
        co[a1.slot] = v1;
        co[a2.slot] = v2;
        co[fix[0]] = fix[1];
        return co;
    }
    auto resolve = [](const Axis &ax, int v) -> std::pair<char, std::pair<int, int>> {
        if (ax.kind == Axis::Member) return {'m', {v, 0}};
        if (ax.kind == Axis::Slice) return {'s', {v, 0}};
        const auto &w = ax.vals;
        std::pair<int, int> prs[3] = {{w[0], w[1]}, {w[0], w[2]}, {w[1], w[2]}};
        return {'w', prs[v]};
    };
    auto r1 = resolve(a1, v1), r2 = resolve(a2, v2);
    if ((r1.first == 'w' && r2.first == 's') ||
        (r1.first == 's' && r2.first == 'w')) {
        auto pr = r1.first == 'w' ? r1.second : r2.second;
        int s = r1.first == 's' ? r1.second.first : r2.second.first;
        return {pr.first, pr.second, s};
    }
    if ((r1.first == 'm' && r2.first == 's') ||
        (r1.first == 's' && r2.first == 'm')) {
        int v = r1.first == 'm' ? r1.second.first : r2.second.first;
        int s = r1.first == 's' ? r1.second.first : r2.second.first;
        int o = fix[0];
        return {std::min(v, o), std::max(v, o), s};
    }
    int a = r1.second.first, b = r2.second.first;
    int s = fix[0];
    return {std::min(a, b), std::max(a, b), s};
}

struct Grid {
    Axis rax, cax;
    std::vector<std::vector<Coord>> rows;
};

std::vector<Grid> group_grids(const StratumData &data,
                              const std::set<Coord> &z) {
    std::vector<Grid> out;
    CaseId c = data.beta.case_id;
    auto axes = group_axes(data);
    for (const Axis &a1 : axes)
        for (const Axis &a2 : axes) {
            if (!compatible_axes(c, a1, a2)) continue;
            for (const Fixing2 &fix : grid_fixings(c, a1, a2)) {
                std::vector<std::vector<Coord>> rows;
                std::set<Coord> seen;
                bool ok = true;
                for (int i = 0; ok && i < axis_len(a1); ++i) {
                    std::vector<Coord> row;
                    for (int j = 0; j < axis_len(a2); ++j) {
                        Coord co = grid_entry(c, a1, axis_value(a1, i), a2,
                                              axis_value(a2, j), fix);
                        if (!z.count(co)) {
                            ok = false;
                            break;
                        }
                        seen.insert(co);
                        row.push_back(co);
                    }
                    if (ok) rows.push_back(std::move(row));
                }
                if (ok && static_cast<int>(seen.size()) ==
                              axis_len(a1) * axis_len(a2))
                    out.push_back({a1, a2, std::move(rows)});
            }
        }
    return out;
}

struct Candidate {
    std::vector<int> dims;
    std::vector<int> module;
    std::set<int> zeroed;
};

void pair_lemma_candidates(const StratumData &data, const std::set<Coord> &z,
                           const std::string &lemma,
                           std::vector<Candidate> &out) {
    CaseId c = data.beta.case_id;
    auto grids = group_grids(data, z);
    auto lines = all_lines(data, z);
    int vlen = lemma == "Pair3xM32" ? 3 : 2;
    auto S = [&](const Coord &co) { return serial_of(c, co); };
    for (const Line &ln : lines) {
        if (static_cast<int>(ln.coords.size()) != vlen) continue;
        std::set<Coord> vset(ln.coords.begin(), ln.coords.end());
        for (const Grid &g : grids) {
            std::set<Coord> gset;
            for (const auto &r : g.rows) gset.insert(r.begin(), r.end());
            bool overlap = false;
            for (const Coord &co : vset)
                if (gset.count(co)) overlap = true;
            if (overlap) continue;
            auto transposed = [&]() {
                std::vector<std::vector<Coord>> t(
                    g.rows[0].size(), std::vector<Coord>(g.rows.size()));
                for (size_t i = 0; i < g.rows.size(); ++i)
                    for (size_t j = 0; j < g.rows[0].size(); ++j)
                        t[j][i] = g.rows[i][j];
                return t;
            };
            if (lemma == "Pair2xM2") {
                if (axis_len(g.rax) != 2 || axis_len(g.cax) != 2) continue;
                for (int shared = 0; shared < 2; ++shared) {
                    const Axis &sax = shared == 0 ? g.rax : g.cax;
                    if (!(sax == ln.axis)) continue;
                    auto a = shared == 0 ? g.rows : transposed();
                    for (int p = 0; p < 2; ++p)
                        for (int q = 0; q < 2; ++q) {
                            std::vector<Coord> vo{ln.coords[p],
                                                  ln.coords[1 - p]};
                            std::vector<std::vector<Coord>> rows{
                                {a[p][q], a[p][1 - q]},
                                {a[1 - p][q], a[1 - p][1 - q]}};
                            Candidate cd;
                            cd.dims = {2, 2};
                            for (const Coord &co : vo)
                                cd.module.push_back(S(co));
                            for (const auto &r : rows)
                                for (const Coord &co : r)
                                    cd.module.push_back(S(co));
                            cd.zeroed = {S(vo[0]), S(rows[0][0])};
                            out.push_back(std::move(cd));
                        }
                }
            } else if (lemma == "Pair2xM32") {
                for (int ori = 0; ori < 2; ++ori) {
                    int nn = ori == 0 ? axis_len(g.rax) : axis_len(g.cax);
                    int mm = ori == 0 ? axis_len(g.cax) : axis_len(g.rax);
                    if (nn != 3 || mm != 2) continue;
                    const Axis &cax = ori == 0 ? g.cax : g.rax;
                    if (!(cax == ln.axis)) continue;
                    auto a = ori == 0 ? g.rows : transposed();
                    for (int p = 0; p < 2; ++p)
                        for (int r = 0; r < 3; ++r) {
                            std::vector<Coord> vo{ln.coords[p],
                                                  ln.coords[1 - p]};
                            std::vector<std::vector<Coord>> base;
                            for (int i = 0; i < 3; ++i)
                                base.push_back({a[i][p], a[i][1 - p]});
                            std::vector<std::vector<Coord>> rows{base[r]};
                            for (int i = 0; i < 3; ++i)
                                if (i != r) rows.push_back(base[i]);
                            Candidate cd;
                            cd.dims = {3, 2};
                            for (const Coord &co : vo)
                                cd.module.push_back(S(co));
                            for (const auto &rw : rows)
                                for (const Coord &co : rw)
                                    cd.module.push_back(S(co));
                            cd.zeroed = {S(vo[0]), S(rows[0][0]),
                                         S(rows[0][1])};
                            out.push_back(std::move(cd));
                        }
                }
            } else {  // Pair3xM32
                for (int ori = 0; ori < 2; ++ori) {
                    int nn = ori == 0 ? axis_len(g.rax) : axis_len(g.cax);
                    int mm = ori == 0 ? axis_len(g.cax) : axis_len(g.rax);
                    if (nn != 3 || mm != 2) continue;
                    const Axis &rax = ori == 0 ? g.rax : g.cax;
                    if (!(rax == ln.axis)) continue;
                    auto a = ori == 0 ? g.rows : transposed();
                    for (int p1 = 0; p1 < 3; ++p1)
                        for (int p2 = 0; p2 < 3; ++p2) {
                            if (p2 == p1) continue;
                            int p3 = 3 - p1 - p2;
                            for (int q = 0; q < 2; ++q)
                                for (int zr = 0; zr < 2; ++zr) {
                                    std::vector<Coord> vo{ln.coords[p1],
                                                          ln.coords[p2],
                                                          ln.coords[p3]};
                                    int perm[3] = {p1, p2, p3};
                                    std::vector<std::vector<Coord>> rows;
                                    for (int i : perm)
                                        rows.push_back(
                                            {a[i][q], a[i][1 - q]});
                                    Candidate cd;
                                    cd.dims = {3, 2};
                                    for (const Coord &co : vo)
                                        cd.module.push_back(S(co));
                                    for (const auto &rw : rows)
                                        for (const Coord &co : rw)
                                            cd.module.push_back(S(co));
                                    cd.zeroed = {S(vo[0]), S(vo[1]),
                                                 S(rows[zr][0])};
                                    out.push_back(std::move(cd));
                                }
                        }
                }
            }
        }
    }
}

std::vector<Candidate> enum_candidates(const StratumData &data,
                                       const std::string &lemma) {
    CaseId c = data.beta.case_id;
    std::set<Coord> z;
    for (int s : data.z_serials) z.insert(coord_of(c, s));
    auto S = [&](const Coord &co) { return serial_of(c, co); };
    std::vector<Candidate> out;
    if (lemma == "Standard") {
        for (const Line &ln : all_lines(data, z)) {
            int n = static_cast<int>(ln.coords.size());
            for (int keep = 0; keep < n; ++keep) {
                Candidate cd;
                cd.dims = {n};
                for (int i = 0; i < n; ++i)
                    if (i != keep) {
                        cd.module.push_back(S(ln.coords[i]));
                        cd.zeroed.insert(S(ln.coords[i]));
                    }
                cd.module.push_back(S(ln.coords[keep]));
                out.push_back(std::move(cd));
            }
        }
    } else if (lemma == "TallMatrix") {
        for (const Axis &ax : group_axes(data)) {
            int n = axis_len(ax);
            /* columns are arbitrary coordinate-vector fixings inside Z */
            std::vector<std::vector<Coord>> cols;
            if (c == CaseId::Case1) {
                for (const Fixing &fx : line_fixings1(ax)) {
                    auto cs = line_coords1(ax, fx);
                    if (coords_in_z(z, cs)) cols.push_back(cs);
                }
            } else {
                for (const Fixing2 &fx : line_fixings2(ax)) {
                    auto cs = line_coords2(ax, fx);
                    if (coords_in_z(z, cs)) cols.push_back(cs);
                }
            }
            for (int m = 1; m < n; ++m) {
                std::vector<int> colidx(cols.size());
                for (size_t i = 0; i < cols.size(); ++i)
                    colidx[i] = static_cast<int>(i);
                for (const auto &csel : combinations(colidx, m)) {
                    std::set<Coord> seen;
                    std::vector<std::vector<Coord>> mat(n);
                    for (int r = 0; r < n; ++r)
                        for (int ci : csel) {
                            mat[r].push_back(cols[ci][r]);
                            seen.insert(cols[ci][r]);
                        }
                    if (static_cast<int>(seen.size()) != n * m) continue;
                    std::vector<int> rowsidx(n);
                    for (int r = 0; r < n; ++r) rowsidx[r] = r;
                    for (const auto &zrows : combinations(rowsidx, n - m)) {
                        Candidate cd;
                        cd.dims = {n, m};
                        std::set<int> zset(zrows.begin(), zrows.end());
                        for (int r : zrows)
                            for (const Coord &co : mat[r]) {
                                cd.module.push_back(S(co));
                                cd.zeroed.insert(S(co));
                            }
                        for (int r = 0; r < n; ++r)
                            if (!zset.count(r))
                                for (const Coord &co : mat[r])
                                    cd.module.push_back(S(co));
                        out.push_back(std::move(cd));
                    }
                }
            }
        }
    } else if (lemma == "Pair2xM2" || lemma == "Pair2xM32" ||
               lemma == "Pair3xM32") {
        pair_lemma_candidates(data, z, lemma, out);
    } else if (lemma == "WittAlternating") {
        if (c != CaseId::Case2) return out;
        for (const auto &b0 : data.levi[0]) {
            for (const auto &b : subsets_of(b0, 3)) {
                int n = static_cast<int>(b.size());
                for (int s = 1; s <= 2; ++s) {
                    std::vector<Coord> prs;
                    for (int i = 0; i < n; ++i)
                        for (int j = i + 1; j < n; ++j)
                            prs.push_back({b[i], b[j], s});
                    if (!coords_in_z(z, prs)) continue;
                    std::set<int> allc;
                    for (const Coord &co : prs) allc.insert(S(co));
                    for (int l = 0; l <= n / 2; ++l) {
                        std::set<int> kept;
                        for (int i = 0; i < l; ++i)
                            kept.insert(S({b[n - 2 * l + 2 * i],
                                           b[n - 2 * l + 2 * i + 1], s}));
                        Candidate cd;
                        cd.dims = {n, l};
                        for (const Coord &co : prs) cd.module.push_back(S(co));
                        for (int ser : allc)
                            if (!kept.count(ser)) cd.zeroed.insert(ser);
                        out.push_back(std::move(cd));
                    }
                    Candidate fr;  // zero every pair containing b[0]
                    fr.dims = {n, -1};
                    for (const Coord &co : prs) {
                        fr.module.push_back(S(co));
                        if (co[0] == b[0] || co[1] == b[0])
                            fr.zeroed.insert(S(co));
                    }
                    out.push_back(std::move(fr));
                }
            }
        }
    }
    return out;
}

}  // namespace

bool check_elimination_applicability(const EliminationStep &step,
                                     const StratumData &data) {
    std::set<int> zset(data.z_serials.begin(), data.z_serials.end());
    for (int s : step.module)
        if (!zset.count(s)) return false;
    std::set<int> zeroed(step.zeroed.begin(), step.zeroed.end());
    for (const Candidate &cd : enum_candidates(data, step.lemma_id))
        if (cd.dims == step.dims && cd.module == step.module &&
            cd.zeroed == zeroed)
            return true;
    return false;
}

long weight_of(const OnePS &lam, CaseId c, int serial) {
    QVector l8;
    for (long v : lam.exponents) l8.push_back(Rational(v));
    Rational w = pairing(l8, raw_weight(c, coord_by_serial(c, serial)).entries);
    return static_cast<long>(mpz_class(w.get_num()).get_si());
}

VerifyReport verify_certificate(const EmptinessCertificate &cert,
                                const StratumData &data) {
    VerifyReport rep;
    CaseId c = data.beta.case_id;
    std::set<int> zset(data.z_serials.begin(), data.z_serials.end());
    std::set<int> all_zeroed;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const EliminationStep &st = cert.steps[i];
        for (int s : st.zeroed) {
            if (!zset.count(s)) {
                rep.ok = false;
                rep.errors.push_back("step " + std::to_string(i + 1) +
                                     ": zeroed serial " + std::to_string(s) +
                                     " outside Z");
            }
            all_zeroed.insert(s);
        }
        if (!check_elimination_applicability(st, data)) {
            rep.ok = false;
            rep.errors.push_back("step " + std::to_string(i + 1) + " (" +
                                 st.lemma_id + ") does not match any legal "
                                 "pattern");
        }
    }
    if (cert.lam.exponents.size() != kAmbientDim) {
        rep.ok = false;
        rep.errors.push_back("1-PS has wrong length");
        return rep;
    }
    for (auto [lo, hi] : factor_blocks(c)) {
        long sum = 0;
        for (int i = lo; i < hi; ++i) sum += cert.lam.exponents[i];
        if (sum != 0) {
            rep.ok = false;
            rep.errors.push_back("1-PS block sum nonzero");
        }
    }
    QVector l8;
    for (long v : cert.lam.exponents) l8.push_back(Rational(v));
    if (pairing(l8, data.beta.vec) != 0) {
        rep.ok = false;
        rep.errors.push_back("1-PS not orthogonal to beta");
    }
    for (int s : data.z_serials) {
        if (all_zeroed.count(s)) continue;
        long w = weight_of(cert.lam, c, s);
        if (w <= 0) {
            rep.ok = false;
            rep.errors.push_back("non-positive weight on serial " +
                                 std::to_string(s));
        }
        rep.weights.emplace_back(s, w);
    }
    return rep;
}

std::map<int, EmptinessCertificate> load_certificates(CaseId c,
                                                      const std::string &dir) {
    std::string path = dir + "/certificates_case" +
                       (c == CaseId::Case1 ? std::string("1") : "2") + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<int, EmptinessCertificate> out;
    EmptinessCertificate cur;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "cert") {
            cur = EmptinessCertificate{};
            cur.beta_index = std::stoi(toks[1]);
            open = true;
        } else if (toks[0] == "step") {
            EliminationStep st;
            st.lemma_id = toks[1];
            size_t i = 2;
            while (i < toks.size() && toks[i] != ":")
                st.dims.push_back(std::stoi(toks[i++]));
            ++i;
            while (i < toks.size() && toks[i] != ":")
                st.module.push_back(std::stoi(toks[i++]));
            ++i;
            while (i < toks.size())
                st.zeroed.push_back(std::stoi(toks[i++]));
            cur.steps.push_back(std::move(st));
        } else if (toks[0] == "lam") {
            for (size_t i = 1; i < toks.size(); ++i)
                cur.lam.exponents.push_back(std::stol(toks[i]));
        } else if (toks[0] == "residual") {
            for (size_t i = 1; i < toks.size(); ++i) {
                auto pos = toks[i].find(':');
                cur.residual_weights.emplace_back(
                    std::stoi(toks[i].substr(0, pos)),
                    std::stol(toks[i].substr(pos + 1)));
            }
        } else if (toks[0] == "end") {
            out[cur.beta_index] = cur;
            open = false;
        } else {
            throw std::runtime_error(path + ": unexpected line: " + line);
        }
    }
    if (open) throw std::runtime_error(path + ": unterminated record");
    return out;
}

std::optional<std::vector<long>> find_oneps(const StratumData &data,
                                            const std::vector<int> &residual) {
    CaseId c = data.beta.case_id;
    auto blocks = factor_blocks(c);
    int nb = static_cast<int>(blocks.size());
    if (residual.empty()) {
        /* Any nonzero beta-orthogonal zero-block-sum vector will do. */
        QMatrix a(nb + 1, kAmbientDim);
        for (int f = 0; f < nb; ++f)
            for (int i = blocks[f].first; i < blocks[f].second; ++i)
                a.at(f, i) = 1;
        for (int i = 0; i < kAmbientDim; ++i)
            a.at(nb, i) = data.beta.vec[i];
        LinearSolution sol = solve_linear(a, QVector(nb + 1, Rational(0)));
        if (sol.nullspace.empty()) return std::nullopt;
        return primitive_integer_vector(sol.nullspace[0]);
    }
    int k = static_cast<int>(residual.size());
    int nvars = 2 * kAmbientDim + k;  // c+ , c- , slacks
    QMatrix a(nb + 1 + k, nvars);
    QVector b(nb + 1 + k, Rational(0));
    auto set_c = [&](int row, int i, const Rational &v) {
        a.at(row, i) = v;
        a.at(row, kAmbientDim + i) = -v;
    };
    for (int f = 0; f < nb; ++f)
        for (int i = blocks[f].first; i < blocks[f].second; ++i)
            set_c(f, i, Rational(1));
    for (int i = 0; i < kAmbientDim; ++i) set_c(nb, i, data.beta.vec[i]);
    for (int j = 0; j < k; ++j) {
        QVector w =
            raw_weight(c, coord_by_serial(c, residual[j])).entries;
        for (int i = 0; i < kAmbientDim; ++i) set_c(nb + 1 + j, i, w[i]);
        a.at(nb + 1 + j, 2 * kAmbientDim + j) = -1;
        b[nb + 1 + j] = 1;
    }
    auto x = lp_feasible(a, b);
    if (!x) return std::nullopt;
    QVector cvec(kAmbientDim);
    for (int i = 0; i < kAmbientDim; ++i)
        cvec[i] = (*x)[i] - (*x)[kAmbientDim + i];
    return primitive_integer_vector(cvec);
}

}  // namespace strata
