#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/betaset.hpp"
#include "strata/repspace.hpp"

using namespace strata;

namespace {

QVector qvec(std::initializer_list<Rational> xs) { return QVector(xs); }

}  // namespace

TEST_CASE("coordinate numbering matches the tables") {
    CHECK(enumerate_coordinates(CaseId::Case1).size() == 18);
    CHECK(enumerate_coordinates(CaseId::Case2).size() == 30);
    CHECK(dim_v(CaseId::Case1) == 18);
    CHECK(dim_v(CaseId::Case2) == 30);
    CHECK(coord_name(CaseId::Case1, 1) == "111");
    CHECK(coord_name(CaseId::Case1, 15) == "232");
    CHECK(coord_name(CaseId::Case2, 13) == "451");
    CHECK(coord_name(CaseId::Case2, 30) == "562");
    CHECK(serial_of_name(CaseId::Case1, "232") == 15);
    CHECK(serial_of_name(CaseId::Case2, "451") == 13);
}

TEST_CASE("serial and multi-index round-trip") {
    for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
        int expect = 1;
        for (const CoordIndex &ci : enumerate_coordinates(c)) {
            CHECK(ci.serial == expect++);
            CHECK(serial_of_name(c, coord_name(c, ci.serial)) == ci.serial);
        }
    }
}

TEST_CASE("raw weights are the indicator vectors") {
    auto w331 = raw_weight(CaseId::Case1,
                           coord_by_serial(CaseId::Case1,
                                           serial_of_name(CaseId::Case1, "331")));
    CHECK(w331.entries == qvec({0, 0, 1, 0, 0, 1, 1, 0}));
    auto w111 = raw_weight(CaseId::Case1, coord_by_serial(CaseId::Case1, 1));
    CHECK(w111.entries == qvec({1, 0, 0, 1, 0, 0, 1, 0}));
    auto w562 = raw_weight(CaseId::Case2, coord_by_serial(CaseId::Case2, 30));
    CHECK(w562.entries == qvec({0, 0, 0, 0, 1, 1, 0, 1}));
}

TEST_CASE("projection subtracts the block means") {
    QVector p = project_to_tstar(CaseId::Case1,
                                 qvec({1, 0, 0, 1, 0, 0, 1, 0}));
    CHECK(p == qvec({Rational(2, 3), Rational(-1, 3), Rational(-1, 3),
                     Rational(2, 3), Rational(-1, 3), Rational(-1, 3),
                     Rational(1, 2), Rational(-1, 2)}));
    CHECK(project_to_tstar(CaseId::Case1, p) == p);
    QVector q = project_to_tstar(CaseId::Case2,
                                 qvec({0, 0, 0, 0, 1, 1, 0, 1}));
    CHECK(q == qvec({Rational(-1, 3), Rational(-1, 3), Rational(-1, 3),
                     Rational(-1, 3), Rational(2, 3), Rational(2, 3),
                     Rational(-1, 2), Rational(1, 2)}));
}

TEST_CASE("pairing reproduces the printed orthogonality checks") {
    QVector beta1;
    for (long v : {-2, -2, 4, 0, 0, 0, -3, 3})
        beta1.push_back(Rational(v, 42));
    QVector lam;
    for (long v : {2, 2, -4, -5, -5, 10, -4, 4}) lam.push_back(Rational(v));
    CHECK(pairing(beta1, lam) == 0);
    QVector beta6;
    for (long v : {-4, 2, 2, -4, 2, 2, -3, 3})
        beta6.push_back(Rational(v, 66));
    CHECK(pairing(beta6, beta6) == Rational(1, 66));
    CHECK(pairing(beta6, QVector(8, Rational(0))) == 0);
}

TEST_CASE("raw and projected weights pair equally against the catalog") {
    for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
        BetaCatalog cat = load_catalog(c, STRATA_FIXTURES_DIR);
        for (const auto &e : cat.entries)
            for (const CoordIndex &ci : enumerate_coordinates(c)) {
                QVector raw = raw_weight(c, ci).entries;
                CHECK(pairing(e.beta.vec, raw) ==
                      pairing(e.beta.vec, project_to_tstar(c, raw)));
            }
    }
}

TEST_CASE("sigma swaps the first two factors") {
    QVector b4, b5;
    for (long v : {-2, 1, 1, 0, 0, 0, 0, 0}) b4.push_back(Rational(v, 6));
    for (long v : {0, 0, 0, -2, 1, 1, 0, 0}) b5.push_back(Rational(v, 6));
    CHECK(sigma_swap_beta(b4) == b5);
    CHECK(sigma_swap_beta(sigma_swap_beta(b5)) == b5);
    CHECK(sigma_swap_serial(serial_of_name(CaseId::Case1, "231")) ==
          serial_of_name(CaseId::Case1, "321"));
    /* bijection preserving weights up to block swap */
    for (const CoordIndex &ci : enumerate_coordinates(CaseId::Case1)) {
        int s = sigma_swap_serial(ci.serial);
        CHECK(sigma_swap_serial(s) == ci.serial);
        QVector w = raw_weight(CaseId::Case1, ci).entries;
        QVector ws = raw_weight(CaseId::Case1,
                                coord_by_serial(CaseId::Case1, s)).entries;
        CHECK(sigma_swap_beta(w) == ws);
    }
}

TEST_CASE("sigma permutes point coordinates accordingly") {
    QVector pt(18, Rational(0));
    pt[serial_of_name(CaseId::Case1, "231") - 1] = 7;
    QVector sw = sigma_swap_point(pt);
    CHECK(sw[serial_of_name(CaseId::Case1, "321") - 1] == 7);
    CHECK(sigma_swap_point(sw) == pt);
}

TEST_CASE("group shapes and factor blocks") {
    CHECK(group_shape(CaseId::Case1).factor_sizes ==
          std::vector<int>{3, 3, 2});
    CHECK(group_shape(CaseId::Case2).factor_sizes == std::vector<int>{6, 2});
    auto b1 = factor_blocks(CaseId::Case1);
    CHECK(b1 == std::vector<std::pair<int, int>>{{0, 3}, {3, 6}, {6, 8}});
    auto b2 = factor_blocks(CaseId::Case2);
    CHECK(b2 == std::vector<std::pair<int, int>>{{0, 6}, {6, 8}});
}
