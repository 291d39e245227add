#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/betaset.hpp"

using namespace strata;

namespace {

QVector scaled(std::initializer_list<long> nums, long den) {
    QVector v;
    for (long n : nums) {
        Rational q(n, den);
        q.canonicalize();
        v.push_back(q);
    }
    return v;
}

const CatalogEntry &entry(const BetaCatalog &cat, int index) {
    for (const auto &e : cat.entries)
        if (e.beta.index == index) return e;
    throw std::runtime_error("missing index");
}

}  // namespace

TEST_CASE("catalog fixtures load with the published statuses") {
    BetaCatalog c1 = load_catalog(CaseId::Case1, STRATA_FIXTURES_DIR);
    CHECK(c1.entries.size() == 49);
    const CatalogEntry &e29 = entry(c1, 29);
    CHECK(e29.beta.vec == scaled({-2, 1, 1, -2, 1, 1, 0, 0}, 6));
    CHECK(e29.status == Status::NonEmpty);
    CHECK(e29.orbit_set == OrbitSet::Ex2);
    const CatalogEntry &e46 = entry(c1, 46);
    CHECK(e46.beta.vec == scaled({-1, -1, 2, -1, -1, 2, 0, 0}, 3));
    CHECK(e46.status == Status::Empty);

    BetaCatalog c2 = load_catalog(CaseId::Case2, STRATA_FIXTURES_DIR);
    CHECK(c2.entries.size() == 81);
    const CatalogEntry &e8 = entry(c2, 8);
    CHECK(e8.beta.vec == scaled({0, 0, 0, 0, 0, 0, -1, 1}, 2));
    CHECK(e8.status == Status::NonEmpty);
    CHECK(e8.orbit_set == OrbitSet::SinglePoint);

    int n1 = 0, n2 = 0;
    for (const auto &e : c1.entries)
        if (e.status == Status::NonEmpty) ++n1;
    for (const auto &e : c2.entries)
        if (e.status == Status::NonEmpty) ++n2;
    CHECK(n1 == 16);
    CHECK(n2 == 13);
}

TEST_CASE("closest point of small hulls") {
    QVector r;
    r = closest_point_convex_hull({{Rational(1), Rational(0)},
                                   {Rational(0), Rational(1)}});
    CHECK(r == QVector{Rational(1, 2), Rational(1, 2)});
    r = closest_point_convex_hull({{Rational(2), Rational(0)},
                                   {Rational(0), Rational(2)},
                                   {Rational(1), Rational(1)}});
    CHECK(r == QVector{Rational(1), Rational(1)});
    r = closest_point_convex_hull({{Rational(1), Rational(0)},
                                   {Rational(-1), Rational(0)},
                                   {Rational(0), Rational(1)},
                                   {Rational(0), Rational(-1)}});
    CHECK(r == QVector{Rational(0), Rational(0)});
}

TEST_CASE("closest point is optimal against the full set") {
    std::vector<QVector> pts{{Rational(3), Rational(1)},
                             {Rational(1), Rational(3)},
                             {Rational(2), Rational(2)},
                             {Rational(5), Rational(5)}};
    QVector p = closest_point_convex_hull(pts);
    Rational pp = pairing(p, p);
    CHECK(pp > 0);
    for (const QVector &q : pts) CHECK(pairing(p, q) >= pp);
}

TEST_CASE("dominant representative sorts within factor blocks") {
    QVector v{Rational(1), Rational(-1), Rational(0),
              Rational(2), Rational(-2), Rational(0),
              Rational(1), Rational(-1)};
    CHECK(dominant_representative(CaseId::Case1, v) ==
          QVector{Rational(-1), Rational(0), Rational(1),
                  Rational(-2), Rational(0), Rational(2),
                  Rational(-1), Rational(1)});
}

TEST_CASE("catalog vectors are their own dominant representatives") {
    for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
        BetaCatalog cat = load_catalog(c, STRATA_FIXTURES_DIR);
        for (const auto &e : cat.entries)
            CHECK(dominant_representative(c, e.beta.vec) == e.beta.vec);
    }
}
