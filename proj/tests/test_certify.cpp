#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/betaset.hpp"
#include "strata/certify.hpp"

using namespace strata;

namespace {

StratumData stratum_of(CaseId c, int index) {
    BetaCatalog cat = load_catalog(c, STRATA_FIXTURES_DIR);
    for (const auto &e : cat.entries)
        if (e.beta.index == index) return derive_stratum(e.beta);
    throw std::runtime_error("missing index");
}

}  // namespace

TEST_CASE("certificate fixtures cover every empty stratum") {
    auto c1 = load_certificates(CaseId::Case1, STRATA_FIXTURES_DIR);
    auto c2 = load_certificates(CaseId::Case2, STRATA_FIXTURES_DIR);
    CHECK(c1.size() == 33);
    CHECK(c2.size() == 68);
}

TEST_CASE("weight_of is the pairing with the raw weight") {
    OnePS lam{{2, 2, -4, -5, -5, 10, -4, 4}};
    CHECK(weight_of(lam, CaseId::Case1,
                    serial_of_name(CaseId::Case1, "331")) == 2);
    CHECK(weight_of(lam, CaseId::Case1,
                    serial_of_name(CaseId::Case1, "232")) == 16);
    OnePS zero{{0, 0, 0, 0, 0, 0, 0, 0}};
    CHECK(weight_of(zero, CaseId::Case1, 1) == 0);
}

TEST_CASE("the first emptiness certificate reproduces its weight row") {
    auto certs = load_certificates(CaseId::Case1, STRATA_FIXTURES_DIR);
    StratumData d1 = stratum_of(CaseId::Case1, 1);
    VerifyReport r = verify_certificate(certs.at(1), d1);
    CHECK(r.ok);
    std::vector<std::pair<int, long>> expect{{9, 2},  {10, 1}, {11, 1},
                                             {12, 16}, {13, 1}, {14, 1},
                                             {15, 16}};
    CHECK(r.weights == expect);
}

TEST_CASE("the trial-and-error stratum verifies with its printed data") {
    auto certs = load_certificates(CaseId::Case1, STRATA_FIXTURES_DIR);
    const EmptinessCertificate &c10 = certs.at(10);
    CHECK(c10.lam.exponents ==
          std::vector<long>{-9, 9, 0, -2, 7, -5, -3, 3});
    StratumData d10 = stratum_of(CaseId::Case1, 10);
    VerifyReport r = verify_certificate(c10, d10);
    CHECK(r.ok);
    std::vector<std::pair<int, long>> expect{
        {6, 1}, {8, 4}, {11, 1}, {14, 19}, {16, 1}};
    CHECK(r.weights == expect);
    CHECK(r.weights == c10.residual_weights);
}

TEST_CASE("every stored certificate verifies entry-for-entry") {
    for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
        BetaCatalog cat = load_catalog(c, STRATA_FIXTURES_DIR);
        auto certs = load_certificates(c, STRATA_FIXTURES_DIR);
        for (const auto &e : cat.entries) {
            if (e.status != Status::Empty) continue;
            REQUIRE(certs.count(e.beta.index));
            const EmptinessCertificate &cert = certs.at(e.beta.index);
            VerifyReport r = verify_certificate(cert, derive_stratum(e.beta));
            INFO("beta ", e.beta.index);
            CHECK(r.ok);
            CHECK(r.weights == cert.residual_weights);
        }
    }
}

TEST_CASE("verification fails under single-condition mutations") {
    auto certs = load_certificates(CaseId::Case1, STRATA_FIXTURES_DIR);
    StratumData d1 = stratum_of(CaseId::Case1, 1);

    EmptinessCertificate broken = certs.at(1);
    broken.lam.exponents[0] += 1;  // breaks the zero block sum
    CHECK_FALSE(verify_certificate(broken, d1).ok);

    broken = certs.at(1);
    /* keep block sums zero but break orthogonality to beta */
    broken.lam.exponents[0] += 1;
    broken.lam.exponents[2] -= 1;
    CHECK_FALSE(verify_certificate(broken, d1).ok);

    broken = certs.at(1);
    broken.lam.exponents = {0, 0, 0, 0, 0, 0, 0, 0};  // weights not positive
    CHECK_FALSE(verify_certificate(broken, d1).ok);

    broken = certs.at(1);
    broken.steps[0].zeroed.push_back(broken.steps[0].module.back());
    CHECK_FALSE(verify_certificate(broken, d1).ok);
}

TEST_CASE("elimination applicability follows the lemma patterns") {
    auto certs = load_certificates(CaseId::Case1, STRATA_FIXTURES_DIR);
    StratumData d1 = stratum_of(CaseId::Case1, 1);
    const EliminationStep &good = certs.at(1).steps[0];
    CHECK(good.lemma_id == "Standard");
    CHECK(check_elimination_applicability(good, d1));

    EliminationStep bad = good;  // zero all n of n coordinates
    bad.zeroed = bad.module;
    CHECK_FALSE(check_elimination_applicability(bad, d1));

    bad = good;  // module outside Z
    bad.module[0] = d1.w_serials.front();
    CHECK_FALSE(check_elimination_applicability(bad, d1));

    bad = good;  // wrong module length for the declared shape
    bad.lemma_id = "TallMatrix";
    bad.dims = {3, 2};
    CHECK_FALSE(check_elimination_applicability(bad, d1));
}

TEST_CASE("find_oneps certifies the destabilization dichotomy samples") {
    StratumData d10 = stratum_of(CaseId::Case1, 10);
    std::vector<int> residual;
    for (int s : d10.z_serials)
        if (s != serial_of_name(CaseId::Case1, "131")) residual.push_back(s);
    auto lam = find_oneps(d10, residual);
    REQUIRE(lam.has_value());
    OnePS found{*lam};
    for (int s : residual) CHECK(weight_of(found, CaseId::Case1, s) > 0);
    QVector l8;
    for (long v : *lam) l8.push_back(Rational(v));
    CHECK(pairing(l8, d10.beta.vec) == 0);

    StratumData d29 = stratum_of(CaseId::Case1, 29);
    CHECK_FALSE(find_oneps(d29, d29.z_serials).has_value());

    /* empty residual: any nonzero beta-orthogonal direction will do */
    auto any = find_oneps(d10, {});
    REQUIRE(any.has_value());
    QVector a8;
    bool nonzero = false;
    for (long v : *any) {
        a8.push_back(Rational(v));
        nonzero = nonzero || v != 0;
    }
    CHECK(nonzero);
    CHECK(pairing(a8, d10.beta.vec) == 0);
    for (auto [lo, hi] : factor_blocks(CaseId::Case1)) {
        long sum = 0;
        for (int i = lo; i < hi; ++i) sum += (*any)[i];
        CHECK(sum == 0);
    }
}

TEST_CASE("stored 1-PS vectors are independently re-derivable") {
    /* the solver must find a feasible 1-PS on each certificate's residual */
    for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
        BetaCatalog cat = load_catalog(c, STRATA_FIXTURES_DIR);
        auto certs = load_certificates(c, STRATA_FIXTURES_DIR);
        for (const auto &e : cat.entries) {
            if (e.status != Status::Empty) continue;
            StratumData d = derive_stratum(e.beta);
            std::vector<int> residual;
            for (const auto &[s, w] : certs.at(e.beta.index).residual_weights)
                residual.push_back(s);
            auto lam = find_oneps(d, residual);
            INFO("beta ", e.beta.index);
            REQUIRE(lam.has_value());
            OnePS found{*lam};
            for (int s : residual) CHECK(weight_of(found, c, s) > 0);
        }
    }
}
