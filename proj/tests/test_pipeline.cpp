#include "kronjord/io.hpp"
#include "kronjord/pipeline.hpp"
#include "kronjord/verify.hpp"

#include <doctest.h>

using namespace kronjord;

namespace {

CertifiedWitness witness(int r, std::int64_t c, std::int64_t d, Mode mode = Mode::EKP) {
    RealizeOptions opt;
    opt.mode = mode;
    opt.seed = 42;
    auto res = realize(r, c, d, opt);
    REQUIRE(std::holds_alternative<CertifiedWitness>(res));
    return std::get<CertifiedWitness>(res);
}

bool all_pass(const std::vector<CheckOutcome>& checks) {
    for (const auto& c : checks)
        if (c.failed()) return false;
    return true;
}

}  // namespace

TEST_CASE("classification") {
    const auto a = classify(3, 3, 2);
    CHECK(a.in_ijt);
    CHECK(a.route == Route::Cover);
    CHECK(a.dim == DimVector{2, 5});
    const auto b = classify(2, 0, 2);
    CHECK(!b.in_ijt);
    CHECK(!b.realizable);
    for (int r = 2; r <= 6; ++r) {
        const auto p = classify(r, r - 1, 1);
        CHECK(p.in_ijt);
        CHECK(p.route == Route::Preprojective);
    }
    const auto s = classify(3, 1, 0);
    CHECK(!s.in_ijt);
    CHECK(s.realizable);
    CHECK(s.route == Route::Simple);
    CHECK(classify(3, 2, 2).route == Route::Echelon);
    const auto sh = classify(3, 8, 5);
    CHECK(sh.route == Route::Shift);
    REQUIRE(sh.plan);
    CHECK(sh.plan->l == 1);
    // window boundaries: b = (r-1)a is echelon, b = (r-1)a + 1 is cover
    CHECK(classify(4, 6, 3).route == Route::Echelon);
    CHECK(classify(4, 7, 3).route == Route::Cover);
}

TEST_CASE("realization examples") {
    const auto cover = witness(3, 3, 2);
    CHECK(cover.rep.dim() == DimVector{2, 5});
    CHECK(cover.route == Route::Cover);
    CHECK(cover.certificate == CertificateKind::InjCover);
    CHECK(cover.evidence == Evidence::LocalEnd);

    const auto ech = witness(3, 2, 2);
    CHECK(ech.rep.dim() == DimVector{2, 4});
    CHECK(ech.route == Route::Echelon);
    REQUIRE(ech.echelon);
    CHECK(ech.echelon->case_tag == EchelonCase::C);
    CHECK(ech.certificate == CertificateKind::Echelon);

    const auto sh = witness(3, 8, 5);
    CHECK(sh.rep.dim() == DimVector{5, 13});
    CHECK(sh.route == Route::Shift);
    REQUIRE(sh.plan);
    CHECK(sh.plan->window_case == WindowCase::Thin);
    CHECK(sh.plan->l == 1);
    REQUIRE(sh.cover);
    CHECK(is_inj(*sh.cover).injective);

    const auto pre = witness(2, 1, 1);
    CHECK(pre.rep.dim() == DimVector{1, 2});
    CHECK(pre.route == Route::Preprojective);
    CHECK(pre.certificate == CertificateKind::Sampled);

    const auto simple = witness(3, 1, 0);
    CHECK(simple.rep == simple_sink<Rational>(3));

    auto rej = realize(3, 1, 1);
    REQUIRE(std::holds_alternative<Rejection>(rej));
    CHECK(std::get<Rejection>(rej).clause == "c >= r-1");
    CHECK(std::holds_alternative<Rejection>(realize(2, 0, 2)));
}

TEST_CASE("cover-case shift") {
    // (26,68) at r=3 moves into the cover window at (4,10) after one step
    const auto w = witness(3, 42, 26);
    CHECK(w.rep.dim() == DimVector{26, 68});
    REQUIRE(w.plan);
    CHECK(w.plan->window_case == WindowCase::Cover);
    CHECK(is_inj(*w.cover).injective);
}

TEST_CASE("EIP mode dualizes") {
    const auto ekp = witness(4, 5, 3);
    const auto eip = witness(4, 5, 3, Mode::EIP);
    CHECK(eip.rep == dual(ekp.rep));
    CHECK(eip.rep.dim() == DimVector{8, 3});
    CHECK(eip_sample_check(eip.rep, 50, 1).pass);
    CHECK(all_pass(revalidate(eip, 50, 9)));
    const auto cov = witness(3, 3, 2, Mode::EIP);
    CHECK(all_pass(revalidate(cov, 50, 9)));
}

TEST_CASE("witness JSON round trip and revalidation") {
    for (const auto& [r, c, d] : std::vector<std::tuple<int, int, int>>{{3, 3, 2}, {3, 2, 2}, {3, 8, 5}, {2, 1, 1}, {3, 1, 0}, {4, 5, 3}}) {
        for (Mode mode : {Mode::EKP, Mode::EIP}) {
            const auto w = witness(r, c, d, mode);
            const auto text = witness_to_json(w).dump();
            const auto back = witness_from_json(Json::parse(text));
            CHECK(back.rep == w.rep);
            CHECK(witness_to_json(back).dump() == text);
            CHECK(all_pass(revalidate(back, 100, 5)));
        }
    }
}

TEST_CASE("tampered witnesses fail revalidation") {
    auto w = witness(3, 3, 2);
    auto j = witness_to_json(w);
    j["rep"]["mats"][0][0][0] = "0";
    j["rep"]["mats"][0][1][0] = "0";
    CHECK(!all_pass(revalidate(witness_from_json(j), 50, 1)));

    auto e = witness_to_json(witness(3, 2, 2));
    e["rep"]["mats"][1] = e["rep"]["mats"][0];
    const auto checks = revalidate(witness_from_json(e), 50, 1);
    CHECK(!all_pass(checks));

    auto wrong = witness_to_json(witness(3, 2, 2));
    wrong["jordan"] = {3, 2};
    CHECK(!all_pass(revalidate(witness_from_json(wrong), 50, 1)));
}

TEST_CASE("representation JSON") {
    const auto m = build_echelon_rep(select_phi(3, 2, 4));
    const auto j = rep_to_json(m);
    CHECK(j["field"]["type"] == "Q");
    CHECK(j["mats"][0][0][0] == "1");
    CHECK(qrep_from_json(j) == m);

    Json half = {{"r", 2}, {"dim", {1, 1}}, {"field", {{"type", "Q"}}}, {"mats", {{{"2/4"}}, {{3}}}}};
    const auto h = qrep_from_json(half);
    CHECK(h.mat(0)(0, 0) == Rational(1, 2));
    CHECK(rep_to_json(h)["mats"][0][0][0] == "1/2");
    CHECK(rep_to_json(h)["mats"][1][0][0] == "3");

    Json gf = {{"r", 2}, {"dim", {1, 2}}, {"field", {{"type", "GF"}, {"p", 5}}}, {"mats", {{{1}, {4}}, {{0}, {3}}}}};
    const auto any = rep_from_json(gf);
    REQUIRE(std::holds_alternative<KroneckerRep<Fp>>(any));
    CHECK(rep_to_json(std::get<KroneckerRep<Fp>>(any)) == gf);
    CHECK_THROWS(qrep_from_json(gf));

    Json bad = gf;
    bad["mats"][0][0][0] = 7;
    CHECK_THROWS_AS(rep_from_json(bad), std::invalid_argument);
    Json shape = half;
    shape["mats"][0] = {{1, 2}};
    CHECK_THROWS_AS(rep_from_json(shape), std::invalid_argument);
    Json count = half;
    count["mats"].erase(1);
    CHECK_THROWS_AS(rep_from_json(count), std::invalid_argument);
}

TEST_CASE("tree JSON") {
    const auto w = witness(3, 3, 2);
    REQUIRE(w.cover);
    const auto j = tree_to_json(*w.cover);
    CHECK(tree_from_json(j) == *w.cover);
    Json bad = j;
    bad["edges"][0]["color"] = 3;
    CHECK_THROWS_AS(tree_from_json(bad), std::invalid_argument);
}
