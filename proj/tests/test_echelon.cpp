#include "kronjord/echelon.hpp"
#include "kronjord/verify.hpp"

#include <doctest.h>

using namespace kronjord;

TEST_CASE("shifted identities") {
    CHECK(shifted_identity(3, 1, 2) == Matrix<Rational>::from_ints({{0}, {1}, {0}}));
    CHECK(shifted_identity(4, 4, 1) == Matrix<Rational>::identity(4));
    for (std::int64_t l = 1; l <= 4; ++l) CHECK(rank(shifted_identity(6, 3, l)) == 3);
    CHECK_THROWS_AS(shifted_identity(4, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(shifted_identity(4, 2, 4), std::invalid_argument);
}

TEST_CASE("phi selection examples") {
    const auto c = select_phi(3, 2, 4);
    CHECK(c.case_tag == EchelonCase::C);
    CHECK(c.phi == std::vector<std::int64_t>{1, 3, 2});
    const auto b = select_phi(3, 3, 5);
    CHECK(b.case_tag == EchelonCase::B);
    CHECK(b.phi == std::vector<std::int64_t>{1, 3, 2});
    const auto d = select_phi(4, 3, 8);
    CHECK(d.case_tag == EchelonCase::D);
    CHECK(d.phi == std::vector<std::int64_t>{1, 4, 6, 2});
    // remaining arrows take the smallest unused shifts
    const auto ext = select_phi(5, 4, 8);
    CHECK(ext.case_tag == EchelonCase::C);
    CHECK(ext.phi == std::vector<std::int64_t>{1, 5, 2, 3, 4});
}

TEST_CASE("phi selection preconditions") {
    CHECK_THROWS_AS(select_phi(3, 1, 2), std::invalid_argument);   // a < 2
    CHECK_THROWS_AS(select_phi(3, 2, 5), std::invalid_argument);   // b > (r-1)a
    CHECK_THROWS_AS(select_phi(3, 3, 3), std::invalid_argument);   // b - a < r-1
}

TEST_CASE("echelon representations") {
    const auto m = build_echelon_rep(select_phi(3, 2, 4));
    CHECK(m.dim() == DimVector{2, 4});
    CHECK(m.mat(0) == shifted_identity(4, 2, 1));
    CHECK(m.mat(1) == shifted_identity(4, 2, 3));
    CHECK(m.mat(2) == shifted_identity(4, 2, 2));
    Vector<Rational> e12{Rational(1), Rational(1), Rational(0)};
    CHECK(pencil(m, e12) == shifted_identity(4, 2, 1) + shifted_identity(4, 2, 3));
    for (const auto& x : m.mats()) CHECK(rank(x) == 2);
    CHECK(ekp_echelon_certificate(m));
}

TEST_CASE("echelon certificate") {
    CHECK(ekp_echelon_certificate(projective_p2<Rational>(4)));
    std::vector<Matrix<Rational>> same{shifted_identity(3, 2, 1), shifted_identity(3, 2, 1)};
    CHECK(!ekp_echelon_certificate(QRep(2, {2, 3}, same)));
    std::vector<Matrix<Rational>> scaled{shifted_identity(3, 2, 1) * Rational(2), shifted_identity(3, 2, 2)};
    CHECK(!ekp_echelon_certificate(QRep(2, {2, 3}, scaled)));
    CHECK(!ekp_echelon_certificate(simple_sink<Rational>(3)));
}

TEST_CASE("case coverage, certificates and bricks") {
    for (int r = 3; r <= 5; ++r)
        for (std::int64_t a = 2; a <= 8; ++a)
            for (std::int64_t b = a + r - 1; b <= (r - 1) * a; ++b) {
                if (tits_form(r, {a, b}) > 0) continue;
                CAPTURE(r);
                CAPTURE(a);
                CAPTURE(b);
                const auto spec = select_phi(r, a, b);
                CHECK(spec.phi.size() == static_cast<std::size_t>(r));
                const auto m = build_echelon_rep(spec);
                CHECK(ekp_echelon_certificate(m));
                CHECK(ekp_sample_check(m, 200, 11).pass);
                if (a <= 5) CHECK(is_brick(m));
            }
}
