#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "shalika/langlands.hpp"

using namespace shalika;

static MultChar chiR(std::int64_t k, Rat lam) {
    return MultChar(ArchField::Real, k, GaussRat(lam));
}
static MultChar chiC(std::int64_t k, Rat lam) {
    return MultChar(ArchField::Complex, k, GaussRat(lam));
}

TEST_CASE("characters normalize and multiply") {
    CHECK(chiR(3, Rat(0)) == chiR(1, Rat(0)));
    CHECK(chiR(-1, Rat(0)) == chiR(1, Rat(0)));
    CHECK(chiC(-2, Rat(1)).k() == -2);
    CHECK(chiR(1, Rat(1)) * chiR(1, Rat(1)) == chiR(0, Rat(2)));
    CHECK(chiC(2, Rat(1, 2)) * chiC(-3, Rat(1, 2)) == chiC(-1, Rat(1)));
    CHECK_THROWS_AS(chiR(0, Rat(0)) * chiC(0, Rat(0)), std::invalid_argument);
    CHECK(chiR(1, Rat(3, 2)).exponent() == Rat(3, 2));
    MultChar c(ArchField::Complex, 1, GaussRat(Rat(1), Rat(2)));
    CHECK(c.exponent() == Rat(1));
}

TEST_CASE("character duals") {
    // dual is the inverse character
    CHECK(dual(WeilIrr::one_dim(chiR(1, Rat(2)))) == WeilIrr::one_dim(chiR(1, Rat(-2))));
    CHECK(dual(WeilIrr::one_dim(chiC(2, Rat(0)))) == WeilIrr::one_dim(chiC(-2, Rat(0))));
    CHECK(dual(WeilIrr::two_dim(3, GaussRat(Rat(1, 2)))) ==
          WeilIrr::two_dim(3, GaussRat(Rat(-1, 2))));
    std::mt19937 rng(5u);
    std::uniform_int_distribution<int> kd(-3, 3);
    std::uniform_int_distribution<int> ld(-6, 6);
    for (int t = 0; t < 100; ++t) {
        WeilIrr w = (t % 2 == 0)
                        ? WeilIrr::one_dim(chiC(kd(rng), Rat(ld(rng), 2)))
                        : WeilIrr::two_dim(1 + std::abs(kd(rng)), GaussRat(Rat(ld(rng), 2)));
        CHECK(dual(dual(w)) == w);
    }
}

TEST_CASE("twisting") {
    CHECK(twist(WeilIrr::two_dim(3, GaussRat(Rat(1, 2))), chiR(1, Rat(1))) ==
          WeilIrr::two_dim(3, GaussRat(Rat(3, 2))));
    CHECK(twist(WeilIrr::one_dim(chiR(0, Rat(1, 2))), chiR(0, Rat(0))) ==
          WeilIrr::one_dim(chiR(0, Rat(1, 2))));
    CHECK(twist(WeilIrr::one_dim(chiR(1, Rat(0))), chiR(1, Rat(1))) ==
          WeilIrr::one_dim(chiR(0, Rat(1))));
    // twist composes through products of eta
    MultChar e1 = chiR(1, Rat(1, 2)), e2 = chiR(1, Rat(2));
    WeilIrr w = WeilIrr::two_dim(2, GaussRat(Rat(-1)));
    CHECK(twist(twist(w, e1), e2) == twist(w, e1 * e2));
    // the pairing map is an involution
    for (const WeilIrr& x :
         {WeilIrr::two_dim(2, GaussRat(Rat(-1))), WeilIrr::one_dim(chiR(1, Rat(5, 2)))}) {
        CHECK(twist(dual(twist(dual(x), e1)), e1) == x);
    }
}

TEST_CASE("determinant of a two dimensional part") {
    CHECK(det_two_dim(WeilIrr::two_dim(3, GaussRat(Rat(1, 2)))) == chiR(0, Rat(1)));
    CHECK(det_two_dim(WeilIrr::two_dim(2, GaussRat())) == chiR(1, Rat(0)));
}

TEST_CASE("symplectic classification examples") {
    MultChar eta = chiR(1, Rat(1));
    LParameter phi(ArchField::Real, {WeilIrr::two_dim(3, GaussRat(Rat(1, 2))),
                                     WeilIrr::two_dim(3, GaussRat(Rat(1, 2)))});
    auto dec = is_symplectic_eta(phi, eta);
    CHECK(dec.value);
    REQUIRE(dec.pairing.size() == 1);
    CHECK(dec.pairing[0] == std::pair<int, int>{1, 2});

    // determinant equal to eta: stands alone
    LParameter solo(ArchField::Real, {WeilIrr::two_dim(2, GaussRat())});
    auto dec2 = is_symplectic_eta(solo, chiR(1, Rat(0)));
    CHECK(dec2.value);
    REQUIRE(dec2.pairing.size() == 1);
    CHECK(dec2.pairing[0] == std::pair<int, int>{1, 1});

    LParameter chars(ArchField::Real, {WeilIrr::one_dim(chiR(0, Rat(1, 2))),
                                       WeilIrr::one_dim(chiR(0, Rat(-1, 2)))});
    CHECK(is_symplectic_eta(chars, chiR(0, Rat(0))).value);

    LParameter odd(ArchField::Real, {WeilIrr::one_dim(chiR(0, Rat(0)))});
    CHECK_FALSE(is_symplectic_eta(odd, chiR(0, Rat(0))).value);

    // multiplicity mismatch between a class and its partner
    LParameter bad(ArchField::Real,
                   {WeilIrr::one_dim(chiR(0, Rat(1))), WeilIrr::one_dim(chiR(0, Rat(1))),
                    WeilIrr::one_dim(chiR(0, Rat(-1))), WeilIrr::one_dim(chiR(1, Rat(-1)))});
    CHECK_FALSE(is_symplectic_eta(bad, chiR(0, Rat(0))).value);

    // odd multiplicity of a self-paired class
    LParameter thrice(ArchField::Real,
                      {WeilIrr::two_dim(3, GaussRat(Rat(1, 2))),
                       WeilIrr::two_dim(3, GaussRat(Rat(1, 2))),
                       WeilIrr::two_dim(3, GaussRat(Rat(1, 2))),
                       WeilIrr::two_dim(1, GaussRat(Rat(1, 2))),
                       WeilIrr::two_dim(1, GaussRat(Rat(1, 2)))});
    CHECK_FALSE(is_symplectic_eta(thrice, eta).value);

    CHECK_THROWS_AS(is_symplectic_eta(phi, chiC(0, Rat(0))), std::invalid_argument);
}

TEST_CASE("complex field symplectic pairs") {
    MultChar eta = chiC(2, Rat(0));
    // c* over C negates k then adds eta's
    LParameter phi(ArchField::Complex, {WeilIrr::one_dim(chiC(3, Rat(1))),
                                        WeilIrr::one_dim(chiC(-1, Rat(-1)))});
    CHECK(is_symplectic_eta(phi, eta).value);
    LParameter off(ArchField::Complex, {WeilIrr::one_dim(chiC(3, Rat(1))),
                                        WeilIrr::one_dim(chiC(1, Rat(-1)))});
    CHECK_FALSE(is_symplectic_eta(off, eta).value);
}

TEST_CASE("standard module ordering") {
    CuspidalFactor d1 = CuspidalFactor::disc(3, GaussRat(Rat(1, 2)));
    CuspidalFactor d2 = CuspidalFactor::disc(2, GaussRat(Rat(-1, 2)));
    CuspidalFactor c1 = CuspidalFactor::character(chiR(0, Rat(2)));
    CuspidalFactor c2 = CuspidalFactor::character(chiR(1, Rat(-3)));
    StandardModule m = StandardModule::normalized(ArchField::Real, {d2, c1, c2, d1});
    CHECK(m.factor(1) == c1);
    CHECK(m.factor(2) == d1);
    CHECK(m.factor(3) == d2);
    CHECK(m.factor(4) == c2);
    CHECK(m.total_size() == 6);
    CHECK(m.composition().str() == "1+2+2+1");
    CHECK_THROWS_AS(StandardModule(ArchField::Real, {d2, d1}), std::invalid_argument);
    // ties: discrete series sorts before a character of equal exponent
    CuspidalFactor ctie = CuspidalFactor::character(chiR(0, Rat(1, 2)));
    StandardModule tie = StandardModule::normalized(ArchField::Real, {ctie, d1});
    CHECK(tie.factor(1) == d1);
}

TEST_CASE("langlands parameter of a module") {
    StandardModule m =
        StandardModule::normalized(ArchField::Real, {CuspidalFactor::disc(3, GaussRat(Rat(1, 2))),
                                                     CuspidalFactor::character(chiR(1, Rat(0)))});
    LParameter phi = langlands_param(m);
    CHECK(phi.dim() == 3);
    CHECK(phi.parts()[0] == WeilIrr::two_dim(3, GaussRat(Rat(1, 2))));
    CHECK(phi.parts()[1] == WeilIrr::one_dim(chiR(1, Rat(0))));
    StandardModule zero = StandardModule::normalized(
        ArchField::Real, {CuspidalFactor::disc(0, GaussRat(Rat(1, 2)))});
    CHECK_THROWS_WITH(langlands_param(zero), Catch::Matchers::ContainsSubstring("expand"));
}

TEST_CASE("central characters and the GL2 criterion") {
    CHECK(central_char_disc(3, GaussRat(Rat(1, 2))) == chiR(0, Rat(1)));
    CHECK(central_char_disc(1, GaussRat()) == chiR(0, Rat(0)));
    CHECK(central_char_disc(0, GaussRat(Rat(1, 2))) == chiR(1, Rat(1)));
    CHECK(gl2_has_shalika(CuspidalFactor::disc(3, GaussRat(Rat(1, 2))), chiR(0, Rat(1))));
    CHECK_FALSE(gl2_has_shalika(CuspidalFactor::disc(3, GaussRat(Rat(1, 2))), chiR(1, Rat(1))));
    CHECK(gl2_has_shalika(chiR(0, Rat(1)), chiR(1, Rat(-1)), chiR(1, Rat(0))));
    CHECK_FALSE(gl2_has_shalika(chiR(0, Rat(1)), chiR(0, Rat(1)), chiR(1, Rat(2))));
}

TEST_CASE("restriction reducibility") {
    LParameter paired(ArchField::Real, {WeilIrr::one_dim(chiR(0, Rat(1, 2))),
                                        WeilIrr::one_dim(chiR(1, Rat(1, 2)))});
    CHECK(restriction_reducible(paired));
    LParameter doubled(ArchField::Real, {WeilIrr::one_dim(chiR(0, Rat(0))),
                                         WeilIrr::one_dim(chiR(0, Rat(0)))});
    CHECK_FALSE(restriction_reducible(doubled));
    LParameter disc_only(ArchField::Real, {WeilIrr::two_dim(2, GaussRat())});
    CHECK(restriction_reducible(disc_only));
    LParameter mixed(ArchField::Real,
                     {WeilIrr::two_dim(2, GaussRat()), WeilIrr::one_dim(chiR(0, Rat(3)))});
    CHECK_FALSE(restriction_reducible(mixed));
}

TEST_CASE("symplectic decision is order independent") {
    std::mt19937 rng(23u);
    std::uniform_int_distribution<int> kd(-2, 2);
    std::uniform_int_distribution<int> ld(-4, 4);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int t = 0; t < 200; ++t) {
        std::vector<WeilIrr> parts;
        int count = nd(rng);
        for (int i = 0; i < count; ++i) {
            if (i % 2 == 0)
                parts.push_back(WeilIrr::two_dim(1 + std::abs(kd(rng)), GaussRat(Rat(ld(rng), 2))));
            else
                parts.push_back(WeilIrr::one_dim(chiR(std::abs(kd(rng)) % 2, Rat(ld(rng), 2))));
        }
        MultChar eta = chiR(std::abs(kd(rng)) % 2, Rat(ld(rng), 2));
        bool base = is_symplectic_eta(LParameter(ArchField::Real, parts), eta).value;
        std::shuffle(parts.begin(), parts.end(), rng);
        CHECK(is_symplectic_eta(LParameter(ArchField::Real, parts), eta).value == base);
    }
}
