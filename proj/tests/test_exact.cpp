#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shalika/gauss_rational.hpp"
#include "shalika/permutation.hpp"
#include "shalika/rational.hpp"
#include "shalika/rational_linalg.hpp"
#include "shalika/torus_char.hpp"

using namespace shalika;

static Rat rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> num(-40, 40);
    std::uniform_int_distribution<std::int64_t> den(1, 12);
    return Rat(num(rng), den(rng));
}

TEST_CASE("rational normal form and accessors") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6).num() == -1);
    CHECK(Rat(3, -6).den() == 2);
    CHECK(Rat(0, 7) == Rat());
    CHECK(Rat(5).is_integer());
    CHECK_FALSE(Rat(5, 3).is_integer());
    CHECK(Rat(-7, 3).sgn() == -1);
    CHECK(Rat(0).sgn() == 0);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(rat_cmp(Rat(7, 2), Rat(7, 2)) == 0);
    CHECK(rat_cmp(Rat(1), Rat(2)) == -1);
}

TEST_CASE("rational field axioms on random inputs") {
    std::mt19937 rng(7u);
    for (int t = 0; t < 500; ++t) {
        Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rat(0));
        if (!a.is_zero()) CHECK(a / a == Rat(1));
    }
}

TEST_CASE("rational parse and print") {
    CHECK(Rat::parse("-3/9") == Rat(-1, 3));
    CHECK(Rat::parse("17") == Rat(17));
    CHECK(Rat(22, 4).str() == "11/2");
    CHECK(Rat(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
    std::mt19937 rng(11u);
    for (int t = 0; t < 200; ++t) {
        Rat a = rand_rat(rng);
        CHECK(Rat::parse(a.str()) == a);
    }
}

TEST_CASE("gaussian rational arithmetic") {
    GaussRat i(Rat(0), Rat(1));
    CHECK(i * i == GaussRat(Rat(-1)));
    GaussRat z(Rat(1, 2), Rat(-1, 3));
    CHECK(z + z.conj() == GaussRat(Rat(1)));
    CHECK(z * z.conj() == GaussRat(Rat(1, 4) + Rat(1, 9)));
    CHECK((z / z) == GaussRat(Rat(1)));
    CHECK_THROWS_AS(z / GaussRat(), std::domain_error);
    CHECK(z.is_real() == false);
    CHECK(GaussRat(Rat(3)).is_real());
}

TEST_CASE("gaussian rational field axioms on random inputs") {
    std::mt19937 rng(13u);
    for (int t = 0; t < 300; ++t) {
        GaussRat a(rand_rat(rng), rand_rat(rng));
        GaussRat b(rand_rat(rng), rand_rat(rng));
        GaussRat c(rand_rat(rng), rand_rat(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a / a == GaussRat(Rat(1)));
    }
}

TEST_CASE("gaussian rational parse and print") {
    CHECK(GaussRat::parse("1/2") == GaussRat(Rat(1, 2)));
    CHECK(GaussRat::parse("1/2+1/3i") == GaussRat(Rat(1, 2), Rat(1, 3)));
    CHECK(GaussRat::parse("-2+-3i") == GaussRat(Rat(-2), Rat(-3)));
    CHECK(GaussRat(Rat(1, 2), Rat(1, 3)).str() == "1/2+1/3i");
    CHECK(GaussRat(Rat(3), Rat(-2)).str() == "3+-2i");
    CHECK(GaussRat(Rat(-5, 7)).str() == "-5/7");
    CHECK_THROWS_AS(GaussRat::parse("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(GaussRat::parse("i"), std::invalid_argument);
    std::mt19937 rng(17u);
    for (int t = 0; t < 200; ++t) {
        GaussRat a(rand_rat(rng), rand_rat(rng));
        CHECK(GaussRat::parse(a.str()) == a);
    }
}

TEST_CASE("torus characters form an abelian group") {
    TorusCharVec a = TorusCharVec::identity(3);
    a.mul_root(1, 3);
    a.mul_monomial(2, -4);
    TorusCharVec b = TorusCharVec::identity(3);
    b.mul_abs_power(1, 2);
    b.mul_monomial(3, 1);
    CHECK(tchar_mul(a, b) == tchar_mul(b, a));
    CHECK(tchar_mul(a, a.inverse()).is_identity());
    CHECK(tchar_mul(a, TorusCharVec::identity(3)) == a);
    std::mt19937 rng(19u);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int t = 0; t < 100; ++t) {
        TorusCharVec x = TorusCharVec::identity(4), y = TorusCharVec::identity(4),
                     z = TorusCharVec::identity(4);
        for (int i = 1; i <= 4; ++i) {
            x.mul_monomial(i, e(rng));
            y.mul_monomial(i, e(rng));
            z.mul_monomial(i, e(rng));
        }
        CHECK(tchar_mul(tchar_mul(x, y), z) == tchar_mul(x, tchar_mul(y, z)));
    }
}

TEST_CASE("torus character parity and abs") {
    TorusCharVec a = TorusCharVec::identity(2);
    a.mul_monomial(1, 3);
    CHECK(a.parity(1) == 1);
    CHECK(a.abs().parity(1) == 0);
    CHECK(a.abs().exp(1) == 3);
    a.mul_monomial(1, 1);
    CHECK(a.parity(1) == 0);
    CHECK(a.exp(1) == 4);
}

TEST_CASE("square comparison drops parity") {
    TorusCharVec lhs = TorusCharVec::identity(2);
    lhs.mul_monomial(1, 2);
    lhs.mul_monomial(2, -2);
    TorusCharVec rhs = TorusCharVec::identity(2);
    rhs.mul_monomial(1, 4);
    rhs.mul_monomial(2, -4);
    rhs.mul_monomial(2, 0); // parity untouched
    CHECK(tchar_square_equals(lhs, rhs));
    rhs.mul_abs_power(1, 1);
    CHECK_FALSE(tchar_square_equals(lhs, rhs));
}

TEST_CASE("permutation basics") {
    Perm w({3, 1, 2});
    CHECK(w(1) == 3);
    CHECK(w(3) == 2);
    CHECK(w.inverse()(3) == 1);
    CHECK((w * w.inverse()) == Perm::identity(3));
    CHECK(w.length() == 2);
    CHECK(Perm({2, 1}).length() == 1);
    CHECK(Perm::identity(4).length() == 0);
    CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);
    CHECK(Perm::parse("3,5,6,1,2,4").str() == "3,5,6,1,2,4");
    CHECK_THROWS_AS(Perm::parse("1,2,2"), std::invalid_argument);
}

TEST_CASE("permutation composition convention") {
    // (a*b)(k) = a(b(k))
    Perm a({2, 3, 1});
    Perm b({3, 2, 1});
    Perm ab = a * b;
    for (int k = 1; k <= 3; ++k) CHECK(ab(k) == a(b(k)));
}

TEST_CASE("permutation embedding and restriction") {
    Perm s({2, 1});
    Perm e = Perm::embed_first(s, 5);
    CHECK(e(1) == 2);
    CHECK(e(4) == 4);
    CHECK(e.fixes_beyond(2));
    CHECK(e.restrict_first(2) == s);
    CHECK_THROWS_AS(Perm({1, 3, 2}).restrict_first(2), std::invalid_argument);
    Perm w({3, 1, 2});
    CHECK(w.apply({1, 2}) == Root{3, 1});
}

TEST_CASE("row space rank over the rationals") {
    RowSpace rs(3);
    CHECK(rs.insert({1, 2, 3}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({1, 3, 4})); // sum of the first two
    CHECK(rs.rank() == 2);
    CHECK(rs.contains({2, 5, 7}));
    CHECK_FALSE(rs.contains({0, 0, 1}));
    CHECK(rs.insert({0, 0, 5}));
    CHECK(rs.rank() == 3);
    CHECK(rs.contains({-7, 11, 2}));
}

TEST_CASE("row space handles fractions exactly") {
    RowSpace rs(2);
    CHECK(rs.insert({3, 7}));
    CHECK_FALSE(rs.insert({6, 14}));
    CHECK_FALSE(rs.insert({-9, -21}));
    CHECK(rs.insert({3, 8}));
    CHECK(rs.rank() == 2);
}
