#include <doctest.h>

#include <random>

#include "octavia/algebra.hpp"
#include "octavia/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using octavia::Rational;
using octavia::algebra::AlgElem;
namespace al = octavia::algebra;

namespace {

AlgElem e(int dim, int k) { return AlgElem::basis(dim, k); }

}  // namespace

TEST_CASE("octonion table matches the seed and index rules") {
    CHECK(e(8, 1) * e(8, 5) == e(8, 6));
    CHECK(e(8, 2) * e(8, 3) == e(8, 5));
    const auto& t = al::table(8);
    const auto& o = oracle::oct_table();
    auto gen = al::rule_generated_octonion_table();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CHECK(t.at(i, j).sign == o.sign[i][j]);
            CHECK(t.at(i, j).index == o.idx[i][j]);
            if (i && j && i != j) CHECK(gen[i][j] == o.sign[i][j] * o.idx[i][j]);
        }
}

TEST_CASE("products agree with the reference tables") {
    std::mt19937_64 rng(support::kSeed);
    for (int dim : {2, 4, 8, 16}) {
        for (int k = 0; k < 300; ++k) {
            AlgElem a = support::random_rational(dim, 5, 2, rng), b = support::random_rational(dim, 5, 2, rng);
            REQUIRE(oracle::same(oracle::vec(a * b), oracle::mul(oracle::vec(a), oracle::vec(b))));
        }
    }
}

TEST_CASE("inner products, conjugation and inverses") {
    CHECK(al::inner(e(8, 1), e(8, 1)) == Rational(1));
    AlgElem eps1 = al::parse("oct:1,-1,0,0,0,-1,-1,0");
    CHECK(al::inner(e(8, 1), eps1) == Rational(-1, 2));
    CHECK(al::invert(e(8, 7)) == -e(8, 7));
    CHECK(al::invert(eps1) == al::parse("oct:1,1,0,0,0,1,1,0"));
    AlgElem a = AlgElem::one(8) + e(8, 1);
    CHECK(al::invert(a) == al::parse("oct:1,-1,0,0,0,0,0,0"));
    CHECK(a * al::invert(a) == AlgElem::one(8));

    std::mt19937_64 rng(support::kSeed + 1);
    for (int k = 0; k < 200; ++k) {
        AlgElem x = support::random_rational(8, 4, 2, rng), y = support::random_rational(8, 4, 2, rng);
        CHECK(al::conj(al::conj(x)) == x);
        CHECK(al::conj(x * y) == al::conj(y) * al::conj(x));
        // (a, b) = (a conj b + b conj a) / 2
        AlgElem s = Rational(1, 2) * (x * al::conj(y) + y * al::conj(x));
        CHECK(s == AlgElem::from_scalar(8, al::inner(x, y)));
        if (!x.is_zero()) {
            CHECK(x * al::invert(x) == AlgElem::one(8));
            CHECK(al::invert(x) * x == AlgElem::one(8));
        }
    }
    CHECK_THROWS_AS(al::invert(AlgElem::zero(8)), octavia::Error);
    CHECK_THROWS_AS(al::invert(e(16, 3)), octavia::Error);
}

TEST_CASE("associators") {
    CHECK(al::associator(e(8, 1), e(8, 5), e(8, 6)).is_zero());
    CHECK(!al::associator(e(8, 1), e(8, 2), e(8, 3)).is_zero());
    std::mt19937_64 rng(support::kSeed + 2);
    for (int k = 0; k < 200; ++k) {
        AlgElem a = support::random_rational(4, 5, 2, rng), b = support::random_rational(4, 5, 2, rng),
                c = support::random_rational(4, 5, 2, rng);
        CHECK(al::associator(a, b, c).is_zero());
    }
}

TEST_CASE("octonion identities on random elements") {
    std::mt19937_64 rng(support::kSeed + 3);
    for (int k = 0; k < 300; ++k) {
        AlgElem a = support::random_rational(8, 3, 2, rng), x = support::random_rational(8, 3, 2, rng),
                y = support::random_rational(8, 3, 2, rng), d = support::random_rational(8, 3, 2, rng);
        CHECK(al::norm_sq(a * x) == al::norm_sq(a) * al::norm_sq(x));
        CHECK(al::associator(a, a, x).is_zero());
        CHECK(al::associator(a, x, x).is_zero());
        CHECK((a * x) * (y * a) == (a * (x * y)) * a);
        CHECK(((x * a) * y) * a == x * ((a * y) * a));
        CHECK(a * (x * (a * y)) == ((a * x) * a) * y);
        CHECK(al::real_part(a * (x * y)) == al::real_part((a * x) * y));
        CHECK(al::real_part(a * x) == al::real_part(x * a));
        if (!a.is_zero()) {
            AlgElem a2 = a * a, ai = al::invert(a);
            CHECK(((a2 * x) * a) * ((ai * y) * a) == (a2 * (x * y)) * a);
        }
        // |(a + ib)(c + id)|^2 - |a + ib|^2 |c + id|^2 = 2 Re(conj(d) {a, c, b})
        AlgElem p = al::join_double(a, x), q = al::join_double(y, d);
        Rational defect = al::norm_sq(p * q) - al::norm_sq(p) * al::norm_sq(q);
        CHECK(defect == Rational(2) * al::real_part(al::conj(d) * al::associator(a, y, x)));
        CHECK(al::norm_sq(p) == al::norm_sq(a) + al::norm_sq(x));
    }
}

TEST_CASE("sedenion zero divisors") {
    auto w = al::find_sedenion_zero_divisors();
    REQUIRE(w.has_value());
    CHECK(!w->p.is_zero());
    CHECK(!w->q.is_zero());
    CHECK((w->p * w->q).is_zero());
    CHECK(oracle::norm2(oracle::sed_mul(oracle::vec(w->p), oracle::vec(w->q))) == 0.0);
    CHECK(w->norm_pq != w->norm_p * w->norm_q);
    CHECK(!al::find_zero_divisors(8).has_value());
}

TEST_CASE("text format") {
    AlgElem x = al::parse("oct:1,1,0,0,0,1,1,0");
    CHECK(x.coords2() == std::vector<int64_t>{1, 1, 0, 0, 0, 1, 1, 0});
    CHECK(al::format(x) == "oct:1,1,0,0,0,1,1,0");
    CHECK(al::norm_sq(x) == Rational(1));
    CHECK(al::parse(al::format(e(16, 9))) == e(16, 9));
    CHECK(al::parse("quat:2,0,0,0") == AlgElem::one(4));
    CHECK_THROWS_AS(al::parse("oct:1,1"), octavia::Error);
    CHECK_THROWS_AS(al::parse("foo:1"), octavia::Error);
    CHECK_THROWS_AS(e(8, 1) * e(4, 1), octavia::Error);
}
