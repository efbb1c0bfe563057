#include "quasi3/basis.hpp"
#include "quasi3/format.hpp"
#include "quasi3/harness.hpp"
#include "quasi3/quasi.hpp"

#include <doctest.h>

using namespace quasi3;

namespace {

Polynomial P(const char* text) { return parse_polynomial_text(text); }

// Coefficients of 1 / ((1-q)(1-q^2)(1-q^3)) times the numerator, by
// brute-force counting of partitions into parts 1, 2, 3.
long partitions_123(int n) {
    long count = 0;
    for (int c = 0; 3 * c <= n; ++c)
        for (int b = 0; 3 * c + 2 * b <= n; ++b) ++count;
    return count;
}

long series_oracle(int m, int d) {
    long total = 0;
    for (auto [shift, mult] : {std::pair{0, 1}, {3 * m + 1, 2}, {3 * m + 2, 2}, {6 * m + 3, 1}}) {
        if (d >= shift) total += mult * partitions_123(d - shift);
    }
    return total;
}

}  // namespace

TEST_CASE("divisibility by powers of differences") {
    CHECK(divisible_power(P("(x1-x3)^3"), 1, 3, 3));
    CHECK(!divisible_power(P("x1-x3"), 1, 3, 3));
    const auto s13 = Permutation::transposition(1, 3);
    const Polynomial d3 = vandermonde_power(3);
    const Polynomial diff = d3 - apply_perm(d3, s13);
    CHECK(diff == Rational(2) * d3);
    CHECK(divisible_power(diff, 1, 3, 3));
    CHECK(!divisible_power(diff, 1, 3, 4));
    CHECK(largest_dividing_power(diff, 1, 3) == 3);
    CHECK(!largest_dividing_power(Polynomial(), 1, 2).has_value());
    CHECK(divisible_power(P("x2 + 5"), 1, 2, 0));
}

TEST_CASE("quotient by a difference") {
    const auto q = divide_by_difference(P("x1^2 - x2^2"), 1, 2);
    REQUIRE(q.has_value());
    CHECK(*q == P("x1 + x2"));
    CHECK(!divide_by_difference(P("x1^2 + x2"), 1, 2).has_value());
}

TEST_CASE("quasiinvariance examples") {
    for (int m = 0; m <= 3; ++m) CHECK(is_quasiinvariant(elementary(2), m).passed());
    CHECK(is_quasiinvariant(P("x1"), 0).passed());
    const auto r = is_quasiinvariant(P("x1"), 1);
    CHECK(!r.passed());
    CHECK(r.pairs[1].largest_power == 1);
    CHECK(is_quasiinvariant(P("x1^4 - 2*x1^3*(x2+x3) + 6*x1^2*x2*x3"), 1).passed());
}

TEST_CASE("differences vanish on the diagonal and have odd order") {
    Rng rng(101);
    const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
    for (int t = 0; t < 40; ++t) {
        const Polynomial p = random_polynomial(rng, 6, 8);
        for (const auto& [i, j] : pairs) {
            const Polynomial diff = p - apply_perm(p, Permutation::transposition(i, j));
            const auto power = largest_dividing_power(diff, i, j);
            if (diff.is_zero()) {
                CHECK(!power.has_value());
            } else {
                REQUIRE(power.has_value());
                CHECK(*power >= 1);
                CHECK(*power % 2 == 1);
            }
        }
    }
}

TEST_CASE("coinvariant normal form") {
    const auto v = coinvariant_nf(P("x1"));
    CHECK(v == (CoinvariantVector() << 0, -1, -1, 0, 0, 0).finished());
    CHECK(coinvariant_nf(elementary(2)).isZero());
    CHECK(coinvariant_nf(vandermonde_power(1)) == (CoinvariantVector() << 0, 0, 0, 0, 0, -6).finished());
    CHECK(coinvariant_nf(P("x2^3")).isZero());
    Rng rng(4);
    for (int t = 0; t < 15; ++t) {
        const Polynomial p = random_polynomial(rng, 4, 6);
        const Polynomial q = random_polynomial(rng, 4, 6);
        CHECK(coinvariant_nf(p + Rational(3) * q) == coinvariant_nf(p) + coinvariant_nf(q) * Rational(3));
        for (int k = 1; k <= 3; ++k) CHECK(coinvariant_nf(elementary(k) * p).isZero());
    }
}

TEST_CASE("graded dimensions match the series") {
    for (int m = 0; m <= 2; ++m) {
        const auto series = qi_hilbert_coefficients(m, 12);
        for (int d = 0; d <= 12; ++d) {
            CHECK(series[static_cast<std::size_t>(d)] == series_oracle(m, d));
            CHECK(static_cast<long>(graded_qi_basis(m, d).size()) == series_oracle(m, d));
        }
    }
    CHECK(graded_qi_basis(1, 3).size() == 3);
    CHECK(graded_qi_basis(1, 4).size() == 6);
    CHECK(graded_qi_basis(3, 0).size() == 1);
}

TEST_CASE("graded basis elements are quasiinvariant and the space is a ring") {
    for (int d = 0; d <= 5; ++d) {
        for (const auto& p : graded_qi_basis(1, d)) {
            CHECK(p.is_homogeneous());
            CHECK(is_quasiinvariant(p, 1).passed());
        }
    }
    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        const int da = static_cast<int>(rng.uniform(1, 5));
        const int db = static_cast<int>(rng.uniform(1, 5));
        const auto ba = graded_qi_basis(1, da);
        const auto bb = graded_qi_basis(1, db);
        const auto& a = ba[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ba.size()) - 1))];
        const auto& b = bb[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(bb.size()) - 1))];
        CHECK(is_quasiinvariant(a * b, 1).passed());
    }
}

TEST_CASE("QI_{m+1} is contained in QI_m") {
    for (int m = 0; m <= 2; ++m) {
        for (int d : {4, 6, 8}) {
            for (const auto& p : graded_qi_basis(m + 1, d)) CHECK(is_quasiinvariant(p, m).passed());
        }
    }
}

TEST_CASE("ideal part membership") {
    const Polynomial a1 = build_A1(1);
    CHECK(in_ideal_part(elementary(1) * a1, 1));
    CHECK(!in_ideal_part(a1, 1));
    CHECK(!in_ideal_part(vandermonde_power(3), 1));
    CHECK(in_ideal_part(Polynomial(), 1));
    CHECK(!in_ideal_part(Polynomial(Rational(1)), 1));
    CHECK_THROWS(in_ideal_part(P("x1^2 + x2"), 1));
    CHECK(independent_modulo_ideal_part({a1, apply_perm(a1, Permutation::transposition(1, 2))}, 1));
    CHECK(!independent_modulo_ideal_part({a1, Rational(2) * a1}, 1));
}

TEST_CASE("quotient degrees") {
    CHECK(quotient_degrees(2) == std::array<int, 6>{0, 7, 7, 8, 8, 15});
}
