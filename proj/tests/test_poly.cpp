#include "quasi3/format.hpp"
#include "quasi3/harness.hpp"
#include "quasi3/poly.hpp"

#include <doctest.h>

using namespace quasi3;

namespace {
Polynomial P(const char* text) { return parse_polynomial_text(text); }
}  // namespace

TEST_CASE("ring operations normalize") {
    CHECK((P("x1") + P("-x1")).is_zero());
    CHECK(P("(x1-x2)*(x1+x2)") == P("x1^2 - x2^2"));
    const Polynomial delta = P("(x1-x2)*(x1-x3)*(x2-x3)");
    CHECK(delta.size() == 6);
    CHECK(delta == vandermonde_power(1));
    CHECK((delta * Rational(0)).is_zero());
    CHECK(!Polynomial().degree().has_value());
    CHECK(P("x1^2*x3 + 4").degree() == 3);
    CHECK(!P("x1^2*x3 + 4").is_homogeneous());
}

TEST_CASE("grlex descending term order") {
    std::vector<Exponents> seen;
    for (const auto& [e, c] : P("1 + x3 + x1 + x2^2 + x1*x3 + x1^2").terms()) seen.push_back(e);
    const std::vector<Exponents> expect{{2, 0, 0}, {1, 0, 1}, {0, 2, 0}, {1, 0, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(seen == expect);
}

TEST_CASE("permutation action examples") {
    const auto s12 = Permutation::transposition(1, 2);
    const auto s13 = Permutation::transposition(1, 3);
    CHECK(apply_perm(P("x1"), s12) == P("x2"));
    CHECK(apply_perm(P("x1^2*x3"), s13) == P("x3^2*x1"));
    for (const auto& s : Permutation::all()) CHECK(apply_perm(elementary(2), s) == elementary(2));
}

TEST_CASE("the action is a group action and a ring homomorphism") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_polynomial(rng, 5, 6);
        const Polynomial q = random_polynomial(rng, 4, 5);
        CHECK(apply_perm(p, Permutation::identity()) == p);
        for (const auto& s : Permutation::all()) {
            CHECK(apply_perm(p * q, s) == apply_perm(p, s) * apply_perm(q, s));
            for (const auto& t : Permutation::all()) {
                CHECK(apply_perm(apply_perm(p, t), s) == apply_perm(p, s * t));
            }
        }
    }
}

TEST_CASE("the action substitutes x_sigma(i) for x_i") {
    // Evaluate both sides at a point with distinct coordinates.
    const std::array<Rational, 3> pt{Rational(2), Rational(-3), Rational(7)};
    auto eval = [](const Polynomial& p, const std::array<Rational, 3>& x) {
        Rational total;
        for (const auto& [e, c] : p.terms()) {
            Rational term = c;
            for (std::size_t v = 0; v < 3; ++v)
                for (int k = 0; k < e[v]; ++k) term *= x[v];
            total += term;
        }
        return total;
    };
    const Polynomial p = P("x1^3*x2 - 5*x2*x3^2 + x3");
    for (const auto& s : Permutation::all()) {
        const std::array<Rational, 3> sub{pt[static_cast<std::size_t>(s(1) - 1)], pt[static_cast<std::size_t>(s(2) - 1)],
                                          pt[static_cast<std::size_t>(s(3) - 1)]};
        CHECK(eval(apply_perm(p, s), pt) == eval(p, sub));
    }
}

TEST_CASE("Vandermonde is alternating") {
    const Polynomial delta = vandermonde_power(1);
    CHECK(delta == P("x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2"));
    for (const auto& s : Permutation::all()) CHECK(apply_perm(delta, s) == Rational(s.sign()) * delta);
    const Polynomial d2 = vandermonde_power(2);
    CHECK(d2.degree() == 6);
    for (const auto& s : Permutation::all()) CHECK(apply_perm(d2, s) == d2);
    CHECK(vandermonde_power(0) == Polynomial(Rational(1)));
}

TEST_CASE("monomial symmetric functions in x2, x3") {
    CHECK(mono_sym(1, 0) == P("x2 + x3"));
    CHECK(mono_sym(1, 1) == P("x2*x3"));
    CHECK(mono_sym(2, 1) == P("x2^2*x3 + x2*x3^2"));
    CHECK(mono_sym(1, 2) == mono_sym(2, 1));
    const auto s23 = Permutation::transposition(2, 3);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= i; ++j) CHECK(apply_perm(mono_sym(i, j), s23) == mono_sym(i, j));
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary(1) == P("x1 + x2 + x3"));
    CHECK(elementary(2) == P("x1*x2 + x1*x3 + x2*x3"));
    CHECK(elementary(3) == P("x1*x2*x3"));
    CHECK_THROWS(elementary(0));
    CHECK_THROWS(elementary(4));
}

TEST_CASE("permutations") {
    const auto& all = Permutation::all();
    for (std::size_t t = 0; t < all.size(); ++t) {
        CHECK(all[t].index() == static_cast<int>(t));
        CHECK(all[t] * all[t].inverse() == Permutation::identity());
    }
    const auto s12 = Permutation::transposition(1, 2);
    const auto s23 = Permutation::transposition(2, 3);
    CHECK(s12.sign() == -1);
    CHECK((s12 * s23).sign() == 1);
    CHECK(s12 * s23 != s23 * s12);
    CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("monomials of degree d") {
    for (int d = 0; d <= 8; ++d) CHECK(monomials_of_degree(d).size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
}
