#include "quasi3/format.hpp"
#include "quasi3/group_algebra.hpp"
#include "quasi3/harness.hpp"

#include <doctest.h>

using namespace quasi3;

namespace {
Polynomial P(const char* text) { return parse_polynomial_text(text); }
const Rational kSixth(Integer(1), Integer(6));
}  // namespace

TEST_CASE("named elements") {
    const auto sym = make_element("S3sym");
    const auto alt = make_element("S3alt");
    for (const auto& s : Permutation::all()) {
        CHECK(sym.coefficient(s) == kSixth);
        CHECK(alt.coefficient(s) == Rational(s.sign()) * kSixth);
    }
    // pi1 = (1 + s23 - s12 - s23 s12) / 3
    const auto s12 = Permutation::transposition(1, 2);
    const auto s23 = Permutation::transposition(2, 3);
    const Rational third(Integer(1), Integer(3));
    GroupAlgebraElement expect = GroupAlgebraElement::one() * third;
    expect += GroupAlgebraElement(s23, third);
    expect -= GroupAlgebraElement(s12, third);
    expect -= GroupAlgebraElement(s23 * s12, third);
    CHECK(make_element("pi1") == expect);
    CHECK(make_element("pi1").support_size() == 4);
    CHECK_THROWS(make_element("pi3"));
}

TEST_CASE("applying elements to polynomials") {
    CHECK(apply(make_element("pi1"), P("x1")) == P("2/3*x1 - 1/3*x2 - 1/3*x3"));
    CHECK(apply(make_element("S3sym"), P("x1")) == P("1/3*x1 + 1/3*x2 + 1/3*x3"));
    CHECK(apply(make_element("S3alt"), P("x1")).is_zero());
}

TEST_CASE("product order: (gh)P = g(hP)") {
    Rng rng(3);
    const auto pi1 = make_element("pi1");
    const auto pi2 = make_element("pi2");
    const GroupAlgebraElement s12(Permutation::transposition(1, 2));
    for (int t = 0; t < 10; ++t) {
        const Polynomial p = random_polynomial(rng, 5, 6);
        CHECK(apply(pi2 * s12, p) == apply(pi2, apply(s12, p)));
        CHECK(apply(s12 * pi1, p) == apply(s12, apply(pi1, p)));
    }
}

TEST_CASE("identities at element level") {
    const auto report = verify_identities_in_algebra();
    CHECK(report.checks.size() == identity_names().size());
    CHECK(report.all_passed());
    const auto sum = make_element("S3sym") + make_element("pi1") + make_element("pi2") + make_element("S3alt");
    CHECK(sum == GroupAlgebraElement::one());
}

TEST_CASE("identities on samples") {
    const auto r = verify_identities({P("x1^2*x3"), elementary(2), vandermonde_power(1)});
    CHECK(r.checks.size() == 3 * identity_names().size());
    CHECK(r.all_passed());
    CHECK_THROWS(verify_identities({}));
}

TEST_CASE("symmetric and alternating inputs") {
    const auto e2 = elementary(2);
    CHECK(apply(make_element("pi1"), e2).is_zero());
    CHECK(apply(make_element("pi2"), e2).is_zero());
    CHECK(apply(make_element("S3alt"), e2).is_zero());
    CHECK(apply(make_element("S3sym"), e2) == e2);
    const auto delta = vandermonde_power(1);
    CHECK(apply(make_element("S3alt"), delta) == delta);
    CHECK(apply(make_element("pi1"), delta).is_zero());
    CHECK(apply(make_element("pi2"), delta).is_zero());
    CHECK(apply(make_element("S3sym"), delta).is_zero());
}

TEST_CASE("a wrong identity is detected") {
    // pi1 pi2 is zero but pi1 s12 is not; sanity check that equality is not vacuous.
    const GroupAlgebraElement s12(Permutation::transposition(1, 2));
    CHECK(!(make_element("pi1") * s12 == make_element("pi1")));
}
