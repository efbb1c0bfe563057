#include "quasi3/basis.hpp"
#include "quasi3/format.hpp"
#include "quasi3/linalg.hpp"
#include "quasi3/quasi.hpp"

#include <doctest.h>

using namespace quasi3;

namespace {
Polynomial P(const char* text) { return parse_polynomial_text(text); }
}  // namespace

TEST_CASE("A1 and A2 for small m") {
    CHECK(build_A1(0) == P("x1"));
    CHECK(build_A2(0) == P("x1^2"));
    CHECK(build_A1(1) == P("x1^4 - 2*x1^3*(x2+x3) + 6*x1^2*x2*x3"));
    CHECK(build_A2(1) == P("x1^5 - 5/3*x1^4*(x2+x3) + 10/3*x1^3*x2*x3"));
    CHECK(build_A1(2) == P("x1^7 - 7/2*x1^6*(x2+x3) + 14*x1^5*x2*x3 + 7/2*x1^5*(x2^2+x3^2)"
                           " - 35/2*x1^4*(x2^2*x3 + x2*x3^2) + 35*x1^3*x2^2*x3^2"));
    CHECK(build_A2(2) == P("x1^8 - 16/5*x1^7*(x2+x3) + 56/5*x1^6*x2*x3 + 14/5*x1^6*(x2^2+x3^2)"
                           " - 56/5*x1^5*(x2^2*x3 + x2*x3^2) + 14*x1^4*x2^2*x3^2"));
}

TEST_CASE("constructed elements satisfy the structural properties") {
    const auto s23 = Permutation::transposition(2, 3);
    const auto s12 = Permutation::transposition(1, 2);
    for (int m = 0; m <= 5; ++m) {
        for (const Polynomial& a : {build_A1(m), build_A2(m)}) {
            CHECK(is_quasiinvariant(a, m).passed());
            CHECK(apply_perm(a, s23) == a);
            for (const auto& [e, c] : a.terms()) {
                CHECK(e[1] <= m);
                CHECK(e[2] <= m);
            }
            // {A, s12 A} has rank 2.
            const Polynomial b = apply_perm(a, s12);
            const auto monos = monomials_of_degree(*a.degree());
            RationalMatrix rows(2, static_cast<Eigen::Index>(monos.size()));
            for (std::size_t t = 0; t < monos.size(); ++t) {
                rows(0, static_cast<Eigen::Index>(t)) = a.coefficient(monos[t]);
                rows(1, static_cast<Eigen::Index>(t)) = b.coefficient(monos[t]);
            }
            CHECK(rank_exact(rows) == 2);
        }
        if (m >= 1) {
            const Polynomial e1a1 = elementary(1) * build_A1(m);
            CHECK(!e1a1.coefficient({m + 1, m + 1, m}).is_zero());
            CHECK(e1a1.coefficient({m, m + 1, m + 1}).is_zero());
        }
    }
}

TEST_CASE("m = 0 basis spans the coinvariants") {
    const auto r = build_basis(0);
    CHECK(r.degrees == std::array<int, 6>{0, 1, 1, 2, 2, 3});
    CHECK(r.elements[1] == P("x1"));
    CHECK(r.elements[2] == P("x2"));
    CHECK(r.elements[4] == P("x2^2"));
    CHECK(r.elements[5] == vandermonde_power(1));
    CHECK(r.passed());
    RationalMatrix images(6, 6);
    for (int t = 0; t < 6; ++t) images.col(t) = coinvariant_nf(r.elements[static_cast<std::size_t>(t)]);
    CHECK(!det_exact(images).is_zero());
}

TEST_CASE("full verification for m = 1 and 2") {
    for (int m = 1; m <= 2; ++m) {
        const auto r = build_basis(m);
        CHECK(r.passed());
        CHECK(!r.independence_skipped);
        CHECK(r.degrees == std::array<int, 6>{0, 3 * m + 1, 3 * m + 1, 3 * m + 2, 3 * m + 2, 6 * m + 3});
        for (const auto& v : r.quasi) CHECK(v == true);
        CHECK(r.independent_3m1 == true);
        CHECK(r.independent_3m2 == true);
        CHECK(r.delta_not_in_ideal == true);
        CHECK(r.a2_not_multiple_of_e1a1 == true);
    }
}

TEST_CASE("verification levels and budget") {
    const auto deg = build_basis(4, VerifyLevel::degrees);
    CHECK(deg.degrees_ok);
    CHECK(!deg.quasi[1].has_value());
    CHECK(deg.passed());
    const auto quasi = build_basis(4, VerifyLevel::quasi);
    CHECK(quasi.quasi[5] == true);
    CHECK(quasi.passed());
    const auto full = build_basis(3, VerifyLevel::full);
    CHECK(full.independence_skipped);
    CHECK(!full.passed());
}

TEST_CASE("solve_ansatz returns normalized coefficients") {
    const auto a = solve_ansatz(2, 7);
    CHECK(a.coefficients(0) == Rational(1));
    CHECK(a.polynomial == assemble_ansatz(2, 7, a.coefficients));
    CHECK_THROWS(solve_ansatz(2, 9));
}
