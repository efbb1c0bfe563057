#include "quasi3/basis.hpp"

#include "quasi3/linalg.hpp"
#include "quasi3/linsys.hpp"

#include <stdexcept>
#include <string>

namespace quasi3 {

Polynomial assemble_ansatz(int m, int d, const RationalVector& coefficients) {
    const auto cols = ansatz_columns(m);
    if (static_cast<std::size_t>(coefficients.size()) != cols.size()) {
        throw std::invalid_argument("ansatz coefficient vector has the wrong length");
    }
    Polynomial p;
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const auto [i, j] = cols[t];
        p += coefficients(static_cast<Eigen::Index>(t)) * Polynomial::monomial({d - i - j, 0, 0}) * mono_sym(i, j);
    }
    return p;
}

Ansatz solve_ansatz(int m, int d) {
    const auto ns = nullspace(build_system(m, d));
    if (ns.basis.size() != 1) {
        throw std::runtime_error("coefficient system for m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                                 " has a " + std::to_string(ns.basis.size()) +
                                 "-dimensional null space; expected exactly 1");
    }
    if (!ns.normalized) {
        throw std::runtime_error("null vector for m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                                 " has C_[0,0] = 0 and cannot be normalized");
    }
    Ansatz a;
    a.m = m;
    a.d = d;
    a.coefficients = ns.basis.front();
    a.polynomial = assemble_ansatz(m, d, a.coefficients);
    return a;
}

Polynomial build_A1(int m) { return solve_ansatz(m, 3 * m + 1).polynomial; }
Polynomial build_A2(int m) { return solve_ansatz(m, 3 * m + 2).polynomial; }

bool BasisReport::passed() const {
    if (!degrees_ok || independence_skipped) return false;
    for (const auto& q : quasi)
        if (q && !*q) return false;
    for (const auto* v : {&s23_invariant, &a2_not_multiple_of_e1a1, &independent_3m1, &independent_3m2,
                          &delta_not_in_ideal})
        if (*v && !**v) return false;
    return true;
}

BasisReport build_basis(int m, VerifyLevel level, int ideal_budget_m) {
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    BasisReport r;
    r.m = m;
    r.level = level;
    r.a1 = solve_ansatz(m, 3 * m + 1);
    r.a2 = solve_ansatz(m, 3 * m + 2);
    const auto s12 = Permutation::transposition(1, 2);
    r.elements = {Polynomial(1),
                  r.a1.polynomial,
                  apply_perm(r.a1.polynomial, s12),
                  r.a2.polynomial,
                  apply_perm(r.a2.polynomial, s12),
                  vandermonde_power(2 * m + 1)};

    const auto expected = quotient_degrees(m);
    r.degrees_ok = true;
    for (std::size_t t = 0; t < 6; ++t) {
        r.degrees[t] = r.elements[t].degree().value_or(-1);
        r.degrees_ok = r.degrees_ok && r.degrees[t] == expected[t] && r.elements[t].is_homogeneous();
    }
    if (level == VerifyLevel::degrees) return r;

    for (std::size_t t = 0; t < 6; ++t) r.quasi[t] = is_quasiinvariant(r.elements[t], m).passed();
    const auto s23 = Permutation::transposition(2, 3);
    r.s23_invariant = apply_perm(r.a1.polynomial, s23) == r.a1.polynomial &&
                      apply_perm(r.a2.polynomial, s23) == r.a2.polynomial;
    {
        const auto mons = monomials_of_degree(3 * m + 2);
        RationalMatrix pair(2, static_cast<Eigen::Index>(mons.size()));
        pair.row(0) = coordinates(r.a2.polynomial, mons).transpose();
        pair.row(1) = coordinates(elementary(1) * r.a1.polynomial, mons).transpose();
        r.a2_not_multiple_of_e1a1 = rank_exact(pair) == 2;
    }
    if (level == VerifyLevel::quasi) return r;

    if (m > ideal_budget_m) {
        r.independence_skipped = true;
        return r;
    }
    r.independent_3m1 = independent_modulo_ideal_part({r.elements[1], r.elements[2]}, m);
    r.independent_3m2 = independent_modulo_ideal_part({r.elements[3], r.elements[4]}, m);
    r.delta_not_in_ideal = !in_ideal_part(r.elements[5], m);
    return r;
}

}  // namespace quasi3
