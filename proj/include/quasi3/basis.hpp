#pragma once

// Construction of the quotient basis {1, A1, s12 A1, A2, s12 A2, Delta^{2m+1}}
// of QI_m / <e1, e2, e3> and the verification pipeline around it.

#include "quasi3/poly.hpp"
#include "quasi3/quasi.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quasi3 {

struct Ansatz {
    int m = 0;
    int d = 0;
    /// C_[i,j] in ansatz_columns(m) order, normalized to C_[0,0] = 1.
    RationalVector coefficients;
    Polynomial polynomial;
};

/// sum over 0 <= j <= i <= m of coefficients[[i,j]] x1^{d-i-j} m_[i,j](x2, x3).
Polynomial assemble_ansatz(int m, int d, const RationalVector& coefficients);

/// Solves the degree-d coefficient system. Throws std::runtime_error if the
/// null space is not one-dimensional or cannot be normalized.
Ansatz solve_ansatz(int m, int d);

Polynomial build_A1(int m);
Polynomial build_A2(int m);

enum class VerifyLevel { degrees, quasi, full };

struct BasisReport {
    int m = 0;
    VerifyLevel level = VerifyLevel::full;
    std::array<std::string, 6> names{"1", "A1", "s12 A1", "A2", "s12 A2", "Delta^{2m+1}"};
    std::array<Polynomial, 6> elements;
    Ansatz a1;
    Ansatz a2;

    std::array<int, 6> degrees{};
    bool degrees_ok = false;
    /// Per-element quasiinvariance; empty when not requested.
    std::array<std::optional<bool>, 6> quasi;
    std::optional<bool> s23_invariant;
    /// A2 is not a scalar multiple of e1 A1.
    std::optional<bool> a2_not_multiple_of_e1a1;
    /// Independence modulo the ideal part at degrees 3m+1, 3m+2, 6m+3.
    std::optional<bool> independent_3m1;
    std::optional<bool> independent_3m2;
    std::optional<bool> delta_not_in_ideal;
    /// Set when full verification was requested but m exceeded the budget.
    bool independence_skipped = false;

    /// Every requested verdict passed and nothing was skipped.
    bool passed() const;
};

/// Largest m for which full verification runs the ideal-membership solves.
inline constexpr int kDefaultIdealBudgetM = 2;

BasisReport build_basis(int m, VerifyLevel level = VerifyLevel::full, int ideal_budget_m = kDefaultIdealBudgetM);

}  // namespace quasi3
