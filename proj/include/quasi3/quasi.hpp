#pragma once

// m-quasiinvariance: the divisibility test itself, the coinvariant normal
// form, and graded linear-algebra oracles for the ring QI_m and its ideal
// part <e1, e2, e3> * QI_m.

#include "quasi3/poly.hpp"

#include <Eigen/Core>

#include <array>
#include <optional>
#include <vector>

namespace quasi3 {

/// Quotient of p by (x_i - x_j) when the division is exact.
std::optional<Polynomial> divide_by_difference(const Polynomial& p, int i, int j);

/// True iff (x_i - x_j)^power divides p.
bool divisible_power(const Polynomial& p, int i, int j, int power);

/// Largest power of (x_i - x_j) dividing p; empty when p == 0 (every power divides).
std::optional<int> largest_dividing_power(const Polynomial& p, int i, int j);

struct PairVerdict {
    int i = 0;
    int j = 0;
    bool divisible = false;
    /// Largest power of (x_i - x_j) dividing (1 - s_ij)P; empty means (1 - s_ij)P == 0.
    std::optional<int> largest_power;
};

struct QuasiReport {
    int m = 0;
    std::array<PairVerdict, 3> pairs;  // (1,2), (1,3), (2,3)
    bool passed() const { return pairs[0].divisible && pairs[1].divisible && pairs[2].divisible; }
};

QuasiReport is_quasiinvariant(const Polynomial& p, int m);

/// Coordinates in the coinvariant basis (1, x2, x3, x2x3, x3^2, x2x3^2).
using CoinvariantVector = Eigen::Matrix<Rational, 6, 1>;

/// Image of p in Q[x1,x2,x3] / (e1, e2, e3).
///
/// This is the normal form for the full polynomial quotient. It sends every
/// homogeneous polynomial of degree >= 4 to zero, so it says nothing about
/// independence modulo the ideal part of QI_m; use in_ideal_part for that.
CoinvariantVector coinvariant_nf(const Polynomial& p);

/// Basis of the homogeneous degree-deg m-quasiinvariants. Each element is
/// normalized so its leading coefficient (in GrlexDescending order) is 1.
std::vector<Polynomial> graded_qi_basis(int m, int deg);

/// Spanning set of e1 (QI_m)_{d-1} + e2 (QI_m)_{d-2} + e3 (QI_m)_{d-3}.
std::vector<Polynomial> ideal_part_generators(int m, int d);

/// Membership of a homogeneous p in the ideal part of QI_m at its degree.
/// Throws std::invalid_argument for non-homogeneous input.
bool in_ideal_part(const Polynomial& p, int m);

/// True iff no nonzero linear combination of the given homogeneous
/// polynomials (all of one degree) lies in the ideal part of QI_m.
bool independent_modulo_ideal_part(const std::vector<Polynomial>& polys, int m);

/// Coefficients of q^0 .. q^max_degree of the Hilbert series of QI_m,
/// (1 + 2q^{3m+1} + 2q^{3m+2} + q^{6m+3}) / ((1-q)(1-q^2)(1-q^3)).
std::vector<long> qi_hilbert_coefficients(int m, int max_degree);

/// Degrees of the quotient basis: 0, 3m+1, 3m+1, 3m+2, 3m+2, 6m+3.
std::array<int, 6> quotient_degrees(int m);

/// Coordinates of a homogeneous p against the given monomial list.
RationalVector coordinates(const Polynomial& p, const std::vector<Exponents>& monomials);

}  // namespace quasi3
