#pragma once

// The rational group algebra of S3 acting on polynomials, and the projector
// identities relating [S3], [S3]', pi1 and pi2.

#include "quasi3/poly.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace quasi3 {

/// Coefficients indexed by Permutation::index().
class GroupAlgebraElement {
public:
    using Coefficients = Eigen::Matrix<Rational, 6, 1>;

    GroupAlgebraElement() : coeffs_(Coefficients::Constant(Rational(0))) {}
    explicit GroupAlgebraElement(const Permutation& sigma, const Rational& c = 1);

    static GroupAlgebraElement one() { return GroupAlgebraElement(Permutation::identity()); }

    const Coefficients& coefficients() const { return coeffs_; }
    Rational coefficient(const Permutation& sigma) const { return coeffs_(sigma.index()); }
    /// Number of permutations carrying a nonzero coefficient.
    int support_size() const;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rational& r);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& r) { return a *= r; }
    friend GroupAlgebraElement operator*(const Rational& r, GroupAlgebraElement a) { return a *= r; }
    /// Convolution product; (g * h) acting on P is g acting on (h acting on P).
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& g, const GroupAlgebraElement& h);
    GroupAlgebraElement operator-() const { return *this * Rational(-1); }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    Coefficients coeffs_;
};

/// "S3sym" = [S3], "S3alt" = [S3]', "pi1", "pi2". Throws std::invalid_argument otherwise.
GroupAlgebraElement make_element(std::string_view name);

Polynomial apply(const GroupAlgebraElement& g, const Polynomial& p);

struct IdentityCheck {
    std::string name;
    std::size_t sample;
    bool passed;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

/// Names of the eight polynomial-level identities checked per sample.
const std::vector<std::string>& identity_names();

/// Checks every identity on every sample polynomial.
IdentityReport verify_identities(const std::vector<Polynomial>& samples);

/// Same identities as exact equalities inside the group algebra.
IdentityReport verify_identities_in_algebra();

}  // namespace quasi3
