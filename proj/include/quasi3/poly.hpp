#pragma once

// Sparse polynomials in x1, x2, x3 over the rationals and the S3 action on them.

#include "quasi3/arith.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace quasi3 {

/// Exponents (a, b, c) of x1^a x2^b x3^c.
using Exponents = std::array<int, 3>;

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class Polynomial {
public:
    using Terms = std::map<Exponents, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT(google-explicit-constructor)

    static Polynomial monomial(const Exponents& e, const Rational& c = 1);
    /// x1, x2 or x3 for index 1, 2, 3.
    static Polynomial variable(int index);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; empty for the zero polynomial.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponents& e) const;

    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& r);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
    friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

Polynomial pow(const Polynomial& p, int exponent);

/// An element of S3 stored by its images (sigma(1), sigma(2), sigma(3)).
class Permutation {
public:
    constexpr Permutation() : image_{1, 2, 3} {}
    /// Throws std::invalid_argument unless the images form a bijection of {1,2,3}.
    explicit Permutation(std::array<int, 3> image);

    static Permutation identity() { return {}; }
    /// The transposition s_ij.
    static Permutation transposition(int i, int j);
    /// All six elements, in lexicographic order of their image lists.
    static const std::array<Permutation, 6>& all();

    int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    const std::array<int, 3>& image() const { return image_; }
    int sign() const;
    /// Position of this element in all().
    int index() const;
    Permutation inverse() const;

    /// Composition (s * t)(i) = s(t(i)); acting by s * t is acting by t, then s.
    friend Permutation operator*(const Permutation& s, const Permutation& t);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::array<int, 3> image_;
};

/// (sigma P)(x1, x2, x3) = P(x_sigma(1), x_sigma(2), x_sigma(3)).
Polynomial apply_perm(const Polynomial& p, const Permutation& sigma);

/// m_[i,j](x2, x3): x2^i x3^j + x2^j x3^i, or the single term x2^i x3^i when i == j.
Polynomial mono_sym(int i, int j);

/// Elementary symmetric polynomial e_k in three variables, k in {1, 2, 3}.
Polynomial elementary(int k);

/// (x1 - x2)(x1 - x3)(x2 - x3) raised to p >= 0.
Polynomial vandermonde_power(int p);

/// Exponents of every monomial of total degree d, in GrlexDescending order.
std::vector<Exponents> monomials_of_degree(int d);

}  // namespace quasi3
