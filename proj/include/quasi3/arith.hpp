#pragma once

// Exact integers and rationals backed by GMP, plus the binomial convention
// every other module relies on.

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace quasi3 {

class Integer {
public:
    Integer() = default;
    Integer(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses a base-10 integer with optional leading sign.
    static Integer parse(std::string_view text);

    const mpz_class& gmp() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }
    std::string to_string() const { return v_.get_str(); }

    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    /// Exact division; the divisor must divide *this.
    Integer& operator/=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpz_class v_;
};

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v.gmp()) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "n" or "n/d" (any sign placement, reduced on read).
    static Rational parse(std::string_view text);

    const mpq_class& gmp() const { return v_; }

    Integer num() const { return Integer(mpz_class(v_.get_num())); }
    Integer den() const { return Integer(mpz_class(v_.get_den())); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }

    /// "num/den" in lowest terms, or "num" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);

inline Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }
inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

/// n choose k, and 0 whenever k < 0, k > n, or n < 0.
Integer binom(long n, long k);

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

}  // namespace quasi3

namespace Eigen {

template <>
struct NumTraits<quasi3::Integer> : GenericNumTraits<quasi3::Integer> {
    using Real = quasi3::Integer;
    using NonInteger = quasi3::Rational;
    using Nested = quasi3::Integer;
    using Literal = quasi3::Integer;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline int digits10() { return 0; }
    static inline quasi3::Integer epsilon() { return 0; }
    static inline quasi3::Integer dummy_precision() { return 0; }
};

template <>
struct NumTraits<quasi3::Rational> : GenericNumTraits<quasi3::Rational> {
    using Real = quasi3::Rational;
    using NonInteger = quasi3::Rational;
    using Nested = quasi3::Rational;
    using Literal = quasi3::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 6
    };
    static inline int digits10() { return 0; }
    static inline quasi3::Rational epsilon() { return 0; }
    static inline quasi3::Rational dummy_precision() { return 0; }
};

}  // namespace Eigen
