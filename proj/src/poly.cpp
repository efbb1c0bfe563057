#include "quasi3/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quasi3 {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponents{0, 0, 0}, constant);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent");
    Polynomial p;
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(int index) {
    if (index < 1 || index > 3) throw std::invalid_argument("variable index must be 1, 2 or 3");
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(e);
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= r;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return r;
}

Polynomial pow(const Polynomial& p, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial result(1);
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Permutation::Permutation(std::array<int, 3> image) : image_(image) {
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) throw std::invalid_argument("not a permutation of {1,2,3}");
}

Permutation Permutation::transposition(int i, int j) {
    if (i == j || i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::invalid_argument("transposition needs two distinct indices in {1,2,3}");
    }
    std::array<int, 3> image{1, 2, 3};
    std::swap(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
    return Permutation(image);
}

const std::array<Permutation, 6>& Permutation::all() {
    static const std::array<Permutation, 6> elements{
        Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
        Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
    return elements;
}

int Permutation::sign() const {
    int inversions = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (image_[static_cast<std::size_t>(a)] > image_[static_cast<std::size_t>(b)]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

int Permutation::index() const {
    const auto& elems = all();
    return static_cast<int>(std::find(elems.begin(), elems.end(), *this) - elems.begin());
}

Permutation Permutation::inverse() const {
    std::array<int, 3> inv{};
    for (int i = 1; i <= 3; ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(inv);
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    return Permutation({s(t(1)), s(t(2)), s(t(3))});
}

Polynomial apply_perm(const Polynomial& p, const Permutation& sigma) {
    Polynomial r;
    for (const auto& [e, c] : p.terms()) {
        Exponents moved{};
        for (int t = 1; t <= 3; ++t) {
            moved[static_cast<std::size_t>(sigma(t) - 1)] = e[static_cast<std::size_t>(t - 1)];
        }
        r.add_term(moved, c);
    }
    return r;
}

Polynomial mono_sym(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("mono_sym needs non-negative exponents");
    if (i == j) return Polynomial::monomial({0, i, i});
    return Polynomial::monomial({0, i, j}) + Polynomial::monomial({0, j, i});
}

Polynomial elementary(int k) {
    switch (k) {
        case 1:
            return Polynomial::monomial({1, 0, 0}) + Polynomial::monomial({0, 1, 0}) +
                   Polynomial::monomial({0, 0, 1});
        case 2:
            return Polynomial::monomial({1, 1, 0}) + Polynomial::monomial({1, 0, 1}) +
                   Polynomial::monomial({0, 1, 1});
        case 3:
            return Polynomial::monomial({1, 1, 1});
        default:
            throw std::invalid_argument("elementary symmetric index must be 1, 2 or 3, got " +
                                        std::to_string(k));
    }
}

Polynomial vandermonde_power(int p) {
    const auto x1 = Polynomial::variable(1), x2 = Polynomial::variable(2), x3 = Polynomial::variable(3);
    return pow((x1 - x2) * (x1 - x3) * (x2 - x3), p);
}

std::vector<Exponents> monomials_of_degree(int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

}  // namespace quasi3
