#include "quasi3/quasi.hpp"

#include "quasi3/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace quasi3 {

namespace {

std::size_t idx(int variable) { return static_cast<std::size_t>(variable - 1); }

void check_pair(int i, int j) {
    if (i == j || i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::invalid_argument("variable pair must be two distinct indices in {1,2,3}");
    }
}

}  // namespace

std::optional<Polynomial> divide_by_difference(const Polynomial& p, int i, int j) {
    check_pair(i, j);
    if (p.is_zero()) return Polynomial();

    // p = sum_t c_t x_i^t with c_t free of x_i; Horner-style synthetic division
    // by (x_i - x_j).
    int top = 0;
    for (const auto& [e, c] : p.terms()) top = std::max(top, e[idx(i)]);
    std::vector<Polynomial> coeff(static_cast<std::size_t>(top + 1));
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        rest[idx(i)] = 0;
        coeff[static_cast<std::size_t>(e[idx(i)])].add_term(rest, c);
    }
    if (top == 0) return std::nullopt;

    const Polynomial xj = Polynomial::variable(j);
    std::vector<Polynomial> q(static_cast<std::size_t>(top));
    q[static_cast<std::size_t>(top - 1)] = coeff[static_cast<std::size_t>(top)];
    for (int t = top - 1; t >= 1; --t) {
        q[static_cast<std::size_t>(t - 1)] = coeff[static_cast<std::size_t>(t)] + xj * q[static_cast<std::size_t>(t)];
    }
    if (!(coeff[0] + xj * q[0]).is_zero()) return std::nullopt;

    Polynomial quotient;
    for (int t = 0; t < top; ++t) {
        for (const auto& [e, c] : q[static_cast<std::size_t>(t)].terms()) {
            Exponents shifted = e;
            shifted[idx(i)] += t;
            quotient.add_term(shifted, c);
        }
    }
    return quotient;
}

bool divisible_power(const Polynomial& p, int i, int j, int power) {
    check_pair(i, j);
    if (power < 0) throw std::invalid_argument("divisible_power needs a non-negative power");
    Polynomial cur = p;
    for (int t = 0; t < power; ++t) {
        if (cur.is_zero()) return true;
        auto next = divide_by_difference(cur, i, j);
        if (!next) return false;
        cur = std::move(*next);
    }
    return true;
}

std::optional<int> largest_dividing_power(const Polynomial& p, int i, int j) {
    check_pair(i, j);
    if (p.is_zero()) return std::nullopt;
    int power = 0;
    Polynomial cur = p;
    while (auto next = divide_by_difference(cur, i, j)) {
        cur = std::move(*next);
        ++power;
    }
    return power;
}

QuasiReport is_quasiinvariant(const Polynomial& p, int m) {
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    QuasiReport report;
    report.m = m;
    const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
    for (std::size_t t = 0; t < 3; ++t) {
        const auto [i, j] = pairs[t];
        const Polynomial diff = p - apply_perm(p, Permutation::transposition(i, j));
        auto& v = report.pairs[t];
        v.i = i;
        v.j = j;
        v.largest_power = largest_dividing_power(diff, i, j);
        v.divisible = !v.largest_power || *v.largest_power >= 2 * m + 1;
    }
    return report;
}

CoinvariantVector coinvariant_nf(const Polynomial& p) {
    // Work in x2, x3 after x1 -> -(x2 + x3); keys are (b, c), largest b first.
    std::map<std::pair<int, int>, Rational, std::greater<>> work;
    auto add = [&work](int b, int c, const Rational& v) {
        if (v.is_zero() || c >= 3) return;  // x3^3 is in the ideal
        auto [it, inserted] = work.try_emplace({b, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& [e, c] : p.terms()) {
        const Rational sign = e[0] % 2 == 0 ? Rational(1) : Rational(-1);
        for (int t = 0; t <= e[0]; ++t) {
            add(e[1] + t, e[2] + e[0] - t, sign * c * Rational(binom(e[0], t)));
        }
    }
    // x2^2 -> -(x2 x3 + x3^2) until every x2-exponent is at most 1.
    while (!work.empty() && work.begin()->first.first >= 2) {
        const auto [key, v] = *work.begin();
        work.erase(work.begin());
        const auto [b, c] = key;
        add(b - 1, c + 1, -v);
        add(b - 2, c + 2, -v);
    }
    CoinvariantVector out = CoinvariantVector::Constant(Rational(0));
    const std::array<std::pair<int, int>, 6> basis{{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}};
    for (std::size_t t = 0; t < basis.size(); ++t) {
        auto it = work.find(basis[t]);
        if (it != work.end()) out(static_cast<Eigen::Index>(t)) = it->second;
    }
    return out;
}

RationalVector coordinates(const Polynomial& p, const std::vector<Exponents>& monomials) {
    std::map<Exponents, Eigen::Index> position;
    for (std::size_t t = 0; t < monomials.size(); ++t) position[monomials[t]] = static_cast<Eigen::Index>(t);
    RationalVector v = RationalVector::Constant(static_cast<Eigen::Index>(monomials.size()), Rational(0));
    for (const auto& [e, c] : p.terms()) {
        auto it = position.find(e);
        if (it == position.end()) throw std::invalid_argument("polynomial has a monomial outside the coordinate list");
        v(it->second) = c;
    }
    return v;
}

std::vector<Polynomial> graded_qi_basis(int m, int deg) {
    if (m < 0 || deg < 0) throw std::invalid_argument("graded_qi_basis needs m >= 0 and deg >= 0");
    const auto monomials = monomials_of_degree(deg);
    const int order = 2 * m + 1;

    // Substituting x_i = x_j + y into (1 - s_ij) x^e, the coefficient of
    // y^r x_j^{deg - e_k - r} x_k^{e_k} is binom(e_i, r) - binom(e_j, r).
    // Divisibility by (x_i - x_j)^order means all of these vanish for r < order.
    const std::array<std::array<int, 3>, 3> triples{{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};
    const int rows_per_pair = order * (deg + 1);
    IntegerMatrix constraints = IntegerMatrix::Constant(3 * rows_per_pair, static_cast<Eigen::Index>(monomials.size()), Integer(0));
    for (std::size_t t = 0; t < triples.size(); ++t) {
        const auto [i, j, k] = triples[t];
        for (std::size_t col = 0; col < monomials.size(); ++col) {
            const auto& e = monomials[col];
            for (int r = 0; r < order; ++r) {
                const Integer v = binom(e[idx(i)], r) - binom(e[idx(j)], r);
                if (v.is_zero()) continue;
                const Eigen::Index row = static_cast<Eigen::Index>(t) * rows_per_pair + r * (deg + 1) + e[idx(k)];
                constraints(row, static_cast<Eigen::Index>(col)) = v;
            }
        }
    }

    std::vector<Polynomial> basis;
    for (const auto& v : nullspace_exact(constraints)) {
        Polynomial p;
        for (Eigen::Index col = 0; col < v.size(); ++col) p.add_term(monomials[static_cast<std::size_t>(col)], v(col));
        basis.push_back(std::move(p));
    }
    return basis;
}

std::vector<Polynomial> ideal_part_generators(int m, int d) {
    std::vector<Polynomial> gens;
    for (int k = 1; k <= 3; ++k) {
        if (d - k < 0) continue;
        const Polynomial ek = elementary(k);
        for (const auto& q : graded_qi_basis(m, d - k)) gens.push_back(ek * q);
    }
    return gens;
}

namespace {

RationalMatrix stack(const std::vector<Polynomial>& polys, const std::vector<Exponents>& monomials) {
    RationalMatrix out(static_cast<Eigen::Index>(polys.size()), static_cast<Eigen::Index>(monomials.size()));
    for (std::size_t r = 0; r < polys.size(); ++r) {
        out.row(static_cast<Eigen::Index>(r)) = coordinates(polys[r], monomials).transpose();
    }
    return out;
}

int common_degree(const std::vector<Polynomial>& polys) {
    std::optional<int> d;
    for (const auto& p : polys) {
        if (!p.is_homogeneous()) throw std::invalid_argument("ideal-part test needs homogeneous input");
        if (p.is_zero()) continue;
        if (d && *d != *p.degree()) throw std::invalid_argument("ideal-part test needs a single common degree");
        d = p.degree();
    }
    return d.value_or(0);
}

}  // namespace

bool in_ideal_part(const Polynomial& p, int m) {
    const int d = common_degree({p});
    if (p.is_zero()) return true;
    if (d == 0) return false;
    const auto monomials = monomials_of_degree(d);
    auto gens = ideal_part_generators(m, d);
    const auto base_rank = rank_exact(stack(gens, monomials));
    gens.push_back(p);
    return rank_exact(stack(gens, monomials)) == base_rank;
}

bool independent_modulo_ideal_part(const std::vector<Polynomial>& polys, int m) {
    const int d = common_degree(polys);
    const auto monomials = monomials_of_degree(d);
    auto gens = d == 0 ? std::vector<Polynomial>{} : ideal_part_generators(m, d);
    const auto base_rank = rank_exact(stack(gens, monomials));
    gens.insert(gens.end(), polys.begin(), polys.end());
    return rank_exact(stack(gens, monomials)) == base_rank + static_cast<Eigen::Index>(polys.size());
}

std::vector<long> qi_hilbert_coefficients(int m, int max_degree) {
    if (m < 0 || max_degree < 0) throw std::invalid_argument("qi_hilbert_coefficients needs m, max_degree >= 0");
    std::vector<long> series(static_cast<std::size_t>(max_degree + 1), 0);
    for (int d : quotient_degrees(m))
        if (d <= max_degree) series[static_cast<std::size_t>(d)] += 1;
    // Multiply by 1/(1 - q^part) as a running sum with stride part.
    for (int part = 1; part <= 3; ++part)
        for (int d = part; d <= max_degree; ++d)
            series[static_cast<std::size_t>(d)] += series[static_cast<std::size_t>(d - part)];
    return series;
}

std::array<int, 6> quotient_degrees(int m) { return {0, 3 * m + 1, 3 * m + 1, 3 * m + 2, 3 * m + 2, 6 * m + 3}; }

}  // namespace quasi3
