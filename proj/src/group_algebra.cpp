#include "quasi3/group_algebra.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace quasi3 {

GroupAlgebraElement::GroupAlgebraElement(const Permutation& sigma, const Rational& c) : GroupAlgebraElement() {
    coeffs_(sigma.index()) = c;
}

int GroupAlgebraElement::support_size() const {
    int n = 0;
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_(i).is_zero()) ++n;
    return n;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    for (Eigen::Index i = 0; i < 6; ++i) coeffs_(i) += o.coeffs_(i);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    for (Eigen::Index i = 0; i < 6; ++i) coeffs_(i) -= o.coeffs_(i);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& r) {
    for (Eigen::Index i = 0; i < 6; ++i) coeffs_(i) *= r;
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& g, const GroupAlgebraElement& h) {
    GroupAlgebraElement r;
    const auto& elems = Permutation::all();
    for (const auto& s : elems) {
        const Rational& gs = g.coeffs_(s.index());
        if (gs.is_zero()) continue;
        for (const auto& t : elems) {
            const Rational& ht = h.coeffs_(t.index());
            if (ht.is_zero()) continue;
            r.coeffs_((s * t).index()) += gs * ht;
        }
    }
    return r;
}

namespace {

GroupAlgebraElement perm(int i, int j) { return GroupAlgebraElement(Permutation::transposition(i, j)); }

}  // namespace

GroupAlgebraElement make_element(std::string_view name) {
    const auto one = GroupAlgebraElement::one();
    if (name == "S3sym" || name == "S3alt") {
        const bool alt = name == "S3alt";
        GroupAlgebraElement g;
        for (const auto& s : Permutation::all()) {
            g += GroupAlgebraElement(s, Rational(Integer(alt ? s.sign() : 1), Integer(6)));
        }
        return g;
    }
    if (name == "pi1") return Rational(Integer(1), Integer(3)) * ((one + perm(2, 3)) * (one - perm(1, 2)));
    if (name == "pi2") return Rational(Integer(1), Integer(3)) * ((one + perm(1, 2)) * (one - perm(2, 3)));
    throw std::invalid_argument("unknown group algebra element '" + std::string(name) +
                                "' (expected S3sym, S3alt, pi1 or pi2)");
}

Polynomial apply(const GroupAlgebraElement& g, const Polynomial& p) {
    Polynomial r;
    for (const auto& s : Permutation::all()) {
        const Rational& c = g.coefficient(s);
        if (!c.is_zero()) r += c * apply_perm(p, s);
    }
    return r;
}

bool IdentityReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

namespace {

struct Elements {
    GroupAlgebraElement one = GroupAlgebraElement::one();
    GroupAlgebraElement sym = make_element("S3sym");
    GroupAlgebraElement alt = make_element("S3alt");
    GroupAlgebraElement pi1 = make_element("pi1");
    GroupAlgebraElement pi2 = make_element("pi2");
    GroupAlgebraElement s12 = perm(1, 2);
    GroupAlgebraElement s13 = perm(1, 3);
    GroupAlgebraElement s23 = perm(2, 3);
};

// Each identity as a pair (lhs, rhs) of operator strings, written as
// functions of a generic "apply" so the same table drives both checks.
template <typename T>
using Op = std::function<T(const GroupAlgebraElement&, const T&)>;

template <typename T>
std::vector<std::pair<T, T>> identity_sides(const Elements& e, const T& x, const Op<T>& act, const T& zero) {
    const T p1 = act(e.pi1, x);
    const T p2 = act(e.pi2, x);
    return {
        {act(e.pi1, p1), p1},
        {act(e.pi2, p2), p2},
        {act(e.alt, p1), zero},
        {act(e.pi1, p2), zero},
        {act(e.pi2, p1), zero},
        {act(e.sym, x) + p1 + p2 + act(e.alt, x), x},
        {act(e.s23, p1), p1},
        {act(e.pi2, act(e.s12, p1)), -act(e.s13, p1)},
    };
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names{
        "pi1^2 = pi1",
        "pi2^2 = pi2",
        "[S3]' pi1 = 0",
        "pi1 pi2 = 0",
        "pi2 pi1 = 0",
        "[S3] + pi1 + pi2 + [S3]' = 1",
        "s23 pi1 = pi1",
        "pi2 s12 pi1 = -s13 pi1",
    };
    return names;
}

IdentityReport verify_identities(const std::vector<Polynomial>& samples) {
    if (samples.empty()) throw std::invalid_argument("verify_identities needs at least one sample");
    const Elements e;
    const Op<Polynomial> act = [](const GroupAlgebraElement& g, const Polynomial& p) { return apply(g, p); };
    IdentityReport report;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto sides = identity_sides<Polynomial>(e, samples[s], act, Polynomial());
        for (std::size_t k = 0; k < sides.size(); ++k) {
            report.checks.push_back({identity_names()[k], s, sides[k].first == sides[k].second});
        }
    }
    return report;
}

IdentityReport verify_identities_in_algebra() {
    const Elements e;
    const Op<GroupAlgebraElement> act = [](const GroupAlgebraElement& g, const GroupAlgebraElement& h) {
        return g * h;
    };
    const auto sides = identity_sides<GroupAlgebraElement>(e, e.one, act, GroupAlgebraElement());
    IdentityReport report;
    for (std::size_t k = 0; k < sides.size(); ++k) {
        report.checks.push_back({identity_names()[k], 0, sides[k].first == sides[k].second});
    }
    return report;
}

}  // namespace quasi3
