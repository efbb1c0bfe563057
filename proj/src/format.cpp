#include "quasi3/format.hpp"

#include "quasi3/linsys.hpp"

#include <cctype>

namespace quasi3 {

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.to_string()}});
    }
    return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("e") || !term.contains("c")) {
            throw ParseError("each polynomial term needs \"e\" and \"c\" fields");
        }
        const auto& e = term["e"];
        if (!e.is_array() || e.size() != 3) throw ParseError("\"e\" must be an array of three exponents");
        Exponents ex{};
        for (std::size_t t = 0; t < 3; ++t) {
            if (!e[t].is_number_integer() || e[t].get<long>() < 0 || e[t].get<long>() > 100000) {
                throw ParseError("exponents must be non-negative integers");
            }
            ex[t] = e[t].get<int>();
        }
        const auto& c = term["c"];
        try {
            if (c.is_string()) {
                p.add_term(ex, Rational::parse(c.get<std::string>()));
            } else if (c.is_number_integer()) {
                p.add_term(ex, Rational(c.get<long>()));
            } else {
                throw ParseError("coefficient must be a \"num/den\" string or an integer");
            }
        } catch (const std::invalid_argument& err) {
            throw ParseError(std::string("bad coefficient: ") + err.what());
        } catch (const std::domain_error& err) {
            throw ParseError(std::string("bad coefficient: ") + err.what());
        }
    }
    return p;
}

namespace {

std::string monomial_text(const Exponents& e, const char* join, bool latex) {
    std::string s;
    for (int v = 0; v < 3; ++v) {
        const int k = e[static_cast<std::size_t>(v)];
        if (k == 0) continue;
        if (!s.empty()) s += join;
        s += latex ? "x_" + std::to_string(v + 1) : "x" + std::to_string(v + 1);
        if (k > 1) s += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    }
    return s;
}

std::string latex_number(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    return "{" + r.num().to_string() + " \\over " + r.den().to_string() + "}";
}

// Joins signed pieces as "a - b + c".
void append_signed(std::string& out, const Rational& c, const std::string& body, bool latex, const char* mul) {
    const Rational mag = abs(c);
    if (out.empty()) {
        if (c.sign() < 0) out += "-";
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (body.empty()) {
        out += latex ? latex_number(mag) : mag.to_string();
    } else if (unit) {
        out += body;
    } else {
        out += (latex ? latex_number(mag) : mag.to_string()) + mul + body;
    }
}

}  // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) append_signed(out, c, monomial_text(e, "*", false), false, "*");
    return out;
}

std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) append_signed(out, c, monomial_text(e, "", true), true, "");
    return out;
}

std::string ansatz_latex(const Ansatz& a) {
    const auto cols = ansatz_columns(a.m);
    std::string out;
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const Rational& c = a.coefficients(static_cast<Eigen::Index>(t));
        if (c.is_zero()) continue;
        const auto [i, j] = cols[t];
        std::string body = monomial_text({a.d - i - j, 0, 0}, "", true);
        if (i == j) {
            if (i > 0) body += "(" + monomial_text({0, i, i}, "", true) + ")";
        } else {
            body += "(" + monomial_text({0, i, j}, "", true) + "+" + monomial_text({0, j, i}, "", true) + ")";
        }
        append_signed(out, c, body, true, "");
    }
    return out.empty() ? "0" : out;
}

namespace {

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial text, position " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        const auto begin = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (begin == pos_) fail("expected a number");
        return std::string(s_.substr(begin, pos_ - begin));
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (eat('+')) {
                p += term();
            } else if (eat('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p *= factor();
        return p;
    }

    Polynomial factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Polynomial base = atom();
        if (eat('^')) {
            const auto e = digits();
            if (e.size() > 4) fail("exponent too large");
            base = pow(base, std::stoi(e));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '3') fail("variables are x1, x2, x3");
            return Polynomial::variable(s_[pos_++] - '0');
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = Integer::parse(digits());
            if (eat('/')) {
                Integer den = Integer::parse(digits());
                if (den.is_zero()) fail("zero denominator");
                return Polynomial(Rational(num, den));
            }
            return Polynomial(Rational(num));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial_text(std::string_view text) { return TextParser(text).parse(); }

Polynomial parse_polynomial(std::string_view content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty polynomial input");
    if (content[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& err) {
            throw ParseError(std::string("malformed polynomial JSON: ") + err.what());
        }
        return polynomial_from_json(j);
    }
    return parse_polynomial_text(content);
}

}  // namespace quasi3
