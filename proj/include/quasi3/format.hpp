#pragma once

// Text, JSON and LaTeX forms of polynomials and matrices.

#include "quasi3/basis.hpp"
#include "quasi3/poly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasi3 {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [{"e":[a,b,c],"c":"num/den"}, ...] in GrlexDescending order.
nlohmann::json to_json(const Polynomial& p);
/// Inverse of to_json; repeated exponents are summed. Throws ParseError.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// "x1^4 - 2*x1^3*x2 + 5/3*x2*x3"; "0" for the zero polynomial.
std::string to_text(const Polynomial& p);

/// Parses the expression grammar
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+' | '-') factor | atom ('^' integer)?
///   atom   := integer ('/' integer)? | 'x1' | 'x2' | 'x3' | '(' expr ')'
/// Whitespace is ignored. Throws ParseError.
Polynomial parse_polynomial_text(std::string_view text);

/// JSON when the first non-blank character is '[', otherwise the text grammar.
Polynomial parse_polynomial(std::string_view content);

std::string to_latex(const Polynomial& p);

/// Grouped as coefficient x_1^{d-i-j} (m_[i,j]) per ansatz column, e.g.
/// "x_1^4 - 2x_1^3(x_2+x_3) + 6x_1^2(x_2x_3)".
std::string ansatz_latex(const Ansatz& a);

template <typename Derived>
nlohmann::json matrix_to_json(const Eigen::MatrixBase<Derived>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Right-aligned columns, one matrix row per line.
template <typename Derived>
std::string matrix_to_text(const Eigen::MatrixBase<Derived>& m) {
    std::size_t width = 1;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) width = std::max(width, m(r, c).to_string().size());
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const auto s = m(r, c).to_string();
            if (c > 0) out += ' ';
            out += std::string(width - s.size(), ' ') + s;
        }
        out += '\n';
    }
    return out;
}

}  // namespace quasi3
