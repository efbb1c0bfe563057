#include "quasi3/basis.hpp"
#include "quasi3/format.hpp"
#include "quasi3/harness.hpp"

#include <doctest.h>

using namespace quasi3;

TEST_CASE("JSON form") {
    const Polynomial p = parse_polynomial_text("x1^2*x3 - 1/2*x2 + 3");
    const auto j = to_json(p);
    CHECK(j.dump() == R"([{"c":"1","e":[2,0,1]},{"c":"-1/2","e":[0,1,0]},{"c":"3","e":[0,0,0]}])");
    CHECK(polynomial_from_json(j) == p);
    CHECK(parse_polynomial(R"([{"e":[1,0,0],"c":2}])") == parse_polynomial_text("2*x1"));
}

TEST_CASE("JSON and text round trips") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        const Polynomial p = random_polynomial(rng, 7, 10) * Rational(Integer(1), Integer(static_cast<long>(t + 1)));
        CHECK(polynomial_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
        CHECK(parse_polynomial_text(to_text(p)) == p);
    }
    CHECK(to_text(Polynomial()) == "0");
    CHECK(parse_polynomial_text("0").is_zero());
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x4"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("3/0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("[1,2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R"([{"e":[1,0],"c":"1"}])"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R"([{"e":[-1,0,0],"c":"1"}])"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R"([{"e":[1,0,0],"c":"1/0"}])"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R"({"e":[1,0,0]})"), ParseError);
}

TEST_CASE("text and LaTeX rendering") {
    const Polynomial p = parse_polynomial_text("x1^4 - 2*x1^3*(x2+x3) + 6*x1^2*x2*x3");
    CHECK(to_text(p) == "x1^4 - 2*x1^3*x2 - 2*x1^3*x3 + 6*x1^2*x2*x3");
    CHECK(to_latex(parse_polynomial_text("-1/2*x1^2 + x2")) == "-{1 \\over 2}x_1^{2} + x_2");
    CHECK(ansatz_latex(solve_ansatz(1, 4)) == "x_1^{4} - 2x_1^{3}(x_2+x_3) + 6x_1^{2}(x_2x_3)");
}

TEST_CASE("matrix rendering") {
    IntegerMatrix m(2, 2);
    m << 4, 5, 0, -3;
    CHECK(matrix_to_json(m).dump() == R"([["4","5"],["0","-3"]])");
    CHECK(matrix_to_text(m) == " 4  5\n 0 -3\n");
}

TEST_CASE("seeded sampling is reproducible") {
    Rng a(5), b(5);
    for (int t = 0; t < 20; ++t) CHECK(a.uniform(-100, 100) == b.uniform(-100, 100));
    CHECK(identity_sweep(9, 12).dump() == identity_sweep(9, 12).dump());
}
