#include "quasi3/harness.hpp"

#include "quasi3/basis.hpp"
#include "quasi3/format.hpp"
#include "quasi3/group_algebra.hpp"
#include "quasi3/linalg.hpp"
#include "quasi3/linsys.hpp"
#include "quasi3/quasi.hpp"

#include <array>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace quasi3 {

long Rng::uniform(long lo, long hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % range + 1) % range;
    std::uint64_t draw = engine_();
    while (draw > limit) draw = engine_();
    return lo + static_cast<long>(draw % range);
}

Polynomial random_polynomial(Rng& rng, int max_degree, int max_terms) {
    Polynomial p;
    const long terms = rng.uniform(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        const int deg = static_cast<int>(rng.uniform(0, max_degree));
        const int a = static_cast<int>(rng.uniform(0, deg));
        const int b = static_cast<int>(rng.uniform(0, deg - a));
        p.add_term({a, b, deg - a - b}, Rational(rng.uniform(-9, 9)));
    }
    return p;
}

std::vector<Thm2Params> thm2_grid(int max_coord) {
    std::vector<Thm2Params> out;
    std::set<std::tuple<int, int, int, int, int, int>> seen;
    for (int n = 1; n <= 3; ++n)
        for (int b = 1; b <= max_coord; ++b)
            for (int d = 1; d <= max_coord; ++d)
                for (int c = -d; c + n * d <= max_coord; ++c)
                    for (int a = -b; a + n * b <= max_coord; ++a)
                        for (int barrier = 0; barrier <= 2 * max_coord + 1; ++barrier) {
                            // Geometry key: n, first start, start step, first end, end step, barrier.
                            const auto key = std::make_tuple(n, c + d, n > 1 ? d : 0, a + b, n > 1 ? b : 0, barrier);
                            if (!seen.insert(key).second) continue;
                            out.push_back({a, b, c, d, barrier - c, n});
                        }
    return out;
}

std::vector<Thm1Params> block_thm1_instances(int max_m) {
    std::vector<Thm1Params> out;
    for (int m = 1; m <= max_m; ++m) {
        for (int d : {3 * m + 1, 3 * m + 2}) {
            for (int f = 1; f <= m; ++f) out.push_back({d + 2 - f, -1, 2 * m + 1, -1, -2, f});
            out.push_back({d - m + 1, -1, 2 * m + 1, -1, -2, m});
        }
    }
    return out;
}

Thm1Params random_thm1(Rng& rng) {
    auto step = [&rng] {
        const int v = static_cast<int>(rng.uniform(1, 3));
        return rng.uniform(0, 1) == 0 ? -v : v;
    };
    Thm1Params p{};
    p.C = static_cast<int>(rng.uniform(-2, 14));
    p.D = static_cast<int>(rng.uniform(-3, 10));
    p.E = static_cast<int>(rng.uniform(-3, 12));
    p.alpha = step();
    p.beta = step();
    p.k = static_cast<int>(rng.uniform(1, 3));
    return p;
}

Thm2Params random_thm2(Rng& rng) {
    Thm2Params p{};
    p.n = static_cast<int>(rng.uniform(1, 3));
    p.b = static_cast<int>(rng.uniform(1, 3));
    p.d = static_cast<int>(rng.uniform(1, 3));
    p.c = static_cast<int>(rng.uniform(-p.d, 12 - p.n * p.d));
    p.a = static_cast<int>(rng.uniform(-p.b, 12 - p.n * p.b));
    p.e = static_cast<int>(rng.uniform(0, 25)) - p.c;
    return p;
}

namespace {

nlohmann::json points(const std::vector<Point>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ps) out.push_back({p.x, p.y});
    return out;
}

nlohmann::json family_json(const FamilyProblem& fp, const std::optional<Integer>& count) {
    return {{"starts", points(fp.starts)},
            {"ends", points(fp.ends)},
            {"barrier", fp.barrier ? nlohmann::json(*fp.barrier) : nlohmann::json()},
            {"family_count", count ? nlohmann::json(count->to_string()) : nlohmann::json()}};
}

}  // namespace

nlohmann::json to_json(const Thm1Report& r) {
    nlohmann::json j = {{"theorem", "thm1"},
                        {"params", {{"C", r.C}, {"D", r.D}, {"E", r.E}, {"alpha", r.alpha}, {"beta", r.beta}, {"k", r.k}}},
                        {"matrix", matrix_to_json(r.matrix)},
                        {"lhs", r.lhs.to_string()},
                        {"prefactor", r.verdict == Verdict::inapplicable && r.note.find("denominator") != std::string::npos
                                          ? nlohmann::json()
                                          : nlohmann::json(r.prefactor.to_string())},
                        {"verdict", to_string(r.verdict)},
                        {"note", r.note}};
    j.update(family_json(r.family, r.family_count));
    return j;
}

nlohmann::json to_json(const Thm2Report& r) {
    nlohmann::json j = {{"theorem", "thm2"},
                        {"params", {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e}, {"n", r.n}}},
                        {"matrix", matrix_to_json(r.matrix)},
                        {"det", r.det.to_string()},
                        {"verdict", to_string(r.verdict)},
                        {"note", r.note}};
    j.update(family_json(r.family, r.family_count));
    return j;
}

nlohmann::json identity_sweep(std::uint64_t seed, int trials) {
    Rng rng(seed);
    nlohmann::json instances = nlohmann::json::array();
    std::map<std::string, std::map<std::string, int>> summary;
    for (int t = 0; t < trials; ++t) {
        if (t % 2 == 0) {
            const auto p = random_thm2(rng);
            const auto r = verify_thm2(p.a, p.b, p.c, p.d, p.e, p.n);
            ++summary["thm2"][to_string(r.verdict)];
            instances.push_back(to_json(r));
        } else {
            const auto p = random_thm1(rng);
            const auto r = verify_thm1(p.C, p.D, p.E, p.alpha, p.beta, p.k);
            ++summary["thm1"][to_string(r.verdict)];
            instances.push_back(to_json(r));
        }
    }
    const bool ok = summary["thm1"]["fail"] == 0 && summary["thm2"]["fail"] == 0;
    return {{"seed", seed}, {"trials", trials}, {"summary", summary}, {"ok", ok}, {"instances", instances}};
}

namespace {

using Check = std::pair<bool, std::string>;

Check golden_polynomials() {
    const std::pair<Polynomial, Polynomial> cases[] = {
        {build_A1(1), parse_polynomial_text("x1^4 - 2*x1^3*(x2+x3) + 6*x1^2*(x2*x3)")},
        {build_A2(1), parse_polynomial_text("x1^5 - 5/3*x1^4*(x2+x3) + 10/3*x1^3*(x2*x3)")},
        {build_A1(2), parse_polynomial_text("x1^7 - 7/2*x1^6*(x2+x3) + 14*x1^5*(x2*x3) + 7/2*x1^5*(x2^2+x3^2)"
                                            " - 35/2*x1^4*(x2^2*x3 + x2*x3^2) + 35*x1^3*x2^2*x3^2")},
        {build_A2(2), parse_polynomial_text("x1^8 - 16/5*x1^7*(x2+x3) + 56/5*x1^6*(x2*x3) + 14/5*x1^6*(x2^2+x3^2)"
                                            " - 56/5*x1^5*(x2^2*x3 + x2*x3^2) + 14*x1^4*x2^2*x3^2")},
    };
    const char* names[] = {"A1(m=1)", "A2(m=1)", "A1(m=2)", "A2(m=2)"};
    std::string detail;
    bool ok = true;
    for (std::size_t t = 0; t < 4; ++t) {
        const bool eq = cases[t].first == cases[t].second;
        ok = ok && eq;
        detail += std::string(names[t]) + (eq ? " ok; " : " MISMATCH; ");
    }
    return {ok, detail};
}

Check golden_matrix() {
    IntegerMatrix printed(9, 9);
    const long values[9][9] = {
        {252, 378, 126, 308, 182, 56, 273, 147, 75}, {0, 126, 56, 252, 133, 42, 378, 174, 75},
        {0, 84, 56, 168, 147, 68, 252, 184, 125},    {0, 0, 0, 56, 21, 6, 168, 63, 19},
        {0, 0, 0, 56, 35, 20, 168, 105, 66},         {0, 0, 0, 8, 6, 4, 21, 15, 11},
        {0, 0, 0, 0, 0, 0, 21, 6, 1},                {0, 0, 0, 0, 0, 0, 35, 20, 10},
        {0, 0, 0, 0, 0, 0, 7, 5, 3}};
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) printed(r, c) = values[r][c];
    const std::vector<RowLabel> rows{{0, 5}, {1, 5}, {1, 3}, {2, 5}, {2, 3}, {2, 1}, {3, 5}, {3, 3}, {3, 1}};
    const std::vector<ColLabel> cols{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}};

    const auto bm = restrict_Bm(build_system(3, 10));
    const bool matrix_ok = bm.rows == rows && bm.cols == cols && bm.entries == printed;

    auto mat = [](std::initializer_list<std::initializer_list<long>> v) {
        IntegerMatrix m(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.begin()->size()));
        Eigen::Index r = 0;
        for (const auto& row : v) {
            Eigen::Index c = 0;
            for (long x : row) m(r, c++) = x;
            ++r;
        }
        return m;
    };
    const std::vector<IntegerMatrix> blocks{
        mat({{252}}),
        mat({{126, 56}, {84, 56}}),
        mat({{56, 21, 6}, {56, 35, 20}, {8, 6, 4}}),
        mat({{21, 6, 1}, {35, 20, 10}, {7, 5, 3}}),
    };
    const auto got = extract_blocks(3, 10);
    bool blocks_ok = got.blocks.size() == blocks.size();
    for (std::size_t t = 0; blocks_ok && t < blocks.size(); ++t) blocks_ok = got.blocks[t].entries == blocks[t];
    return {matrix_ok && blocks_ok, std::string("9x9 matrix ") + (matrix_ok ? "matches" : "DIFFERS") +
                                        ", blocks " + (blocks_ok ? "match" : "DIFFER")};
}

Check uniqueness() {
    bool ok = true;
    std::ostringstream detail;
    for (int m = 0; m <= 6; ++m) {
        for (int d : {3 * m + 1, 3 * m + 2}) {
            const auto sys = build_system(m, d);
            const auto dim = nullspace(sys).basis.size();
            bool nonsingular = true;
            if (m >= 1) nonsingular = !det_exact(restrict_Bm(sys).entries).is_zero();
            if (dim != 1 || !nonsingular) {
                ok = false;
                detail << "m=" << m << " d=" << d << " nullity=" << dim << " det(B_m)!=0:" << nonsingular << "; ";
            }
        }
    }
    if (ok) detail << "nullity 1 and det(B_m) != 0 for m=0..6, both degrees";
    return {ok, detail.str()};
}

Check quasiinvariance() {
    bool ok = true;
    std::ostringstream detail;
    for (int m = 0; m <= 6; ++m) {
        const auto r = build_basis(m, VerifyLevel::quasi);
        const bool good = r.degrees_ok && *r.quasi[1] && *r.quasi[3] && *r.s23_invariant;
        if (!good) {
            ok = false;
            detail << "m=" << m << " failed; ";
        }
    }
    if (ok) detail << "A1, A2 quasiinvariant and s23-invariant, degrees match for m=0..6";
    return {ok, detail.str()};
}

Check hilbert_oracle() {
    const auto series = qi_hilbert_coefficients(1, 9);
    std::ostringstream detail;
    bool ok = true;
    for (int d = 0; d <= 9; ++d) {
        const auto dim = static_cast<long>(graded_qi_basis(1, d).size());
        detail << dim << (d < 9 ? "," : "");
        if (dim != series[static_cast<std::size_t>(d)]) ok = false;
    }
    detail << " (series:";
    for (long v : series) detail << ' ' << v;
    detail << ")";
    return {ok, detail.str()};
}

Check quotient_independence() {
    const auto r = build_basis(1, VerifyLevel::full);
    const bool m1 = *r.independent_3m1 && *r.independent_3m2 && *r.delta_not_in_ideal;
    const auto r0 = build_basis(0, VerifyLevel::degrees);
    RationalMatrix images(6, 6);
    for (int t = 0; t < 6; ++t) images.row(t) = coinvariant_nf(r0.elements[static_cast<std::size_t>(t)]).transpose();
    const auto det0 = det_exact(images);
    return {m1 && !det0.is_zero(),
            std::string("m=1 independence ") + (m1 ? "holds" : "FAILS") + "; m=0 coinvariant det = " + det0.to_string()};
}

// The product-of-path-counts bound overestimates the DFS work by orders of
// magnitude on the largest grid cells; this budget lets every cell finish.
constexpr std::uint64_t kGridBudget = 20'000'000'000ULL;

Check thm2_grid_check() {
    int pass = 0, fail = 0, unchecked = 0, inapplicable = 0;
    std::string first_failure;
    for (const auto& p : thm2_grid(12)) {
        const auto r = verify_thm2(p.a, p.b, p.c, p.d, p.e, p.n, kGridBudget);
        switch (r.verdict) {
            case Verdict::pass: ++pass; break;
            case Verdict::fail:
                if (fail++ == 0) first_failure = to_json(r).dump();
                break;
            case Verdict::unchecked: ++unchecked; break;
            case Verdict::inapplicable: ++inapplicable; break;
        }
    }
    std::ostringstream detail;
    detail << pass << " pass, " << fail << " fail, " << unchecked << " over budget, " << inapplicable
           << " inapplicable";
    if (fail) detail << "; first failure " << first_failure;
    return {fail == 0 && unchecked == 0 && pass >= 200, detail.str()};
}

Check thm1_check() {
    std::ostringstream detail;
    bool ok = true;
    const auto special = verify_thm1(10, -1, 7, -1, -2, 2);
    const bool special_ok = special.verdict == Verdict::pass && special.lhs == Integer(2352) &&
                            special.prefactor == Rational(1176) && special.family_count == Integer(2);
    ok = ok && special_ok;
    detail << "B^{2,3}: " << special.lhs << " = " << special.prefactor << " x "
           << (special.family_count ? special.family_count->to_string() : "?") << "; ";

    int block_pass = 0;
    for (const auto& p : block_thm1_instances(4)) {
        const auto r = verify_thm1(p.C, p.D, p.E, p.alpha, p.beta, p.k);
        if (r.verdict == Verdict::pass) ++block_pass;
        else ok = false;
    }
    detail << block_pass << "/" << block_thm1_instances(4).size() << " block instances; ";

    // Small k is applicable far more often, so passes are collected per k.
    constexpr int kPerK = 20;
    Rng rng(20040913);
    std::array<int, 4> pass_by_k{};
    int fail = 0;
    auto done = [&] { return pass_by_k[1] >= kPerK && pass_by_k[2] >= kPerK && pass_by_k[3] >= kPerK; };
    for (int draw = 0; draw < 200000 && !done(); ++draw) {
        const auto p = random_thm1(rng);
        if (pass_by_k[static_cast<std::size_t>(p.k)] >= kPerK) continue;
        const auto r = verify_thm1(p.C, p.D, p.E, p.alpha, p.beta, p.k);
        if (r.verdict == Verdict::pass) ++pass_by_k[static_cast<std::size_t>(p.k)];
        if (r.verdict == Verdict::fail) ++fail;
    }
    const int pass = pass_by_k[1] + pass_by_k[2] + pass_by_k[3];
    ok = ok && fail == 0 && done();
    detail << pass << " sampled pass (k=1,2,3: " << pass_by_k[1] << "," << pass_by_k[2] << "," << pass_by_k[3]
           << "), " << fail << " fail";
    return {ok, detail.str()};
}

Check reflection_check() {
    int compared = 0, separated = 0;
    bool ok = true;
    for (int s = 0; s <= 14; ++s) {
        for (int y = 0; y <= 14; ++y) {
            for (int barrier = -1; barrier <= 30; ++barrier) {
                const auto dp = count_paths_dp({{s, s}, {0, y}, barrier});
                if (reflection_applies(s, y, barrier)) {
                    ++compared;
                    if (dp != count_paths_formula(y, 0, s, 0, barrier - s, 1, 1)) ok = false;
                } else {
                    ++separated;
                    if (!dp.is_zero()) ok = false;
                }
            }
        }
    }
    return {ok, std::to_string(compared) + " formula/DP comparisons, " + std::to_string(separated) +
                    " separating barriers with zero paths"};
}

Check group_identities() {
    const bool algebra = verify_identities_in_algebra().all_passed();
    Rng rng(7);
    std::vector<Polynomial> samples;
    for (int t = 0; t < 100; ++t) samples.push_back(random_polynomial(rng, 8, 12));
    const auto report = verify_identities(samples);
    return {algebra && report.all_passed(),
            std::string("algebra level ") + (algebra ? "ok" : "FAILED") + "; " + std::to_string(report.checks.size()) +
                " sample checks " + (report.all_passed() ? "ok" : "FAILED")};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> criteria{
        {1, "golden polynomials A1, A2 for m=1,2", 1.0, golden_polynomials},
        {2, "golden 9x9 matrix B_3 and its blocks", 1.0, golden_matrix},
        {3, "one-dimensional null space, nonsingular B_m (m=0..6)", 30.0, uniqueness},
        {4, "quasiinvariance, s23-invariance and degrees (m=0..6)", 60.0, quasiinvariance},
        {5, "graded dimensions of QI_1 match the Hilbert series (d=0..9)", 60.0, hilbert_oracle},
        {6, "quotient independence (m=1) and coinvariant determinant (m=0)", 120.0, quotient_independence},
        {7, "Thm2 determinant = non-intersecting family count (grid)", 300.0, thm2_grid_check},
        {8, "Thm1 factored identity (block and sampled instances)", 300.0, thm1_check},
        {9, "reflection formula = DP path count (coordinates <= 14)", 30.0, reflection_check},
        {10, "group algebra identities (element level and 100 samples)", 10.0, group_identities},
    };
    return criteria;
}

CriterionResult run_criterion(const Criterion& c) {
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = c.limit_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = c.check();
        r.passed = ok;
        r.detail = std::move(detail);
    } catch (const std::exception& err) {
        r.passed = false;
        r.detail = std::string("exception: ") + err.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit_seconds) {
        r.passed = false;
        r.detail += " (over time limit)";
    }
    return r;
}

}  // namespace quasi3
