#include "quasi3/harness.hpp"
#include "quasi3/paths.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace quasi3;

namespace {

// Every NORTH/WEST word from start to end, as the list of visited points.
void all_paths(Point at, Point end, std::vector<Point>& trail, std::vector<std::vector<Point>>& out) {
    trail.push_back(at);
    if (at == end) {
        out.push_back(trail);
    } else {
        if (at.x > end.x) all_paths({at.x - 1, at.y}, end, trail, out);
        if (at.y < end.y) all_paths({at.x, at.y + 1}, end, trail, out);
    }
    trail.pop_back();
}

std::vector<std::vector<Point>> paths_avoiding(Point s, Point e, std::optional<int> barrier) {
    std::vector<std::vector<Point>> all, kept;
    std::vector<Point> trail;
    if (e.x <= s.x && e.y >= s.y) all_paths(s, e, trail, all);
    for (auto& p : all) {
        bool ok = true;
        for (const auto& v : p) ok = ok && !(barrier && v.x + v.y == *barrier);
        if (ok) kept.push_back(std::move(p));
    }
    return kept;
}

long oracle_families(const FamilyProblem& fp) {
    std::vector<std::vector<std::vector<Point>>> choices;
    for (std::size_t t = 0; t < fp.starts.size(); ++t) choices.push_back(paths_avoiding(fp.starts[t], fp.ends[t], fp.barrier));
    long count = 0;
    std::vector<std::size_t> idx(choices.size(), 0);
    std::function<void(std::size_t, std::set<std::pair<int, int>>&)> rec = [&](std::size_t t, auto& used) {
        if (t == choices.size()) {
            ++count;
            return;
        }
        for (const auto& p : choices[t]) {
            bool clash = false;
            for (const auto& v : p) clash = clash || used.count({v.x, v.y});
            if (clash) continue;
            for (const auto& v : p) used.insert({v.x, v.y});
            rec(t + 1, used);
            for (const auto& v : p) used.erase({v.x, v.y});
        }
    };
    std::set<std::pair<int, int>> used;
    rec(0, used);
    return count;
}

}  // namespace

TEST_CASE("path count examples") {
    CHECK(count_paths_dp({{1, 1}, {0, 3}, 4}) == Integer(2));
    CHECK(count_paths_dp({{2, 2}, {0, 5}, std::nullopt}) == Integer(10));
    CHECK(count_paths_dp({{2, 2}, {0, 5}, 6}) == Integer(5));
    CHECK(count_paths_formula(3, 0, 1, 0, 3, 1, 1) == Integer(2));
    CHECK(count_paths_formula(5, 0, 2, 0, 4, 1, 1) == Integer(5));
    CHECK(count_paths_dp({{0, 0}, {1, 1}, std::nullopt}).is_zero());
    const PathProblem on_barrier{{1, 1}, {0, 3}, 3};
    CHECK(on_barrier.endpoint_on_barrier());
    CHECK(count_paths_dp(on_barrier).is_zero());
}

TEST_CASE("DP matches explicit enumeration") {
    for (int x0 = 0; x0 <= 4; ++x0)
        for (int y0 = 0; y0 <= 4; ++y0)
            for (int x1 = 0; x1 <= x0; ++x1)
                for (int y1 = y0; y1 <= 6; ++y1)
                    for (int l = -1; l <= 11; ++l) {
                        const Point s{x0, y0}, e{x1, y1};
                        const std::optional<int> barrier = l < 0 ? std::nullopt : std::optional<int>(l);
                        CHECK(count_paths_dp({s, e, barrier}) ==
                              Integer(static_cast<long>(paths_avoiding(s, e, barrier).size())));
                    }
}

TEST_CASE("reflection applicability and the reflection bijection") {
    // Reflection in x+y = L maps the end (0, y) to (L - y, L): bad paths from
    // the start equal free paths to the reflected end.
    for (int s = 0; s <= 10; ++s) {
        for (int y = s; y <= 12; ++y) {
            for (int barrier = 0; barrier <= 2 * y + 1; ++barrier) {
                const Integer free_count = count_paths_dp({{s, s}, {0, y}, std::nullopt});
                const Integer good = count_paths_dp({{s, s}, {0, y}, barrier});
                if (!reflection_applies(s, y, barrier)) {
                    CHECK(good.is_zero());
                    continue;
                }
                CHECK(good == count_paths_formula(y, 0, s, 0, barrier - s, 1, 1));
                const bool touches_possible = barrier >= 2 * s && barrier <= y;
                if (touches_possible) {
                    const Integer reflected = count_paths_dp({{s, s}, {barrier - y, barrier}, std::nullopt});
                    CHECK(free_count - good == reflected);
                }
            }
        }
    }
}

TEST_CASE("family counts") {
    const FamilyProblem fp{{{0, 0}, {1, 1}}, {{0, 4}, {0, 6}}, 9};
    CHECK(count_families_bruteforce(fp).count == Integer(2));
    CHECK(oracle_families(fp) == 2);
    const FamilyProblem crossed{{{0, 0}, {1, 1}}, {{0, 6}, {0, 4}}, 9};
    CHECK(count_families_bruteforce(crossed).count.is_zero());
    const auto tight = count_families_bruteforce(fp, 1);
    CHECK(tight.status == FamilyCount::Status::budget_exceeded);
}

TEST_CASE("family enumeration matches an independent oracle") {
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        const int k = static_cast<int>(rng.uniform(1, 3));
        FamilyProblem fp;
        for (int i = 0; i < k; ++i) {
            const int s = static_cast<int>(rng.uniform(0, 4));
            fp.starts.push_back({s, s});
            fp.ends.push_back({0, static_cast<int>(rng.uniform(s, 8))});
        }
        if (rng.uniform(0, 3) > 0) fp.barrier = static_cast<int>(rng.uniform(0, 14));
        CHECK(count_families_bruteforce(fp).count == Integer(oracle_families(fp)));
    }
}

TEST_CASE("families shrink as the barrier closes in") {
    const std::vector<Point> starts{{1, 1}, {2, 2}}, ends{{0, 6}, {0, 8}};
    Integer previous = count_families_bruteforce({starts, ends, std::nullopt}).count;
    for (int barrier = 30; barrier >= 9; --barrier) {
        const Integer now = count_families_bruteforce({starts, ends, barrier}).count;
        CHECK(now <= previous);
        previous = now;
    }
}

TEST_CASE("determinant equals the family count") {
    const auto r = verify_thm2(2, 1, 0, 1, 4, 1);
    CHECK(r.det == Integer(2));
    CHECK(r.verdict == Verdict::pass);
    CHECK(verify_thm2(0, 1, 0, 1, 3, 2).verdict == Verdict::inapplicable);
    int passed = 0;
    for (const auto& p : thm2_grid(5)) {
        const auto rep = verify_thm2(p.a, p.b, p.c, p.d, p.e, p.n);
        CHECK(rep.verdict != Verdict::fail);
        passed += rep.verdict == Verdict::pass;
    }
    CHECK(passed > 100);
}

TEST_CASE("factored determinant identity") {
    const auto r = verify_thm1(10, -1, 7, -1, -2, 2);
    CHECK(r.lhs == Integer(2352));
    CHECK(r.prefactor == Rational(1176));
    REQUIRE(r.family_count.has_value());
    CHECK(*r.family_count == Integer(2));
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.family.starts == std::vector<Point>{{0, 0}, {1, 1}});
    CHECK(r.family.ends == std::vector<Point>{{0, 4}, {0, 6}});
    for (const auto& p : block_thm1_instances(4)) {
        CHECK(verify_thm1(p.C, p.D, p.E, p.alpha, p.beta, p.k).verdict == Verdict::pass);
    }
}

TEST_CASE("enumeration budget override") {
    CHECK(enumeration_budget() > 0);
    CHECK(to_string(Verdict::inapplicable) == "inapplicable");
}
