#include "quasi3/paths.hpp"

#include "quasi3/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace quasi3 {

namespace {

bool on_line(const Point& p, const std::optional<int>& barrier) { return barrier && p.x + p.y == *barrier; }

}  // namespace

bool PathProblem::endpoint_on_barrier() const { return on_line(start, barrier) || on_line(end, barrier); }

Integer count_paths_dp(const PathProblem& p) {
    if (!p.well_formed() || p.endpoint_on_barrier()) return 0;
    const int w = p.start.x - p.end.x + 1;
    const int h = p.end.y - p.start.y + 1;
    // ways[dx][dy]: paths from the start to (start.x - dx, start.y + dy).
    std::vector<Integer> ways(static_cast<std::size_t>(w * h), Integer(0));
    auto at = [&](int dx, int dy) -> Integer& { return ways[static_cast<std::size_t>(dx * h + dy)]; };
    for (int dx = 0; dx < w; ++dx) {
        for (int dy = 0; dy < h; ++dy) {
            if (on_line({p.start.x - dx, p.start.y + dy}, p.barrier)) continue;
            if (dx == 0 && dy == 0) {
                at(dx, dy) = 1;
                continue;
            }
            Integer v = 0;
            if (dx > 0) v += at(dx - 1, dy);
            if (dy > 0) v += at(dx, dy - 1);
            at(dx, dy) = std::move(v);
        }
    }
    return at(w - 1, h - 1);
}

Integer count_paths_formula(int a, int b, int c, int d, int e, int i, int j) {
    const long top = static_cast<long>(a) + static_cast<long>(b) * i;
    return binom(top, static_cast<long>(c) + static_cast<long>(d) * j) -
           binom(top, static_cast<long>(e) - static_cast<long>(d) * j);
}

bool reflection_applies(int s, int y_end, int barrier) {
    if (s < 0 || y_end < 0) return false;
    if (s <= y_end) {
        const int lo = std::min(2 * s, y_end), hi = std::max(2 * s, y_end);
        return !(lo < barrier && barrier < hi);
    }
    return binom(y_end, barrier - s).is_zero();
}

std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("QUASI3_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 10'000'000;
}

namespace {

class FamilyEnumerator {
public:
    explicit FamilyEnumerator(const FamilyProblem& fp) : fp_(fp) {
        min_x_ = max_x_ = fp.starts.front().x;
        min_y_ = max_y_ = fp.starts.front().y;
        for (const auto* list : {&fp.starts, &fp.ends}) {
            for (const auto& q : *list) {
                min_x_ = std::min(min_x_, q.x);
                max_x_ = std::max(max_x_, q.x);
                min_y_ = std::min(min_y_, q.y);
                max_y_ = std::max(max_y_, q.y);
            }
        }
        height_ = max_y_ - min_y_ + 1;
        used_.assign(static_cast<std::size_t>((max_x_ - min_x_ + 1) * height_), 0);
    }

    std::uint64_t run() {
        count_ = 0;
        start_path(0);
        return count_;
    }

private:
    char& cell(int x, int y) { return used_[static_cast<std::size_t>((x - min_x_) * height_ + (y - min_y_))]; }

    void start_path(std::size_t t) {
        if (t == fp_.starts.size()) {
            ++count_;
            return;
        }
        walk(t, fp_.starts[t].x, fp_.starts[t].y);
    }

    void walk(std::size_t t, int x, int y) {
        const Point& target = fp_.ends[t];
        if (x < target.x || y > target.y) return;
        if (on_line({x, y}, fp_.barrier) || cell(x, y)) return;
        cell(x, y) = 1;
        if (x == target.x && y == target.y) {
            start_path(t + 1);
        } else {
            walk(t, x - 1, y);
            walk(t, x, y + 1);
        }
        cell(x, y) = 0;
    }

    const FamilyProblem& fp_;
    int min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0, height_ = 0;
    std::vector<char> used_;
    std::uint64_t count_ = 0;
};

}  // namespace

FamilyCount count_families_bruteforce(const FamilyProblem& fp, std::uint64_t budget) {
    if (fp.starts.size() != fp.ends.size()) throw std::invalid_argument("family needs as many starts as ends");
    FamilyCount out;
    out.work = 1;
    for (std::size_t t = 0; t < fp.starts.size(); ++t) {
        out.work *= count_paths_dp({fp.starts[t], fp.ends[t], fp.barrier});
    }
    if (fp.starts.empty()) {
        out.count = 1;
        return out;
    }
    if (out.work > Integer(static_cast<long>(std::min<std::uint64_t>(budget, std::numeric_limits<long>::max())))) {
        out.status = FamilyCount::Status::budget_exceeded;
        return out;
    }
    if (out.work.is_zero()) {
        out.count = 0;
        return out;
    }
    out.count = Integer(static_cast<long>(FamilyEnumerator(fp).run()));
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::unchecked: return "unchecked";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

// The determinant counts families only when the identity pairing is the
// sole non-crossing one and every entry is a genuine reflection count.
std::string geometry_problem(const FamilyProblem& fp, bool same_orientation) {
    if (fp.starts.size() > 1 && !same_orientation) return "starts and ends are ordered oppositely";
    for (const auto& s : fp.starts) {
        if (s.x != s.y) return "start off the diagonal";
        for (const auto& e : fp.ends) {
            if (e.x != 0) return "end off the y-axis";
            if (!reflection_applies(s.x, e.y, *fp.barrier)) return "entry is not a reflection count";
        }
    }
    return {};
}

void settle(Verdict& verdict, std::optional<Integer>& family_count, const FamilyProblem& fp,
            std::uint64_t budget, const auto& matches) {
    const auto fc = count_families_bruteforce(fp, budget);
    if (fc.status == FamilyCount::Status::budget_exceeded) {
        verdict = Verdict::unchecked;
        return;
    }
    family_count = fc.count;
    verdict = matches(fc.count) ? Verdict::pass : Verdict::fail;
}

}  // namespace

Thm2Report verify_thm2(int a, int b, int c, int d, int e, int n, std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("verify_thm2 needs n >= 1");
    Thm2Report r{a, b, c, d, e, n, {}, {}, {}, {}, Verdict::unchecked, {}};
    r.matrix.resize(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.matrix(i - 1, j - 1) = count_paths_formula(a, b, c, d, e, i, j);
    r.det = det_exact(r.matrix);
    for (int t = 1; t <= n; ++t) {
        r.family.starts.push_back({c + t * d, c + t * d});
        r.family.ends.push_back({0, a + t * b});
    }
    r.family.barrier = c + e;
    r.note = geometry_problem(r.family, (b > 0 && d > 0) || (b < 0 && d < 0));
    if (!r.note.empty()) {
        r.verdict = Verdict::inapplicable;
        return r;
    }
    settle(r.verdict, r.family_count, r.family, budget, [&](const Integer& cnt) { return cnt == r.det; });
    if (r.verdict == Verdict::unchecked) r.note = "enumeration budget exceeded";
    return r;
}

Thm1Report verify_thm1(int C, int D, int E, int alpha, int beta, int k, std::uint64_t budget) {
    if (k < 1) throw std::invalid_argument("verify_thm1 needs k >= 1");
    Thm1Report r;
    r.C = C, r.D = D, r.E = E, r.alpha = alpha, r.beta = beta, r.k = k;
    r.matrix.resize(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            r.matrix(i - 1, j - 1) = binom(C + alpha * i, E + beta * j) - binom(D - alpha * i, E + beta * j);
    r.lhs = det_exact(r.matrix);

    Integer num = 1, den = 1;
    for (int t = 1; t <= k; ++t) {
        num *= binom(C + D, E + t * beta);
        den *= binom(C + D, C + t * alpha);
    }
    for (int t = 1; t <= k; ++t) {
        r.family.starts.push_back({D - t * alpha, D - t * alpha});
        r.family.ends.push_back({0, C + D - E - t * beta});
    }
    r.family.barrier = C + D;
    if (den.is_zero()) {
        r.verdict = Verdict::inapplicable;
        r.note = "a denominator binomial vanishes";
        return r;
    }
    r.prefactor = Rational(num, den);
    r.note = geometry_problem(r.family, (alpha < 0 && beta < 0) || (alpha > 0 && beta > 0));
    if (!r.note.empty()) {
        r.verdict = Verdict::inapplicable;
        return r;
    }
    settle(r.verdict, r.family_count, r.family, budget,
           [&](const Integer& cnt) { return Rational(r.lhs) == r.prefactor * Rational(cnt); });
    if (r.verdict == Verdict::unchecked) r.note = "enumeration budget exceeded";
    return r;
}

}  // namespace quasi3
