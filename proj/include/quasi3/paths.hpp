#pragma once

// Lattice paths with NORTH (+y) and WEST (-x) steps that must avoid a
// diagonal barrier x + y = L, families of vertex-disjoint such paths, and
// exact checks of the two binomial-determinant identities built on them.

#include "quasi3/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quasi3 {

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// A single path from start to end. With a barrier L no vertex of the path
/// may satisfy x + y = L (strict avoidance, endpoints included).
struct PathProblem {
    Point start;
    Point end;
    std::optional<int> barrier;

    bool well_formed() const { return end.x <= start.x && end.y >= start.y; }
    bool endpoint_on_barrier() const;
};

Integer count_paths_dp(const PathProblem& p);

/// binom(a+b*i, c+d*j) - binom(a+b*i, e-d*j): the reflection count of paths
/// from (c+dj, c+dj) to (0, a+bi) avoiding x + y = c + e.
Integer count_paths_formula(int a, int b, int c, int d, int e, int i, int j);

/// Whether the reflection formula counts paths from (s, s) to (0, y_end)
/// avoiding x + y = barrier. It fails exactly when the barrier strictly
/// separates the two endpoints' diagonals (then every path crosses it) or
/// when the end lies below the start and the subtracted term is nonzero.
bool reflection_applies(int s, int y_end, int barrier);

/// Start t is joined to end t; paths must be pairwise vertex-disjoint.
struct FamilyProblem {
    std::vector<Point> starts;
    std::vector<Point> ends;
    std::optional<int> barrier;
};

struct FamilyCount {
    enum class Status { counted, budget_exceeded };
    Status status = Status::counted;
    Integer count;
    /// Product of the individual path counts (the enumeration size bound).
    Integer work;
};

/// Budget for brute-force family enumeration: QUASI3_BUDGET if set, else 10^7.
std::uint64_t enumeration_budget();

/// Counts families by explicit depth-first enumeration. Refuses (status
/// budget_exceeded) when the product of individual path counts exceeds budget.
FamilyCount count_families_bruteforce(const FamilyProblem& fp, std::uint64_t budget = enumeration_budget());

enum class Verdict { pass, fail, unchecked, inapplicable };
std::string to_string(Verdict v);

struct Thm2Report {
    int a = 0, b = 0, c = 0, d = 0, e = 0, n = 0;
    FamilyProblem family;
    IntegerMatrix matrix;
    Integer det;
    std::optional<Integer> family_count;
    Verdict verdict = Verdict::unchecked;
    std::string note;
};

/// det | binom(a+bi, c+dj) - binom(a+bi, e-dj) |_{i,j=1..n} against the number
/// of non-intersecting families from (c+jd, c+jd) to (0, a+ib) avoiding
/// x + y = c + e.
Thm2Report verify_thm2(int a, int b, int c, int d, int e, int n, std::uint64_t budget = enumeration_budget());

struct Thm1Report {
    int C = 0, D = 0, E = 0, alpha = 0, beta = 0, k = 0;
    IntegerMatrix matrix;
    Integer lhs;
    Rational prefactor;
    FamilyProblem family;
    std::optional<Integer> family_count;
    Verdict verdict = Verdict::unchecked;
    std::string note;
};

/// det | binom(C+alpha i, E+beta j) - binom(D-alpha i, E+beta j) |_{i,j=1..k}
/// against prod_t binom(C+D, E+t beta) / prod_t binom(C+D, C+t alpha) times
/// the number of non-intersecting families from (D-t alpha, D-t alpha) to
/// (0, C+D-E-t beta) strictly below x + y = C + D.
Thm1Report verify_thm1(int C, int D, int E, int alpha, int beta, int k, std::uint64_t budget = enumeration_budget());

}  // namespace quasi3
