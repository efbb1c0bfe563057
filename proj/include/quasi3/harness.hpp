#pragma once

// Seeded sampling, parameter sweeps and the acceptance criteria runner.
// Everything here is deterministic in its seed.

#include "quasi3/paths.hpp"
#include "quasi3/poly.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace quasi3 {

/// mt19937_64 with a portable bounded draw (std distributions differ
/// between standard libraries, which would break byte-identical output).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// Random polynomial of total degree <= max_degree with up to max_terms
/// terms and integer coefficients in [-9, 9].
Polynomial random_polynomial(Rng& rng, int max_degree, int max_terms);

struct Thm2Params {
    int a, b, c, d, e, n;
};
struct Thm1Params {
    int C, D, E, alpha, beta, k;
};

/// Every (a,b,c,d,e,n) with n in 1..3, positive steps b,d, all endpoint coordinates
/// in [0, max_coord] and barrier c+e in [0, 2*max_coord+1], one tuple per
/// distinct geometry (starts, ends, barrier).
std::vector<Thm2Params> thm2_grid(int max_coord);

/// Thm1 instances whose matrices are transposes of the diagonal blocks of
/// B_m (and the tilde blocks), for m = 1..max_m.
std::vector<Thm1Params> block_thm1_instances(int max_m);

/// Random Thm1 parameter tuple from a fixed box.
Thm1Params random_thm1(Rng& rng);
/// Random Thm2 parameter tuple with endpoint coordinates <= 12.
Thm2Params random_thm2(Rng& rng);

nlohmann::json to_json(const Thm1Report& r);
nlohmann::json to_json(const Thm2Report& r);

/// `identity sweep`: alternating random Thm2 / Thm1 instances. The summary
/// counts verdicts; instance order is the draw order.
nlohmann::json identity_sweep(std::uint64_t seed, int trials);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    /// Returns (passed, detail).
    std::function<std::pair<bool, std::string>()> check;
};

const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion, timing it; a criterion fails if it exceeds its limit.
CriterionResult run_criterion(const Criterion& c);

}  // namespace quasi3
