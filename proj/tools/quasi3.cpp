// quasi3: construct and verify quasiinvariant bases of S3.
//
// Exit codes: 0 every verdict passed, 1 a mathematical verdict failed,
// 2 usage error, malformed input, out-of-range parameter or exceeded budget.

#include "quasi3/basis.hpp"
#include "quasi3/format.hpp"
#include "quasi3/group_algebra.hpp"
#include "quasi3/harness.hpp"
#include "quasi3/linalg.hpp"
#include "quasi3/linsys.hpp"
#include "quasi3/paths.hpp"
#include "quasi3/quasi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace quasi3;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxGradedDegree = 40;

/// Misuse that is not a parse error: out-of-range values, exceeded budgets.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "text";
    std::string output;
    int m = 0;
    int d = -1;
    bool restrict_bm = false;
    bool blocks = false;
    std::string verify = "full";
    int ideal_max_m = kDefaultIdealBudgetM;
    std::string poly_file;
    std::string expr;
    std::string matrix_file;
    int max_degree = 9;
    std::string start, end, starts, ends;
    std::optional<int> barrier;
    std::string params;
    std::uint64_t seed = 1;
    int trials = 20;
    int samples = 20;
    int only = 0;
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<int> parse_ints(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(what + ": '" + item + "' is not an integer");
        }
    }
    if (expected && out.size() != expected) {
        throw UsageError(what + " needs " + std::to_string(expected) + " comma-separated integers");
    }
    return out;
}

Point parse_point(const std::string& text, const std::string& what) {
    const auto v = parse_ints(text, 2, what);
    return {v[0], v[1]};
}

std::vector<Point> parse_points(const std::string& text, const std::string& what) {
    std::vector<Point> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_point(item, what));
    return out;
}

void require_m(int m) {
    if (m < 0) throw UsageError("--m must be non-negative");
}

int resolve_d(const RunConfig& cfg) {
    const int d = cfg.d < 0 ? 3 * cfg.m + 1 : cfg.d;
    if (d != 3 * cfg.m + 1 && d != 3 * cfg.m + 2) {
        throw UsageError("--d must be 3m+1 or 3m+2 (" + std::to_string(3 * cfg.m + 1) + " or " +
                         std::to_string(3 * cfg.m + 2) + ")");
    }
    return d;
}

std::string labels_text(const std::vector<std::pair<int, int>>& labels, char open, char close) {
    std::string s;
    for (const auto& [a, b] : labels) {
        if (!s.empty()) s += ' ';
        s += open + std::to_string(a) + "," + std::to_string(b) + close;
    }
    return s;
}

json labels_json(const std::vector<std::pair<int, int>>& labels) {
    json out = json::array();
    for (const auto& [a, b] : labels) out.push_back({a, b});
    return out;
}

json verdict_json(const std::optional<bool>& v) { return v ? json(*v) : json(); }

std::string verdict_text(const std::optional<bool>& v) { return v ? (*v ? "pass" : "FAIL") : "not run"; }

// ---- subcommands; each writes to `out` and returns an exit code ----

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
    require_m(cfg.m);
    const VerifyLevel level = cfg.verify == "degrees" ? VerifyLevel::degrees
                              : cfg.verify == "quasi" ? VerifyLevel::quasi
                                                      : VerifyLevel::full;
    const auto r = build_basis(cfg.m, level, cfg.ideal_max_m);

    if (cfg.format == "json") {
        json elements = json::array();
        for (std::size_t t = 0; t < 6; ++t) {
            elements.push_back({{"name", r.names[t]},
                                {"degree", r.degrees[t]},
                                {"poly", to_json(r.elements[t])},
                                {"quasiinvariant", verdict_json(r.quasi[t])}});
        }
        auto vec = [](const RationalVector& v) {
            json a = json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).to_string());
            return a;
        };
        out << json{{"m", r.m},
                    {"elements", elements},
                    {"null_vectors", {{"columns", labels_json(ansatz_columns(r.m))},
                                      {"A1", vec(r.a1.coefficients)},
                                      {"A2", vec(r.a2.coefficients)}}},
                    {"verdicts",
                     {{"degrees", r.degrees_ok},
                      {"s23_invariant", verdict_json(r.s23_invariant)},
                      {"A2_not_multiple_of_e1A1", verdict_json(r.a2_not_multiple_of_e1a1)},
                      {"independent_deg_3m+1", verdict_json(r.independent_3m1)},
                      {"independent_deg_3m+2", verdict_json(r.independent_3m2)},
                      {"delta_not_in_ideal_part", verdict_json(r.delta_not_in_ideal)},
                      {"independence_skipped", r.independence_skipped}}},
                    {"passed", r.passed()}}
                   .dump(2)
            << '\n';
    } else if (cfg.format == "latex") {
        out << "\\begin{align*}\n";
        out << "A_{1} &= " << ansatz_latex(r.a1) << " \\\\\n";
        out << "s_{12}(A_{1}) &= " << to_latex(r.elements[2]) << " \\\\\n";
        out << "A_{2} &= " << ansatz_latex(r.a2) << " \\\\\n";
        out << "s_{12}(A_{2}) &= " << to_latex(r.elements[4]) << " \\\\\n";
        out << "\\Delta^{" << 2 * r.m + 1 << "}(x) &= " << to_latex(r.elements[5]) << "\n";
        out << "\\end{align*}\n";
    } else {
        out << "m = " << r.m << "\n";
        for (std::size_t t = 0; t < 6; ++t) {
            out << r.names[t] << " (degree " << r.degrees[t] << ", quasiinvariant: " << verdict_text(r.quasi[t])
                << "):\n  " << to_text(r.elements[t]) << "\n";
        }
        out << "degrees match Hilbert series: " << (r.degrees_ok ? "pass" : "FAIL") << "\n";
        out << "A1, A2 s23-invariant: " << verdict_text(r.s23_invariant) << "\n";
        out << "A2 not a multiple of e1*A1: " << verdict_text(r.a2_not_multiple_of_e1a1) << "\n";
        out << "A1, s12 A1 independent mod ideal part: " << verdict_text(r.independent_3m1) << "\n";
        out << "A2, s12 A2 independent mod ideal part: " << verdict_text(r.independent_3m2) << "\n";
        out << "Delta^{2m+1} outside ideal part: " << verdict_text(r.delta_not_in_ideal) << "\n";
    }
    if (r.independence_skipped) {
        throw UsageError("budget exceeded: ideal-membership verification skipped for m=" + std::to_string(r.m) +
                         " (raise --ideal-max-m to run it)");
    }
    return r.passed() ? kExitOk : kExitMathFailure;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    require_m(cfg.m);
    if (cfg.poly_file.empty() == cfg.expr.empty()) throw UsageError("give exactly one of --poly FILE or --expr TEXT");
    const Polynomial p = cfg.expr.empty() ? parse_polynomial(read_file(cfg.poly_file)) : parse_polynomial(cfg.expr);
    const auto r = is_quasiinvariant(p, cfg.m);
    if (cfg.format == "json") {
        json pairs = json::array();
        for (const auto& v : r.pairs) {
            pairs.push_back({{"pair", {v.i, v.j}},
                             {"divisible", v.divisible},
                             {"largest_power", v.largest_power ? json(*v.largest_power) : json("infinite")}});
        }
        out << json{{"m", r.m}, {"poly", to_json(p)}, {"pairs", pairs}, {"quasiinvariant", r.passed()}}.dump(2) << '\n';
    } else {
        out << "P = " << to_text(p) << "\n";
        for (const auto& v : r.pairs) {
            out << "(1 - s" << v.i << v.j << ")P: largest power of (x" << v.i << " - x" << v.j
                << ") = " << (v.largest_power ? std::to_string(*v.largest_power) : "infinite (zero)")
                << ", need " << 2 * r.m + 1 << ": " << (v.divisible ? "pass" : "FAIL") << "\n";
        }
        out << (r.passed() ? "quasiinvariant" : "NOT quasiinvariant") << " for m = " << r.m << "\n";
    }
    return r.passed() ? kExitOk : kExitMathFailure;
}

json block_json(const Block& b) {
    return {{"name", b.name},
            {"rows", labels_json(b.rows)},
            {"cols", labels_json(b.cols)},
            {"entries", matrix_to_json(b.entries)},
            {"det", det_exact(b.entries).to_string()}};
}

int cmd_system(const RunConfig& cfg, std::ostream& out) {
    require_m(cfg.m);
    const int d = resolve_d(cfg);
    if ((cfg.restrict_bm || cfg.blocks) && cfg.m < 1) throw UsageError("B_m and its blocks need --m >= 1");
    CoeffSystem sys = build_system(cfg.m, d);
    if (cfg.restrict_bm) sys = restrict_Bm(sys);

    if (cfg.format == "json") {
        json j = {{"m", cfg.m},
                  {"d", d},
                  {"restricted", cfg.restrict_bm},
                  {"rows", labels_json(sys.rows)},
                  {"cols", labels_json(sys.cols)},
                  {"entries", matrix_to_json(sys.entries)}};
        if (cfg.blocks) {
            json blocks = json::array();
            for (const auto& b : extract_blocks(cfg.m, d).blocks) blocks.push_back(block_json(b));
            j["blocks"] = blocks;
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "m = " << cfg.m << ", d = " << d << (cfg.restrict_bm ? " (restricted to B_m)" : "") << "\n";
    out << "rows (k,l): " << labels_text(sys.rows, '(', ')') << "\n";
    out << "cols [i,j]: " << labels_text(sys.cols, '[', ']') << "\n";
    out << matrix_to_text(sys.entries);
    if (cfg.blocks) {
        for (const auto& b : extract_blocks(cfg.m, d).blocks) {
            out << "\n" << b.name << " (det " << det_exact(b.entries) << "):\n" << matrix_to_text(b.entries);
        }
    }
    return kExitOk;
}

int cmd_det(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.matrix_file.empty()) {
        json j;
        try {
            j = json::parse(read_file(cfg.matrix_file));
        } catch (const json::parse_error& err) {
            throw ParseError(std::string("malformed matrix JSON: ") + err.what());
        }
        if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
        const auto n = static_cast<Eigen::Index>(j.size());
        RationalMatrix a(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            const auto& row = j[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw ParseError("matrix must be square");
            for (Eigen::Index c = 0; c < n; ++c) {
                const auto& v = row[static_cast<std::size_t>(c)];
                try {
                    a(r, c) = v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long>());
                } catch (const std::exception& err) {
                    throw ParseError(std::string("bad matrix entry: ") + err.what());
                }
            }
        }
        const auto det = det_exact(a);
        if (cfg.format == "json") out << json{{"det", det.to_string()}}.dump(2) << '\n';
        else out << det << "\n";
        return kExitOk;
    }
    require_m(cfg.m);
    if (cfg.m < 1) throw UsageError("det of B_m needs --m >= 1 (or --matrix FILE)");
    const int d = resolve_d(cfg);
    const auto det_bm = det_exact(restrict_Bm(build_system(cfg.m, d)).entries);
    Integer product = 1;
    json blocks = json::array();
    std::ostringstream text;
    for (const auto& b : extract_blocks(cfg.m, d).blocks) {
        const auto det = det_exact(b.entries);
        product *= det;
        blocks.push_back({{"name", b.name}, {"det", det.to_string()}});
        text << "det " << b.name << " = " << det << "\n";
    }
    const bool ok = !det_bm.is_zero() && det_bm == product;
    if (cfg.format == "json") {
        out << json{{"m", cfg.m}, {"d", d}, {"det_Bm", det_bm.to_string()}, {"blocks", blocks},
                    {"block_product", product.to_string()}, {"nonsingular", !det_bm.is_zero()},
                    {"product_matches", det_bm == product}}
                   .dump(2)
            << '\n';
    } else {
        out << text.str() << "det B_m = " << det_bm << ", product of blocks = " << product << "\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_dims(const RunConfig& cfg, std::ostream& out) {
    require_m(cfg.m);
    if (cfg.max_degree < 0 || cfg.max_degree > kMaxGradedDegree) {
        throw UsageError("--max-degree must be in [0, " + std::to_string(kMaxGradedDegree) + "]");
    }
    const auto series = qi_hilbert_coefficients(cfg.m, cfg.max_degree);
    bool ok = true;
    json rows = json::array();
    std::ostringstream text;
    text << "degree  computed  series\n";
    for (int d = 0; d <= cfg.max_degree; ++d) {
        const auto dim = static_cast<long>(graded_qi_basis(cfg.m, d).size());
        const long expect = series[static_cast<std::size_t>(d)];
        ok = ok && dim == expect;
        rows.push_back({{"degree", d}, {"computed", dim}, {"series", expect}});
        text << std::setw(6) << d << std::setw(10) << dim << std::setw(8) << expect << (dim == expect ? "" : "  MISMATCH")
             << "\n";
    }
    if (cfg.format == "json") out << json{{"m", cfg.m}, {"dims", rows}, {"match", ok}}.dump(2) << '\n';
    else out << text.str();
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_paths_count(const RunConfig& cfg, std::ostream& out) {
    const PathProblem p{parse_point(cfg.start, "--start"), parse_point(cfg.end, "--end"), cfg.barrier};
    if (!p.well_formed()) throw UsageError("the end must lie weakly north-west of the start");
    const auto count = count_paths_dp(p);
    if (cfg.format == "json") {
        out << json{{"start", {p.start.x, p.start.y}},
                    {"end", {p.end.x, p.end.y}},
                    {"barrier", cfg.barrier ? json(*cfg.barrier) : json()},
                    {"endpoint_on_barrier", p.endpoint_on_barrier()},
                    {"count", count.to_string()}}
                   .dump(2)
            << '\n';
    } else {
        out << count << (p.endpoint_on_barrier() ? "  (endpoint lies on the barrier)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_paths_families(const RunConfig& cfg, std::ostream& out) {
    const FamilyProblem fp{parse_points(cfg.starts, "--starts"), parse_points(cfg.ends, "--ends"), cfg.barrier};
    if (fp.starts.empty() || fp.starts.size() != fp.ends.size()) {
        throw UsageError("--starts and --ends need the same positive number of points");
    }
    const auto r = count_families_bruteforce(fp);
    if (r.status == FamilyCount::Status::budget_exceeded) {
        throw UsageError("budget exceeded: enumeration size " + r.work.to_string() + " > " +
                         std::to_string(enumeration_budget()) + " (set QUASI3_BUDGET)");
    }
    if (cfg.format == "json") out << json{{"count", r.count.to_string()}, {"work", r.work.to_string()}}.dump(2) << '\n';
    else out << r.count << "\n";
    return kExitOk;
}

int report_exit(Verdict v, const std::string& note) {
    switch (v) {
        case Verdict::pass: return kExitOk;
        case Verdict::fail: return kExitMathFailure;
        case Verdict::unchecked: throw UsageError("budget exceeded: " + note + " (set QUASI3_BUDGET)");
        case Verdict::inapplicable: throw UsageError("parameters out of range: " + note);
    }
    return kExitUsage;
}

int cmd_thm1(const RunConfig& cfg, std::ostream& out) {
    const auto p = parse_ints(cfg.params, 6, "--params");
    if (p[5] < 1 || p[5] > 12) throw UsageError("k must be in [1, 12]");
    const auto r = verify_thm1(p[0], p[1], p[2], p[3], p[4], p[5]);
    if (cfg.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << "lhs det = " << r.lhs << "\nprefactor = " << r.prefactor << "\n|F| = "
            << (r.family_count ? r.family_count->to_string() : "unchecked") << "\nstarts:";
        for (const auto& s : r.family.starts) out << " (" << s.x << "," << s.y << ")";
        out << "\nends:";
        for (const auto& e : r.family.ends) out << " (" << e.x << "," << e.y << ")";
        out << "\nbarrier x+y = " << *r.family.barrier << "\nverdict: " << to_string(r.verdict)
            << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
    }
    return report_exit(r.verdict, r.note);
}

int cmd_thm2(const RunConfig& cfg, std::ostream& out) {
    const auto p = parse_ints(cfg.params, 6, "--params");
    if (p[5] < 1 || p[5] > 12) throw UsageError("n must be in [1, 12]");
    const auto r = verify_thm2(p[0], p[1], p[2], p[3], p[4], p[5]);
    if (cfg.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << matrix_to_text(r.matrix) << "det = " << r.det << "\nfamilies = "
            << (r.family_count ? r.family_count->to_string() : "unchecked") << "\nverdict: " << to_string(r.verdict)
            << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
    }
    return report_exit(r.verdict, r.note);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.trials < 0 || cfg.trials > 100000) throw UsageError("--trials must be in [0, 100000]");
    const auto j = identity_sweep(cfg.seed, cfg.trials);
    if (cfg.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << "seed " << cfg.seed << ", " << cfg.trials << " trials\n";
        for (const auto& [thm, counts] : j["summary"].items()) {
            out << thm << ":";
            for (const auto& [verdict, n] : counts.items()) out << " " << verdict << "=" << n.get<int>();
            out << "\n";
        }
    }
    return j["ok"].get<bool>() ? kExitOk : kExitMathFailure;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
    if (cfg.samples < 1 || cfg.samples > 100000) throw UsageError("--samples must be in [1, 100000]");
    Rng rng(cfg.seed);
    std::vector<Polynomial> samples;
    for (int t = 0; t < cfg.samples; ++t) samples.push_back(random_polynomial(rng, 8, 12));
    const auto algebra = verify_identities_in_algebra();
    const auto report = verify_identities(samples);
    std::map<std::string, int> failures;
    for (const auto& c : report.checks) failures[c.name] += c.passed ? 0 : 1;
    const bool ok = algebra.all_passed() && report.all_passed();
    if (cfg.format == "json") {
        json ids = json::array();
        for (std::size_t k = 0; k < identity_names().size(); ++k) {
            const auto& name = identity_names()[k];
            ids.push_back({{"identity", name},
                           {"algebra_level", algebra.checks[k].passed},
                           {"sample_failures", failures[name]}});
        }
        out << json{{"seed", cfg.seed}, {"samples", cfg.samples}, {"identities", ids}, {"ok", ok}}.dump(2) << '\n';
    } else {
        for (std::size_t k = 0; k < identity_names().size(); ++k) {
            const auto& name = identity_names()[k];
            out << (algebra.checks[k].passed && failures[name] == 0 ? "pass  " : "FAIL  ") << name
                << "  (algebra level " << (algebra.checks[k].passed ? "ok" : "fails") << ", " << failures[name] << "/"
                << cfg.samples << " sample failures)\n";
        }
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    bool ok = true;
    json results = json::array();
    for (const auto& c : acceptance_criteria()) {
        if (cfg.only && c.id != cfg.only) continue;
        const auto r = run_criterion(c);
        ok = ok && r.passed;
        if (cfg.format == "json") {
            results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                               {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
        } else {
            out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << std::fixed
                << std::setprecision(2) << r.seconds << "s / " << r.limit_seconds << "s): " << r.detail << "\n"
                << std::flush;
        }
    }
    if (cfg.format == "json") out << json{{"criteria", results}, {"ok", ok}}.dump(2) << '\n';
    return ok ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi3: bases of S3 quasiinvariants modulo <e1,e2,e3>, with exact verification"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "latex"}))
        ->capture_default_str();
    app.add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");

    std::function<int(const RunConfig&, std::ostream&)> action;
    auto bind = [&](CLI::App* sub, auto fn) { sub->callback([&action, fn] { action = fn; }); };

    auto* basis = app.add_subcommand("basis", "Construct the six-element quotient basis and verify it");
    basis->add_option("--m", cfg.m, "Quasiinvariance order m")->required();
    basis->add_option("--verify", cfg.verify, "Verification level")
        ->check(CLI::IsMember({"degrees", "quasi", "full"}))
        ->capture_default_str();
    basis->add_option("--ideal-max-m", cfg.ideal_max_m, "Largest m for ideal-membership solves")->capture_default_str();
    bind(basis, cmd_basis);

    auto* check = app.add_subcommand("check", "Test a polynomial for m-quasiinvariance");
    check->add_option("--m", cfg.m, "Quasiinvariance order m")->required();
    check->add_option("--poly", cfg.poly_file, "Polynomial file (JSON term list or text expression; - for stdin)");
    check->add_option("--expr", cfg.expr, "Polynomial given inline as a text expression");
    bind(check, cmd_check);

    auto add_system_opts = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "Quasiinvariance order m")->required();
        sub->add_option("--d", cfg.d, "Degree, 3m+1 (default) or 3m+2");
    };
    auto* system = app.add_subcommand("system", "Emit the coefficient system");
    add_system_opts(system);
    system->add_flag("--restrict-bm", cfg.restrict_bm, "Restrict to the square submatrix B_m");
    system->add_flag("--blocks", cfg.blocks, "Also emit the diagonal blocks of B_m");
    bind(system, cmd_system);

    auto* blocks = app.add_subcommand("blocks", "Emit B_m and its diagonal blocks");
    add_system_opts(blocks);
    bind(blocks, [](const RunConfig& c, std::ostream& o) {
        RunConfig copy = c;
        copy.restrict_bm = true;
        copy.blocks = true;
        return cmd_system(copy, o);
    });

    auto* det = app.add_subcommand("det", "Exact determinant of B_m and its blocks, or of a JSON matrix");
    det->add_option("--m", cfg.m, "Quasiinvariance order m");
    det->add_option("--d", cfg.d, "Degree, 3m+1 (default) or 3m+2");
    det->add_option("--matrix", cfg.matrix_file, "Square matrix as JSON rows of \"num/den\" strings or integers");
    bind(det, cmd_det);

    auto* dims = app.add_subcommand("dims", "Graded dimensions of QI_m against the Hilbert series");
    dims->add_option("--m", cfg.m, "Quasiinvariance order m")->required();
    dims->add_option("--max-degree", cfg.max_degree, "Largest degree (at most 40)")->capture_default_str();
    bind(dims, cmd_dims);

    auto* paths = app.add_subcommand("paths", "Lattice path counts");
    paths->require_subcommand(1);
    auto* count = paths->add_subcommand("count", "Count NORTH/WEST paths avoiding x+y = L");
    count->add_option("--start", cfg.start, "X0,Y0")->required();
    count->add_option("--end", cfg.end, "X1,Y1")->required();
    count->add_option("--barrier", cfg.barrier, "Barrier L of the line x+y = L");
    bind(count, cmd_paths_count);
    auto* families = paths->add_subcommand("families", "Brute-force count of non-intersecting families");
    families->add_option("--starts", cfg.starts, "x,y;x,y;...")->required();
    families->add_option("--ends", cfg.ends, "x,y;x,y;...")->required();
    families->add_option("--barrier", cfg.barrier, "Barrier L of the line x+y = L");
    bind(families, cmd_paths_families);

    auto* identity = app.add_subcommand("identity", "Verify the binomial determinant identities");
    identity->require_subcommand(1);
    auto* thm1 = identity->add_subcommand("thm1", "Factored determinant identity");
    thm1->add_option("--params", cfg.params, "C,D,E,alpha,beta,k")->required();
    bind(thm1, cmd_thm1);
    auto* thm2 = identity->add_subcommand("thm2", "Determinant = number of non-intersecting families");
    thm2->add_option("--params", cfg.params, "a,b,c,d,e,n")->required();
    bind(thm2, cmd_thm2);
    auto* sweep = identity->add_subcommand("sweep", "Seeded random verification of both identities");
    sweep->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sweep->add_option("--trials", cfg.trials, "Number of instances")->capture_default_str();
    bind(sweep, cmd_sweep);

    auto* identities = app.add_subcommand("identities", "Verify the S3 group algebra identities");
    identities->add_option("--samples", cfg.samples, "Number of random sample polynomials")->capture_default_str();
    identities->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    bind(identities, cmd_identities);

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("--only", cfg.only, "Run a single criterion by number");
    bind(selftest, cmd_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream buffer;
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "error: cannot write '" << cfg.output << "'\n";
            return kExitUsage;
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : static_cast<std::ostream&>(file);
    try {
        return action(cfg, out);
    } catch (const ParseError& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: parameter out of range: " << e.what() << "\n";
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
