#include "quasi3/linsys.hpp"

#include "quasi3/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasi3 {

Integer coeff_A(int i, int j, int k, int l, int d) {
    if (j > i) throw std::invalid_argument("coeff_A needs j <= i");
    if (j < 0 || k < 0 || l < 0) throw std::invalid_argument("coeff_A needs non-negative indices");
    if (i == j) return binom(i, k) * (binom(d - i - k, l) - binom(2 * i - k, l));
    return binom(i, k) * binom(d - j - k, l) + binom(j, k) * binom(d - i - k, l) -
           (binom(i, k) + binom(j, k)) * binom(i + j - k, l);
}

std::optional<std::size_t> CoeffSystem::col_index(const ColLabel& c) const {
    auto it = std::find(cols.begin(), cols.end(), c);
    if (it == cols.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cols.begin());
}

std::vector<ColLabel> ansatz_columns(int m) {
    std::vector<ColLabel> cols;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= i; ++j) cols.emplace_back(i, j);
    return cols;
}

namespace {

IntegerMatrix fill(const std::vector<RowLabel>& rows, const std::vector<ColLabel>& cols, int d) {
    IntegerMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                coeff_A(cols[c].first, cols[c].second, rows[r].first, rows[r].second, d);
    return a;
}

}  // namespace

CoeffSystem build_system(int m, int d) {
    if (m < 0) throw std::invalid_argument("build_system needs m >= 0");
    if (d != 3 * m + 1 && d != 3 * m + 2) throw std::invalid_argument("build_system needs d = 3m+1 or 3m+2");
    CoeffSystem sys;
    sys.m = m;
    sys.d = d;
    for (int k = 0; k <= m; ++k)
        for (int l = 2 * m - 1; l >= 1; l -= 2) sys.rows.emplace_back(k, l);
    sys.cols = ansatz_columns(m);
    sys.entries = fill(sys.rows, sys.cols, d);
    return sys;
}

CoeffSystem restrict_Bm(const CoeffSystem& sys) {
    const int m = sys.m;
    if (m < 1) throw std::invalid_argument("B_m is defined for m >= 1");
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto [k, l] = sys.rows[r];
        if (k == m || l >= 2 * m - 2 * k - 1) keep_rows.push_back(r);
    }
    for (std::size_t c = 0; c < sys.cols.size(); ++c)
        if (sys.cols[c] != ColLabel{m, m}) keep_cols.push_back(c);

    CoeffSystem out;
    out.m = m;
    out.d = sys.d;
    out.entries.resize(static_cast<Eigen::Index>(keep_rows.size()), static_cast<Eigen::Index>(keep_cols.size()));
    for (std::size_t r = 0; r < keep_rows.size(); ++r) {
        out.rows.push_back(sys.rows[keep_rows[r]]);
        for (std::size_t c = 0; c < keep_cols.size(); ++c)
            out.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                sys.entries(static_cast<Eigen::Index>(keep_rows[r]), static_cast<Eigen::Index>(keep_cols[c]));
    }
    for (auto c : keep_cols) out.cols.push_back(sys.cols[c]);
    return out;
}

namespace {

std::string tilde(int d, int m) { return d == 3 * m + 2 ? "~" : ""; }

}  // namespace

BlockSet extract_blocks(int m, int d) {
    if (m < 1) throw std::invalid_argument("blocks are defined for m >= 1");
    const CoeffSystem bm = restrict_Bm(build_system(m, d));
    BlockSet set;
    set.m = m;
    set.d = d;
    auto take = [&](std::string name, int k, int i, int ncols) {
        Block b;
        b.name = std::move(name);
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 0; r < bm.rows.size(); ++r)
            if (bm.rows[r].first == k) rows.push_back(r);
        for (int j = 0; j < ncols; ++j) cols.push_back(*bm.col_index({i, j}));
        b.entries.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            b.rows.push_back(bm.rows[rows[r]]);
            for (std::size_t c = 0; c < cols.size(); ++c)
                b.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    bm.entries(static_cast<Eigen::Index>(rows[r]), static_cast<Eigen::Index>(cols[c]));
        }
        for (auto c : cols) b.cols.push_back(bm.cols[c]);
        set.blocks.push_back(std::move(b));
    };
    for (int f = 1; f <= m; ++f) take(tilde(d, m) + "B^{" + std::to_string(f) + "," + std::to_string(m) + "}", f - 1, f - 1, f);
    take(tilde(d, m) + "B^{" + std::to_string(m) + "}", m, m, m);
    return set;
}

BlockSet closed_form_blocks(int m, int d) {
    if (m < 1) throw std::invalid_argument("blocks are defined for m >= 1");
    if (d != 3 * m + 1 && d != 3 * m + 2) throw std::invalid_argument("blocks need d = 3m+1 or 3m+2");
    BlockSet set;
    set.m = m;
    set.d = d;
    auto make = [&](std::string name, int size, int top_shift, int k) {
        Block b;
        b.name = std::move(name);
        b.entries.resize(size, size);
        for (int i = 1; i <= size; ++i) {
            const int l = 2 * m + 1 - 2 * i;
            b.rows.emplace_back(k, l);
            for (int j = 1; j <= size; ++j)
                b.entries(i - 1, j - 1) = binom(top_shift - (j - 1), l) - binom(j - 1, l);
        }
        for (int j = 0; j < size; ++j) b.cols.emplace_back(k, j);
        set.blocks.push_back(std::move(b));
    };
    for (int f = 1; f <= m; ++f)
        make(tilde(d, m) + "B^{" + std::to_string(f) + "," + std::to_string(m) + "}", f, d - (f - 1), f - 1);
    make(tilde(d, m) + "B^{" + std::to_string(m) + "}", m, d - m, m);
    return set;
}

NullSpaceResult nullspace(const CoeffSystem& sys) {
    NullSpaceResult out;
    if (sys.rows.empty()) {
        for (std::size_t c = 0; c < sys.cols.size(); ++c) {
            RationalVector v = RationalVector::Constant(static_cast<Eigen::Index>(sys.cols.size()), Rational(0));
            v(static_cast<Eigen::Index>(c)) = 1;
            out.basis.push_back(std::move(v));
        }
        return out;
    }
    out.basis = nullspace_exact(sys.entries);
    if (out.basis.size() == 1) {
        auto& v = out.basis.front();
        if (v(0).is_zero()) {
            out.normalized = false;
        } else {
            const Rational scale = Rational(1) / v(0);
            for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= scale;
        }
    }
    return out;
}

}  // namespace quasi3
