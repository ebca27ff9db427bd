#include "qbp/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "qbp/rng.hpp"

namespace qbp {

std::string render_distance(const DistanceResult& r) {
    if (!r.d) return "inf";
    std::string s = std::to_string(*r.d);
    if (!r.exact) s += " (upper bound, trials=" + std::to_string(r.trials) +
                       ", seed=" + std::to_string(r.seed) + ")";
    return s;
}

std::size_t logical_count(const CssCode& code) {
    return code.n_qubits - rank(code.h_x) - rank(code.h_z);
}

namespace {

// Constraint matrix whose kernel hosts the side's logicals, and the
// stabilizer matrix whose row space is quotiented out.
std::pair<const SparseMatrix*, const SparseMatrix*> side_matrices(const CssCode& code, Side side) {
    if (side == Side::Z) return {&code.h_x, &code.h_z};
    return {&code.h_z, &code.h_x};
}

struct ReducedSpace {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;

    bool contains(const BitVector& v) const {
        BitVector x = v;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            if (x.test(pivot_cols[k])) reduced.xor_into(x, k);
        }
        return x.is_zero();
    }
};

ReducedSpace reduced_space(const SparseMatrix& m) {
    RrefResult rr = rref(to_dense(m));
    return ReducedSpace{std::move(rr.reduced), std::move(rr.pivot_cols)};
}

}  // namespace

DistanceResult distance_exact(const CssCode& code, Side side, std::size_t max_kernel_dim) {
    auto [constraints, stabilizers] = side_matrices(code, side);
    if (logical_count(code) == 0) return DistanceResult{std::nullopt, true, 0, 0};

    BitMatrix kernel = nullspace_basis(to_dense(*constraints));
    const std::size_t kd = kernel.rows();
    if (kd > max_kernel_dim)
        throw SizeLimitError("distance_exact: kernel dimension " + std::to_string(kd) +
                             " exceeds limit " + std::to_string(max_kernel_dim));
    ReducedSpace stab = reduced_space(*stabilizers);

    std::size_t best = kNpos;
    BitVector v(code.n_qubits);
    const std::uint64_t total = std::uint64_t(1) << kd;
    for (std::uint64_t c = 1; c < total; ++c) {
        kernel.xor_into(v, static_cast<std::size_t>(std::countr_zero(c)));
        std::size_t wt = v.weight();
        if (wt < best && !stab.contains(v)) {
            best = wt;
            if (best == 1) break;
        }
    }
    return DistanceResult{best, true, 0, 0};
}

DistanceResult distance_estimate(const CssCode& code, Side side, std::size_t trials,
                                 std::uint64_t seed) {
    auto [constraints, stabilizers] = side_matrices(code, side);
    if (logical_count(code) == 0)
        throw std::invalid_argument("distance_estimate: code has no logical operators");

    const BitMatrix kernel = nullspace_basis(to_dense(*constraints));
    const std::size_t kd = kernel.rows();
    const std::size_t n = code.n_qubits;
    ReducedSpace stab = reduced_space(*stabilizers);

    std::size_t best = kNpos;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(mix_seed(seed, trial));
        std::vector<std::size_t> order = random_permutation(n, rng);

        // Echelon the kernel basis under the permuted column order; the
        // resulting rows are coset representatives concentrated on the
        // complement of the sampled information set.
        BitMatrix w = kernel;
        std::vector<std::size_t> pivot_col(kd, kNpos);
        std::size_t placed = 0;
        for (std::size_t oc = 0; oc < n && placed < kd; ++oc) {
            const std::size_t c = order[oc];
            std::size_t pr = kNpos;
            for (std::size_t r = 0; r < kd; ++r) {
                if (pivot_col[r] == kNpos && w.get(r, c)) { pr = r; break; }
            }
            if (pr == kNpos) continue;
            for (std::size_t r = 0; r < kd; ++r) {
                if (r != pr && w.get(r, c)) w.xor_rows(r, pr);
            }
            pivot_col[pr] = c;
            ++placed;
        }

        for (std::size_t r = 0; r < kd; ++r) {
            std::size_t wt = w.row_weight(r);
            if (wt == 0 || wt >= best) continue;
            if (!stab.contains(w.row_copy(r))) best = wt;
        }
    }

    if (best == kNpos)
        throw std::logic_error("distance_estimate: no logical representative found");
    return DistanceResult{best, false, trials, seed};
}

std::string render_td_label(const TdLabel& label) {
    return "[" + std::to_string(label.d_n) + "," + std::to_string(label.d_s) + "," +
           std::to_string(label.d_l) + "," + std::to_string(label.D) + "]";
}

std::vector<SweepRow> sweep_table(const std::vector<TdLabel>& families, int L,
                                  const SweepOptions& opt) {
    std::vector<SweepRow> rows;
    for (const TdLabel& fam : families) {
        SweepRow row;
        row.family = render_td_label(fam);
        row.L = L;
        row.p = fam.D;
        row.q = fam.D - fam.d_s;
        row.w = 0;
        try {
            CssCode code = td_build(fam, L);
            row.n = code.n_qubits;
            const std::size_t rank_x = rank(code.h_x);
            const std::size_t rank_z = rank(code.h_z);
            row.k = code.n_qubits - rank_x - rank_z;
            auto distance = [&](Side side, std::size_t kd) {
                if (row.k == 0) return DistanceResult{std::nullopt, true, 0, 0};
                if (kd <= opt.max_kernel_dim) return distance_exact(code, side, opt.max_kernel_dim);
                return distance_estimate(code, side, opt.trials, opt.seed);
            };
            row.d_x = distance(Side::X, code.n_qubits - rank_z);
            row.d_z = distance(Side::Z, code.n_qubits - rank_x);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string format_ratio(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string csv_safe(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n') c = ';';
    }
    return s;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "family,p,q,w,L,n,k,d_x,d_z,d_x_exactness,d_z_exactness,k_over_n,d_over_n\n";
    for (const SweepRow& r : rows) {
        out += csv_safe(r.family) + "," + std::to_string(r.p) + "," + std::to_string(r.q) + "," +
               std::to_string(r.w) + "," + std::to_string(r.L) + ",";
        if (!r.error.empty()) {
            out += ",,,,error: " + csv_safe(r.error) + ",error: " + csv_safe(r.error) + ",,\n";
            continue;
        }
        auto dist_value = [](const DistanceResult& d) {
            return d.d ? std::to_string(*d.d) : std::string("inf");
        };
        auto exactness = [](const DistanceResult& d) {
            if (!d.d) return std::string("exact");
            if (d.exact) return std::string("exact");
            return "estimate(trials=" + std::to_string(d.trials) +
                   ";seed=" + std::to_string(d.seed) + ")";
        };
        out += std::to_string(r.n) + "," + std::to_string(r.k) + ",";
        out += dist_value(r.d_x) + "," + dist_value(r.d_z) + ",";
        out += exactness(r.d_x) + "," + exactness(r.d_z) + ",";
        out += format_ratio(static_cast<double>(r.k) / static_cast<double>(r.n)) + ",";
        if (r.d_x.d && r.d_z.d) {
            std::size_t d = std::min(*r.d_x.d, *r.d_z.d);
            out += format_ratio(static_cast<double>(d) / static_cast<double>(r.n));
        } else {
            out += "inf";
        }
        out += "\n";
    }
    return out;
}

}  // namespace qbp
