#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbp/assembly.hpp"
#include "qbp/td.hpp"

namespace qbp {

enum class Side { X, Z };

/// Raised when an exact enumeration would exceed the configured kernel-size
/// budget; callers fall back to estimation.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DistanceResult {
    std::optional<std::size_t> d;  // nullopt: no logical operators (infinite)
    bool exact = true;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

std::string render_distance(const DistanceResult& r);

/// k = n - rank(h_x) - rank(h_z).
std::size_t logical_count(const CssCode& code);

inline constexpr std::size_t kDefaultKernelLimit = 28;

/// Minimum weight over the full kernel of the opposing check matrix,
/// excluding the stabilizer row space, by Gray-code enumeration of all
/// kernel combinations. Refuses kernels larger than `max_kernel_dim`.
DistanceResult distance_exact(const CssCode& code, Side side,
                              std::size_t max_kernel_dim = kDefaultKernelLimit);

/// Randomized information-set upper bound: per trial, the kernel basis is
/// re-echeloned under a random column order and the resulting rows are
/// scored if they avoid the stabilizer row space. Deterministic in
/// (seed, trials); per-trial seeds are hashed so trial results merge by
/// minimum independently of evaluation order.
DistanceResult distance_estimate(const CssCode& code, Side side, std::size_t trials,
                                 std::uint64_t seed);

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    DistanceResult d_x, d_z;
};

struct SweepOptions {
    std::size_t trials = 64;
    std::uint64_t seed = 1;
    std::size_t max_kernel_dim = kDefaultKernelLimit;
};

struct SweepRow {
    std::string family;
    int p = 0, q = 0, w = 0, L = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    DistanceResult d_x, d_z;
    std::string error;  // nonempty when the row failed; other fields best-effort
};

/// One row per tetra-digit family at lattice size L; k by rank, distances
/// exact when the kernel fits the budget and estimated otherwise. Failures
/// are recorded in the row and the sweep continues.
std::vector<SweepRow> sweep_table(const std::vector<TdLabel>& families, int L,
                                  const SweepOptions& opt = {});

std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string render_td_label(const TdLabel& label);

}  // namespace qbp
