#pragma once

#include <string>
#include <vector>

#include "qbp/poly.hpp"

#include <json.hpp>

namespace qbp {

/// Bootstrap solutions at one support size, solved on the canonical subset
/// {1..t}. Generators for any other size-t subset follow by the
/// order-preserving relabeling {1..t} -> S.
struct LevelSolution {
    int t = 0;
    std::vector<Poly> canonical_generators;  // degree t - q, independent
};

struct ForkComplexSpec {
    int p = 0, q = 0, w = 0;
    std::vector<LevelSolution> levels;  // t = q+1 .. p, empty levels included
};

void validate_triple(int p, int q, int w);

/// Basis of the solution space V_sol at support size t: the null space of
/// multiplication by tau = e_{q-w}(t) acting from degree t-q.
std::vector<Poly> solve_level(int p, int q, int w, int t);

/// Extends a basis of V_red (lower-level generators embedded by the full
/// complementary monomial, over every smaller subset of {1..t}) to a basis
/// of span(V_sol); returns the added representatives, reduced-row-echelon
/// style with the V_red rows pinned first. May be empty.
std::vector<Poly> filter_primitive(const std::vector<Poly>& v_sol,
                                   const std::vector<LevelSolution>& lower_levels,
                                   int t, int q);

/// Weight-lowering passes: g_i <- g_i + g_j whenever the term count strictly
/// drops, in ascending (i, j) order, repeated to a fixpoint. Span and
/// cardinality are preserved.
std::vector<Poly> greedy_reduce(std::vector<Poly> basis);

ForkComplexSpec solve_fork(int p, int q, int w);

nlohmann::ordered_json fork_to_json(const ForkComplexSpec& spec);
std::string fork_to_json_text(const ForkComplexSpec& spec);

}  // namespace qbp
