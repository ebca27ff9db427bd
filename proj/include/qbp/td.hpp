#pragma once

#include <cstdint>
#include <vector>

#include "qbp/assembly.hpp"

namespace qbp {

/// Tetra-digit code label [d_n, d_s, d_l, D]: qubits on d_s-cells, X-checks
/// on D-cells, plane-restricted Z-checks on d_n-cells of a D-dimensional
/// hypercubic lattice with periodic boundaries.
struct TdLabel {
    int d_n = 0, d_s = 0, d_l = 0, D = 0;

    bool operator==(const TdLabel&) const = default;
};

/// Checks the commutation condition C(d_l - d_n, d_s - d_n) = 0 mod 2.
/// Throws when the ordering d_n < d_s < d_l <= D is violated.
bool td_valid(const TdLabel& label);

/// Direct lattice construction. Row order: X-checks by D-cell position;
/// Z-checks by (d_n directions, d_l-plane superset B in lexicographic order,
/// position). Dependent Z-check rows are retained.
CssCode td_build(const TdLabel& label, int L);

/// Complements the direction set in 1..D; the position is unchanged
/// (torus convention). An involution.
CellLabel dual_map(const CellLabel& cell, int D);

/// Row-space equality of both check matrices after permuting b's qubit
/// columns by the bijection (qubit_map[i] is b's column matching a's column
/// i). Differing qubit counts compare unequal; a malformed bijection for
/// equal counts is an error.
bool codes_equivalent(const CssCode& a, const CssCode& b, const std::vector<std::size_t>& qubit_map);

/// Qubit bijection realizing the duality between a QBP code built from p
/// identical rep(L) inputs and the matching tetra-digit code: direction sets
/// complemented, positions kept.
std::vector<std::size_t> dual_qubit_bijection(const CssCode& qbp_code, const TdLabel& label, int L);

}  // namespace qbp
