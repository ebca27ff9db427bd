#include "qbp/td.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbp {

namespace {

// Parity of C(n, k) via Kummer: C(n,k) is odd iff k's bits are a subset of n's.
bool binomial_odd(int n, int k) { return (k & ~n) == 0; }

// Canonical indexing of the k-cells of the L^D torus: direction sets in
// lexicographic order, positions mixed-radix with axis 1 most significant.
struct CellIndexer {
    int D = 0, L = 0, k = 0;
    std::vector<Monomial> dir_sets;
    std::size_t cells_per_set = 0;

    CellIndexer(int D_, int L_, int k_) : D(D_), L(L_), k(k_) {
        dir_sets = monomials_of_degree(full_support(D), k);
        cells_per_set = 1;
        for (int i = 0; i < D; ++i) cells_per_set *= static_cast<std::size_t>(L);
    }

    std::size_t size() const { return dir_sets.size() * cells_per_set; }

    std::size_t position_rank(const std::vector<std::uint32_t>& pos) const {
        std::size_t r = 0;
        for (int i = 0; i < D; ++i) r = r * static_cast<std::size_t>(L) + pos[static_cast<std::size_t>(i)];
        return r;
    }

    std::size_t rank_of(Monomial dirs, const std::vector<std::uint32_t>& pos) const {
        auto it = std::lower_bound(dir_sets.begin(), dir_sets.end(), dirs, monomial_lex_less);
        if (it == dir_sets.end() || *it != dirs) throw std::invalid_argument("CellIndexer: unknown direction set");
        return static_cast<std::size_t>(it - dir_sets.begin()) * cells_per_set + position_rank(pos);
    }

    // enumerate positions in rank order
    template <typename F>
    void for_each_position(F&& f) const {
        std::vector<std::uint32_t> pos(static_cast<std::size_t>(D), 0);
        for (std::size_t e = 0; e < cells_per_set; ++e) {
            f(pos);
            for (std::size_t i = pos.size(); i-- > 0;) {
                if (++pos[i] < static_cast<std::uint32_t>(L)) break;
                pos[i] = 0;
            }
        }
    }
};

}  // namespace

bool td_valid(const TdLabel& label) {
    if (!(label.d_n >= 0 && label.d_n < label.d_s && label.d_s < label.d_l && label.d_l <= label.D))
        throw std::invalid_argument("tetra-digit label requires 0 <= d_n < d_s < d_l <= D");
    return !binomial_odd(label.d_l - label.d_n, label.d_s - label.d_n);
}

CssCode td_build(const TdLabel& label, int L) {
    if (!td_valid(label)) throw std::invalid_argument("tetra-digit label fails the commutation condition");
    if (L < 2) throw std::invalid_argument("td_build: L must be at least 2");
    const int D = label.D;

    CellIndexer qubits(D, L, label.d_s);
    CssCode code;
    code.n_qubits = qubits.size();

    code.qubit_labels.reserve(qubits.size());
    for (Monomial dirs : qubits.dir_sets) {
        qubits.for_each_position([&](const std::vector<std::uint32_t>& pos) {
            code.qubit_labels.push_back(CellLabel{dirs, pos});
        });
    }

    // X-checks: one per D-cell y, touching the d_s-cells (A, y + offsets on
    // the complement of A).
    CellIndexer dcells(D, L, D);
    code.h_x = SparseMatrix(dcells.cells_per_set, qubits.size());
    {
        std::size_t row = 0;
        std::vector<std::uint32_t> x(static_cast<std::size_t>(D));
        dcells.for_each_position([&](const std::vector<std::uint32_t>& y) {
            std::vector<std::uint32_t> entries;
            for (Monomial a : qubits.dir_sets) {
                std::vector<int> comp = monomial_indices(full_support(D) & ~a);
                const std::size_t patterns = std::size_t(1) << comp.size();
                for (std::size_t bits = 0; bits < patterns; ++bits) {
                    x = y;
                    for (std::size_t j = 0; j < comp.size(); ++j) {
                        if ((bits >> j) & 1) {
                            std::size_t ax = static_cast<std::size_t>(comp[j] - 1);
                            x[ax] = (x[ax] + 1) % static_cast<std::uint32_t>(L);
                        }
                    }
                    entries.push_back(static_cast<std::uint32_t>(qubits.rank_of(a, x)));
                }
            }
            code.h_x.set_row(row++, std::move(entries));
        });
    }

    // Z-checks: per d_n-cell (A, u) and d_l-superset B of A, touching the
    // d_s-cells (A', u - offsets on A' \ A) with A inside A' inside B.
    CellIndexer ncells(D, L, label.d_n);
    code.h_z = SparseMatrix(0, qubits.size());
    for (Monomial a : ncells.dir_sets) {
        std::vector<Monomial> supersets;
        for (Monomial b : monomials_of_degree(full_support(D), label.d_l)) {
            if ((a & ~b) == 0) supersets.push_back(b);
        }
        for (Monomial b : supersets) {
            std::vector<Monomial> mid_sets;
            for (Monomial m : monomials_of_degree(b, label.d_s)) {
                if ((a & ~m) == 0) mid_sets.push_back(m);
            }
            std::vector<std::uint32_t> x(static_cast<std::size_t>(D));
            std::size_t block_rows = 0;
            ncells.for_each_position([&](const std::vector<std::uint32_t>& u) {
                std::vector<std::uint32_t> entries;
                for (Monomial m : mid_sets) {
                    std::vector<int> grow = monomial_indices(m & ~a);
                    const std::size_t patterns = std::size_t(1) << grow.size();
                    for (std::size_t bits = 0; bits < patterns; ++bits) {
                        x = u;
                        for (std::size_t j = 0; j < grow.size(); ++j) {
                            if ((bits >> j) & 1) {
                                std::size_t ax = static_cast<std::size_t>(grow[j] - 1);
                                x[ax] = (x[ax] + static_cast<std::uint32_t>(L) - 1) % static_cast<std::uint32_t>(L);
                            }
                        }
                        entries.push_back(static_cast<std::uint32_t>(qubits.rank_of(m, x)));
                    }
                }
                std::sort(entries.begin(), entries.end());
                code.h_z.row_cols.push_back(std::move(entries));
                ++block_rows;
            });
            code.z_blocks.push_back(ZBlockLabel{b, static_cast<std::size_t>(code.z_blocks.size()), block_rows,
                                                "A=" + render_monomial(a)});
        }
    }
    code.h_z.rows = code.h_z.row_cols.size();

    if (!matmul(code.h_x, transpose(code.h_z)).is_zero())
        throw std::logic_error("td_build: X and Z checks fail to commute");
    return code;
}

CellLabel dual_map(const CellLabel& cell, int D) {
    if (D < 0 || D > kMaxVariables) throw std::invalid_argument("dual_map: bad dimension");
    return CellLabel{full_support(D) & ~cell.directions, cell.locals};
}

bool codes_equivalent(const CssCode& a, const CssCode& b, const std::vector<std::size_t>& qubit_map) {
    if (a.n_qubits != b.n_qubits) return false;
    if (qubit_map.size() != a.n_qubits) throw std::invalid_argument("codes_equivalent: bijection size mismatch");
    std::vector<std::size_t> inverse(b.n_qubits, kNpos);
    for (std::size_t i = 0; i < qubit_map.size(); ++i) {
        if (qubit_map[i] >= b.n_qubits || inverse[qubit_map[i]] != kNpos)
            throw std::invalid_argument("codes_equivalent: map is not a bijection");
        inverse[qubit_map[i]] = i;
    }

    auto permuted = [&](const SparseMatrix& m) {
        SparseMatrix out(m.rows, m.cols);
        for (std::size_t r = 0; r < m.rows; ++r) {
            std::vector<std::uint32_t> row;
            row.reserve(m.row_cols[r].size());
            for (std::uint32_t c : m.row_cols[r]) row.push_back(static_cast<std::uint32_t>(inverse[c]));
            std::sort(row.begin(), row.end());
            out.row_cols[r] = std::move(row);
        }
        return out;
    };

    return rowspace_equal(a.h_x, permuted(b.h_x)) && rowspace_equal(a.h_z, permuted(b.h_z));
}

std::vector<std::size_t> dual_qubit_bijection(const CssCode& qbp_code, const TdLabel& label, int L) {
    CellIndexer td_qubits(label.D, L, label.d_s);
    std::vector<std::size_t> map;
    map.reserve(qbp_code.n_qubits);
    for (const CellLabel& q : qbp_code.qubit_labels) {
        CellLabel dual = dual_map(q, label.D);
        map.push_back(td_qubits.rank_of(dual.directions, dual.locals));
    }
    return map;
}

}  // namespace qbp
