#pragma once

#include <string>
#include <vector>

#include "qbp/assembly.hpp"
#include "qbp/gf2.hpp"
#include "qbp/poly.hpp"
#include "qbp/rng.hpp"

namespace qbp::test {

inline BitMatrix bm(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] == '1') m.set(i, j);
        }
    }
    return m;
}

inline BitVector bv(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
    }
    return v;
}

inline BitMatrix random_bitmatrix(std::size_t rows, std::size_t cols, SplitMix64& rng,
                                  double fill = 0.5) {
    BitMatrix m(rows, cols);
    const std::uint64_t cut = static_cast<std::uint64_t>(fill * 18446744073709551615.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (rng.next() < cut) m.set(r, c);
        }
    }
    return m;
}

inline Monomial mono(const std::vector<int>& idx) { return monomial_from_indices(idx); }

inline Poly poly(int degree, const std::vector<std::vector<int>>& monos) {
    std::vector<Monomial> terms;
    for (const auto& m : monos) terms.push_back(monomial_from_indices(m));
    return make_poly(degree, std::move(terms));
}

inline Poly random_homogeneous(int p, int degree, SplitMix64& rng) {
    std::vector<Monomial> all = monomials_of_degree(full_support(p), degree);
    std::vector<Monomial> terms;
    for (Monomial m : all) {
        if (rng.next() & 1) terms.push_back(m);
    }
    return make_poly(degree, std::move(terms));
}

inline ClassicalCode random_classical(std::size_t n_bits, std::size_t n_checks, SplitMix64& rng) {
    SparseMatrix h(n_checks, n_bits);
    for (std::size_t r = 0; r < n_checks; ++r) {
        std::vector<std::uint32_t> row;
        for (std::size_t c = 0; c < n_bits; ++c) {
            if (rng.next() & 1) row.push_back(static_cast<std::uint32_t>(c));
        }
        h.set_row(r, std::move(row));
    }
    return make_classical_code(std::move(h));
}

}  // namespace qbp::test
