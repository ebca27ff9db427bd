#include <doctest.h>

#include "qbp/gf2.hpp"
#include "qbp/poly.hpp"

#include "helpers.hpp"

using namespace qbp;
using namespace qbp::test;

TEST_CASE("rref of identity and rank-deficient matrices") {
    RrefResult id = rref(BitMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.reduced == BitMatrix::identity(3));

    // repetition-code checks: rows sum to zero, any two independent
    RrefResult rep = rref(bm({"110", "011", "101"}));
    CHECK(rep.rank == 2);
    CHECK(rep.pivot_cols == std::vector<std::size_t>{0, 1});

    // multiplication by e_1(3) from degree 1 to degree 2
    MulMatrix mt = multiplication_matrix(elementary_symmetric(3, 1), 1, full_support(3));
    CHECK(mt.m == bm({"110", "101", "011"}));
    CHECK(rref(mt.m).rank == 2);
}

TEST_CASE("rref handles empty matrices") {
    CHECK(rref(BitMatrix(0, 5)).rank == 0);
    CHECK(rref(BitMatrix(4, 0)).rank == 0);
    CHECK(rank(BitMatrix(0, 0)) == 0);
}

TEST_CASE("nullspace_basis dimensions and contents") {
    CHECK(nullspace_basis(BitMatrix::identity(4)).rows() == 0);

    BitMatrix rep_kernel = nullspace_basis(bm({"110", "011", "101"}));
    REQUIRE(rep_kernel.rows() == 1);
    CHECK(rep_kernel.row_copy(0) == bv("111"));

    BitMatrix even = nullspace_basis(bm({"111"}));
    CHECK(even.rows() == 2);
}

TEST_CASE("rowspace_contains") {
    BitMatrix m = bm({"110", "011"});
    CHECK(rowspace_contains(m, bv("000")));
    CHECK(rowspace_contains(m, bv("101")));  // sum of the two rows
    CHECK_FALSE(rowspace_contains(bm({"110"}), bv("001")));
    CHECK_THROWS_AS(rowspace_contains(m, bv("1100")), std::invalid_argument);
}

TEST_CASE("rowspace_equal") {
    BitMatrix a = bm({"110", "011"});
    CHECK(rowspace_equal(a, a));
    CHECK(rowspace_equal(a, bm({"101", "011"})));
    CHECK_FALSE(rowspace_equal(BitMatrix::identity(2), bm({"11"})));
    CHECK_THROWS_AS(rowspace_equal(a, bm({"11"})), std::invalid_argument);
}

TEST_CASE("matmul basics") {
    BitMatrix a = bm({"101", "110"});
    CHECK(matmul(a, BitMatrix::identity(3)) == a);

    BitMatrix v = bm({"11"});
    BitMatrix prod = matmul(v, transpose(v));
    CHECK(prod.rows() == 1);
    CHECK(prod.row_is_zero(0));  // 1 + 1 = 0

    CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
}

TEST_CASE("rref is idempotent on random matrices") {
    SplitMix64 rng(11);
    for (int it = 0; it < 12; ++it) {
        std::size_t r = 1 + rng.below(200);
        std::size_t c = 1 + rng.below(200);
        BitMatrix m = random_bitmatrix(r, c, rng, 0.3);
        RrefResult first = rref(m);
        RrefResult second = rref(first.reduced);
        CHECK(second.reduced == first.reduced);
        CHECK(second.rank == first.rank);
    }
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
    SplitMix64 rng(12);
    for (int it = 0; it < 20; ++it) {
        std::size_t r = 1 + rng.below(40);
        std::size_t c = 1 + rng.below(40);
        BitMatrix m = random_bitmatrix(r, c, rng, 0.4);
        BitMatrix ns = nullspace_basis(m);
        CHECK(rank(m) + ns.rows() == c);
        if (ns.rows() > 0) {
            BitMatrix prod = matmul(m, transpose(ns));
            for (std::size_t i = 0; i < prod.rows(); ++i) CHECK(prod.row_is_zero(i));
        }
    }
}

TEST_CASE("rowspace_equal is an equivalence relation") {
    SplitMix64 rng(13);
    for (int it = 0; it < 10; ++it) {
        std::size_t c = 4 + rng.below(20);
        BitMatrix a = random_bitmatrix(3 + rng.below(6), c, rng, 0.4);
        // b, c_mat: row operations on a, so all three share a row space
        BitMatrix b = a;
        for (std::size_t r = 1; r < b.rows(); ++r) {
            if (rng.next() & 1) b.xor_rows(r, r - 1);
        }
        BitMatrix c_mat = b;
        for (std::size_t r = 0; r + 1 < c_mat.rows(); ++r) {
            if (rng.next() & 1) c_mat.xor_rows(r, r + 1);
        }
        CHECK(rowspace_equal(a, a));
        CHECK(rowspace_equal(a, b));
        CHECK(rowspace_equal(b, a));
        CHECK(rowspace_equal(b, c_mat));
        CHECK(rowspace_equal(a, c_mat));  // transitivity witness
    }
}

TEST_CASE("sparse rank agrees with dense rank") {
    SplitMix64 rng(14);
    SUBCASE("dense-path sizes") {
        for (int it = 0; it < 10; ++it) {
            std::size_t r = 1 + rng.below(30);
            std::size_t c = 1 + rng.below(30);
            BitMatrix m = random_bitmatrix(r, c, rng, 0.3);
            CHECK(rank(to_sparse(m)) == rank(m));
        }
    }
    SUBCASE("coordinate-path sizes") {
        // cols > 4096 at density well below 1% takes the coordinate route
        SparseMatrix s(150, 5000);
        for (std::size_t r = 0; r < s.rows; ++r) {
            std::vector<std::uint32_t> row;
            for (int k = 0; k < 4; ++k) {
                std::uint32_t c = static_cast<std::uint32_t>(rng.below(5000));
                row.push_back(c);
            }
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            s.set_row(r, std::move(row));
        }
        CHECK(s.density() < 0.01);
        CHECK(rank(s) == rank(to_dense(s)));
    }
}

TEST_CASE("sparse matmul agrees with dense matmul") {
    SplitMix64 rng(15);
    for (int it = 0; it < 10; ++it) {
        std::size_t a_r = 1 + rng.below(12), inner = 1 + rng.below(12), b_c = 1 + rng.below(12);
        BitMatrix a = random_bitmatrix(a_r, inner, rng, 0.4);
        BitMatrix b = random_bitmatrix(inner, b_c, rng, 0.4);
        CHECK(to_dense(matmul(to_sparse(a), to_sparse(b))) == matmul(a, b));
    }
}

TEST_CASE("Eliminator tracks rank and membership") {
    SplitMix64 rng(16);
    for (int it = 0; it < 10; ++it) {
        std::size_t r = 1 + rng.below(20), c = 1 + rng.below(20);
        BitMatrix m = random_bitmatrix(r, c, rng, 0.4);
        Eliminator e(c);
        for (std::size_t i = 0; i < r; ++i) e.insert(m.row_copy(i));
        CHECK(e.rank() == rank(m));
        for (std::size_t i = 0; i < r; ++i) CHECK(e.contains(m.row_copy(i)));
    }
}

TEST_CASE("SparseMatrix validates positions") {
    SparseMatrix s(2, 3);
    CHECK_THROWS_AS(s.set_row(0, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(s.set_row(0, {3}), std::invalid_argument);
    s.set_row(0, {2, 0});
    CHECK(s.row_cols[0] == std::vector<std::uint32_t>{0, 2});
}
