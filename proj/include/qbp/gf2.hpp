#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qbp {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

inline std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_(words_for(n), 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & Word(1); }
    void set(std::size_t i) { w_[i / kWordBits] |= Word(1) << (i % kWordBits); }
    void flip(std::size_t i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    void xor_with(const BitVector& o);
    std::size_t weight() const;
    bool is_zero() const;
    /// Index of the first set bit at or after `from`, kNpos if none.
    std::size_t first_set(std::size_t from = 0) const;

    Word* words() { return w_.data(); }
    const Word* words() const { return w_.data(); }
    std::size_t word_count() const { return w_.size(); }

    bool operator==(const BitVector&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Word> w_;
};

/// Dense bit-packed matrix over GF(2), row-major. Dimensions are fixed at
/// construction; elements are mutable.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & Word(1);
    }
    void set(std::size_t r, std::size_t c) {
        data_[r * wpr_ + c / kWordBits] |= Word(1) << (c % kWordBits);
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + c / kWordBits] ^= Word(1) << (c % kWordBits);
    }

    /// row dst ^= row src, starting at word index `from_word`.
    void xor_rows(std::size_t dst, std::size_t src, std::size_t from_word = 0);
    void swap_rows(std::size_t a, std::size_t b);
    std::size_t row_first_set(std::size_t r, std::size_t from = 0) const;
    std::size_t row_weight(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;

    BitVector row_copy(std::size_t r) const;
    void row_assign(std::size_t r, const BitVector& v);
    /// v ^= row r (sizes must match).
    void xor_into(BitVector& v, std::size_t r) const;

    Word* row_words(std::size_t r) { return data_.data() + r * wpr_; }
    const Word* row_words(std::size_t r) const { return data_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<Word> data_;
};

/// Coordinate-list sparse matrix over GF(2): per-row sorted column indices,
/// no duplicates (a listed position carries value 1).
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::uint32_t>> row_cols;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row_cols(r) {}

    /// Sorts, bounds-checks and rejects duplicate positions.
    void set_row(std::size_t r, std::vector<std::uint32_t> cols_of_row);

    std::size_t nnz() const;
    double density() const;
    bool is_zero() const;

    bool operator==(const SparseMatrix&) const = default;
};

struct RrefResult {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form; pivots are the first nonzero column of
/// each surviving row, taken in column order.
RrefResult rref(const BitMatrix& m);

/// Rank only (row echelon, no back-substitution).
std::size_t rank(const BitMatrix& m);

/// Rank of a sparse matrix. Large, very sparse inputs (cols > 4096 and
/// density below 1%) are eliminated in coordinate form with column-order
/// pivoting; anything else goes through the dense bit-packed path.
std::size_t rank(const SparseMatrix& m);

/// Rows form a basis of the right kernel {v : m v = 0}; row count equals
/// cols - rank(m). Every returned row is re-checked by multiplication.
BitMatrix nullspace_basis(const BitMatrix& m);

/// True iff v lies in the GF(2) row space of m.
bool rowspace_contains(const BitMatrix& m, const BitVector& v);

/// True iff the row spaces coincide (equal rank plus mutual containment).
bool rowspace_equal(const BitMatrix& a, const BitMatrix& b);
bool rowspace_equal(const SparseMatrix& a, const SparseMatrix& b);

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);

BitMatrix transpose(const BitMatrix& m);
SparseMatrix transpose(const SparseMatrix& m);

BitMatrix to_dense(const SparseMatrix& m);
SparseMatrix to_sparse(const BitMatrix& m);

/// Incremental RREF maintainer. Inserted rows are kept mutually reduced;
/// reduce() projects a vector onto the complement of the stored row space.
class Eliminator {
public:
    explicit Eliminator(std::size_t cols) : cols_(cols) {}

    /// Fully reduces v against the stored rows; inserts the remainder if it
    /// is nonzero (back-eliminating its pivot from the stored rows).
    /// Returns true iff the rank grew.
    bool insert(BitVector v);
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qbp
