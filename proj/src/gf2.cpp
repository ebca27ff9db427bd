#include "qbp/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qbp {

void BitVector::xor_with(const BitVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVector::xor_with: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (Word x : w_) w += std::popcount(x);
    return w;
}

bool BitVector::is_zero() const {
    for (Word x : w_) if (x) return false;
    return true;
}

std::size_t BitVector::first_set(std::size_t from) const {
    if (from >= n_) return kNpos;
    std::size_t wi = from / kWordBits;
    Word x = w_[wi] & (~Word(0) << (from % kWordBits));
    while (true) {
        if (x) return wi * kWordBits + std::countr_zero(x);
        if (++wi == w_.size()) return kNpos;
        x = w_[wi];
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src, std::size_t from_word) {
    Word* d = data_.data() + dst * wpr_;
    const Word* s = data_.data() + src * wpr_;
    for (std::size_t i = from_word; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * wpr_, data_.begin() + (a + 1) * wpr_,
                     data_.begin() + b * wpr_);
}

std::size_t BitMatrix::row_first_set(std::size_t r, std::size_t from) const {
    if (from >= cols_) return kNpos;
    const Word* w = row_words(r);
    std::size_t wi = from / kWordBits;
    Word x = w[wi] & (~Word(0) << (from % kWordBits));
    while (true) {
        if (x) return wi * kWordBits + std::countr_zero(x);
        if (++wi == wpr_) return kNpos;
        x = w[wi];
    }
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    const Word* w = row_words(r);
    std::size_t n = 0;
    for (std::size_t i = 0; i < wpr_; ++i) n += std::popcount(w[i]);
    return n;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const Word* w = row_words(r);
    for (std::size_t i = 0; i < wpr_; ++i) if (w[i]) return false;
    return true;
}

BitVector BitMatrix::row_copy(std::size_t r) const {
    BitVector v(cols_);
    std::copy(row_words(r), row_words(r) + wpr_, v.words());
    return v;
}

void BitMatrix::row_assign(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::row_assign: size mismatch");
    std::copy(v.words(), v.words() + wpr_, row_words(r));
}

void BitMatrix::xor_into(BitVector& v, std::size_t r) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::xor_into: size mismatch");
    Word* d = v.words();
    const Word* s = row_words(r);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void SparseMatrix::set_row(std::size_t r, std::vector<std::uint32_t> cols_of_row) {
    std::sort(cols_of_row.begin(), cols_of_row.end());
    if (std::adjacent_find(cols_of_row.begin(), cols_of_row.end()) != cols_of_row.end())
        throw std::invalid_argument("SparseMatrix: duplicate position");
    if (!cols_of_row.empty() && cols_of_row.back() >= cols)
        throw std::invalid_argument("SparseMatrix: column out of bounds");
    row_cols.at(r) = std::move(cols_of_row);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row_cols) n += r.size();
    return n;
}

double SparseMatrix::density() const {
    if (rows == 0 || cols == 0) return 0.0;
    return static_cast<double>(nnz()) / (static_cast<double>(rows) * static_cast<double>(cols));
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.reduced = m;
    BitMatrix& r = res.reduced;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t piv = kNpos;
        for (std::size_t i = pr; i < m.rows(); ++i) {
            if (r.get(i, c)) { piv = i; break; }
        }
        if (piv == kNpos) continue;
        r.swap_rows(pr, piv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != pr && r.get(i, c)) r.xor_rows(i, pr, c / kWordBits);
        }
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const BitMatrix& m) {
    // Insertion echelon: each row is reduced by the pivot rows seen so far,
    // keyed by leading column. Avoids the full column sweep of rref().
    BitMatrix w = m;
    std::vector<std::size_t> pivot_row_of_col(m.cols(), kNpos);
    std::size_t rk = 0;
    for (std::size_t r = 0; r < w.rows(); ++r) {
        std::size_t lead = w.row_first_set(r);
        while (lead != kNpos) {
            std::size_t p = pivot_row_of_col[lead];
            if (p == kNpos) {
                pivot_row_of_col[lead] = r;
                ++rk;
                break;
            }
            w.xor_rows(r, p, lead / kWordBits);
            lead = w.row_first_set(r, lead + 1);
        }
    }
    return rk;
}

namespace {

// Working row for sparse elimination: coordinate form until it fills in,
// bit-packed afterwards.
struct WorkRow {
    std::vector<std::uint32_t> sp;  // sorted columns, valid when !packed
    std::vector<Word> bits;         // valid when packed
    bool packed = false;
    std::uint32_t lead = 0;         // first set column; row is never empty once stored

    void pack(std::size_t cols) {
        bits.assign(words_for(cols), 0);
        for (std::uint32_t c : sp) bits[c / kWordBits] ^= Word(1) << (c % kWordBits);
        sp.clear();
        sp.shrink_to_fit();
        packed = true;
    }
};

std::size_t packed_first_set(const std::vector<Word>& w, std::size_t from_word) {
    for (std::size_t i = from_word; i < w.size(); ++i) {
        if (w[i]) return i * kWordBits + std::countr_zero(w[i]);
    }
    return kNpos;
}

std::size_t sparse_rank(const SparseMatrix& m) {
    const std::size_t pack_threshold = std::max<std::size_t>(m.cols / 32, 64);
    std::vector<int32_t> pivot_of_col(m.cols, -1);
    std::vector<WorkRow> pivots;
    std::size_t rk = 0;
    std::vector<std::uint32_t> merged;
    for (std::size_t r = 0; r < m.rows; ++r) {
        WorkRow cur;
        cur.sp = m.row_cols[r];
        bool empty = cur.sp.empty();
        if (!empty) cur.lead = cur.sp.front();
        while (!empty) {
            int32_t p = pivot_of_col[cur.lead];
            if (p < 0) {
                pivot_of_col[cur.lead] = static_cast<int32_t>(pivots.size());
                pivots.push_back(std::move(cur));
                ++rk;
                break;
            }
            const WorkRow& pv = pivots[static_cast<std::size_t>(p)];
            if (!cur.packed && pv.packed) cur.pack(m.cols);
            if (!cur.packed) {
                // sparse ^= sparse
                merged.clear();
                std::set_symmetric_difference(cur.sp.begin(), cur.sp.end(),
                                              pv.sp.begin(), pv.sp.end(),
                                              std::back_inserter(merged));
                cur.sp.swap(merged);
                if (cur.sp.size() > pack_threshold) cur.pack(m.cols);
            } else if (!pv.packed) {
                for (std::uint32_t c : pv.sp) cur.bits[c / kWordBits] ^= Word(1) << (c % kWordBits);
            } else {
                for (std::size_t i = cur.lead / kWordBits; i < cur.bits.size(); ++i)
                    cur.bits[i] ^= pv.bits[i];
            }
            if (cur.packed) {
                std::size_t nl = packed_first_set(cur.bits, cur.lead / kWordBits);
                if (nl == kNpos) { empty = true; break; }
                cur.lead = static_cast<std::uint32_t>(nl);
            } else {
                if (cur.sp.empty()) { empty = true; break; }
                cur.lead = cur.sp.front();
            }
        }
    }
    return rk;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    if (m.cols > 4096 && m.density() < 0.01) return sparse_rank(m);
    return rank(to_dense(m));
}

BitMatrix nullspace_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    BitMatrix basis(m.cols() - rr.rank, m.cols());
    std::size_t bi = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis.set(bi, f);
        for (std::size_t k = 0; k < rr.rank; ++k) {
            if (rr.reduced.get(k, f)) basis.set(bi, rr.pivot_cols[k]);
        }
        ++bi;
    }
    // Contract check: every basis row must be annihilated by m.
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            bool dot = false;
            const Word* a = m.row_words(r);
            const Word* b = basis.row_words(i);
            for (std::size_t w = 0; w < m.words_per_row(); ++w)
                dot ^= (std::popcount(a[w] & b[w]) & 1) != 0;
            if (dot) throw std::logic_error("nullspace_basis: verification failed");
        }
    }
    return basis;
}

bool rowspace_contains(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("rowspace_contains: length mismatch");
    RrefResult rr = rref(m);
    BitVector x = v;
    for (std::size_t k = 0; k < rr.rank; ++k) {
        if (x.test(rr.pivot_cols[k])) rr.reduced.xor_into(x, k);
    }
    return x.is_zero();
}

namespace {

bool rows_contained(const RrefResult& rr, const BitMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
        BitVector x = b.row_copy(r);
        for (std::size_t k = 0; k < rr.rank; ++k) {
            if (x.test(rr.pivot_cols[k])) rr.reduced.xor_into(x, k);
        }
        if (!x.is_zero()) return false;
    }
    return true;
}

}  // namespace

bool rowspace_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_equal: column count mismatch");
    RrefResult ra = rref(a);
    RrefResult rb = rref(b);
    if (ra.rank != rb.rank) return false;
    return rows_contained(ra, b) && rows_contained(rb, a);
}

bool rowspace_equal(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("rowspace_equal: column count mismatch");
    return rowspace_equal(to_dense(a), to_dense(b));
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    // c.row(i) ^= b.row(k) for every set a(i,k).
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Word* cr = c.row_words(i);
        const Word* ar = a.row_words(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            Word x = ar[w];
            while (x) {
                std::size_t k = w * kWordBits + std::countr_zero(x);
                x &= x - 1;
                const Word* br = b.row_words(k);
                for (std::size_t j = 0; j < b.words_per_row(); ++j) cr[j] ^= br[j];
            }
        }
    }
    return c;
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: dimension mismatch");
    SparseMatrix c(a.rows, b.cols);
    std::vector<std::uint8_t> acc(b.cols, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < a.rows; ++i) {
        touched.clear();
        for (std::uint32_t k : a.row_cols[i]) {
            for (std::uint32_t j : b.row_cols[k]) {
                if (!acc[j]) touched.push_back(j);
                acc[j] ^= 1;
            }
        }
        std::vector<std::uint32_t> row;
        for (std::uint32_t j : touched) {
            if (acc[j]) row.push_back(j);
            acc[j] = 0;
        }
        std::sort(row.begin(), row.end());
        c.row_cols[i] = std::move(row);
    }
    return c;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = m.row_first_set(r);
        while (c != kNpos) {
            t.set(c, r);
            c = m.row_first_set(r, c + 1);
        }
    }
    return t;
}

SparseMatrix transpose(const SparseMatrix& m) {
    SparseMatrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::uint32_t c : m.row_cols[r]) t.row_cols[c].push_back(static_cast<std::uint32_t>(r));
    }
    return t;
}

BitMatrix to_dense(const SparseMatrix& m) {
    BitMatrix d(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::uint32_t c : m.row_cols[r]) d.set(r, c);
    }
    return d;
}

SparseMatrix to_sparse(const BitMatrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = m.row_first_set(r);
        while (c != kNpos) {
            s.row_cols[r].push_back(static_cast<std::uint32_t>(c));
            c = m.row_first_set(r, c + 1);
        }
    }
    return s;
}

bool Eliminator::insert(BitVector v) {
    if (v.size() != cols_) throw std::invalid_argument("Eliminator::insert: size mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.test(pivots_[k])) v.xor_with(rows_[k]);
    }
    std::size_t lead = v.first_set();
    if (lead == kNpos) return false;
    for (auto& r : rows_) {
        if (r.test(lead)) r.xor_with(v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

BitVector Eliminator::reduce(BitVector v) const {
    if (v.size() != cols_) throw std::invalid_argument("Eliminator::reduce: size mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.test(pivots_[k])) v.xor_with(rows_[k]);
    }
    return v;
}

}  // namespace qbp
