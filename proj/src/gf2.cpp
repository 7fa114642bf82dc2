#include "tetdual/gf2.hpp"

#include <bit>
#include <cassert>
#include <utility>

#include "tetdual/error.hpp"

namespace tetdual {

void BitVector::clear()
{
    for (auto& w : words_) w = 0;
}

bool BitVector::any() const
{
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::lowest() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
}

std::size_t BitVector::highest() const
{
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    return npos;
}

bool BitVector::dot(const BitVector& other) const
{
    assert(size_ == other.size_);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

void BitVector::xor_prefix(const BitVector& other, std::size_t upto)
{
    const std::size_t last = upto >> 6;
    for (std::size_t i = 0; i <= last; ++i) words_[i] ^= other.words_[i];
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other)
{
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVector::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

void BitVector::resize(std::size_t size)
{
    size_ = size;
    words_.resize((size + 63) / 64, 0);
    // drop bits beyond the new size so equality stays meaningful
    if (size & 63) words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::uint32_t> indices)
{
    BitVector v(size);
    for (auto i : indices) v.flip(i);
    return v;
}

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n)
{
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<BitVector> rows, std::size_t cols)
{
    Gf2Matrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
        if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    m.rows_ = std::move(rows);
    return m;
}

BitVector Gf2Matrix::column(std::size_t c) const
{
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c)) v.set(r);
    return v;
}

Gf2Matrix Gf2Matrix::transpose() const
{
    Gf2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c : rows_[r].ones()) t.set(c, r, true);
    return t;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const
{
    assert(x.size() == cols_);
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (rows_[r].dot(x)) y.set(r);
    return y;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const
{
    assert(cols_ == other.rows());
    Gf2Matrix out(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto k : rows_[r].ones()) out.rows_[r] ^= other.rows_[k];
    return out;
}

Gf2Matrix::Echelon Gf2Matrix::rref() const
{
    Echelon e{*this, {}};
    auto& rows = e.reduced.rows_;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows.size(); ++c) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].test(c)) rows[r] ^= rows[next];
        e.pivot_cols.push_back(c);
        ++next;
    }
    return e;
}

std::size_t Gf2Matrix::rank() const
{
    // forward elimination only
    auto rows = rows_;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows.size(); ++c) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t r = next + 1; r < rows.size(); ++r)
            if (rows[r].test(c)) rows[r] ^= rows[next];
        ++next;
    }
    return next;
}

std::optional<BitVector> Gf2Matrix::solve(const BitVector& b) const
{
    assert(b.size() == rows());
    Gf2Matrix aug(rows(), cols_ + 1);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (auto c : rows_[r].ones()) aug.set(r, c, true);
        if (b.test(r)) aug.set(r, cols_, true);
    }
    auto e = aug.rref();
    BitVector x(cols_);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == cols_) return std::nullopt; // 0 = 1
        if (e.reduced.get(i, cols_)) x.set(e.pivot_cols[i]);
    }
    return x;
}

std::vector<BitVector> Gf2Matrix::kernel_basis() const
{
    auto e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols_);
        v.set(f);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            if (e.reduced.get(i, f)) v.set(e.pivot_cols[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const
{
    if (rows() != cols_) return std::nullopt;
    const std::size_t n = cols_;
    Gf2Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (auto c : rows_[r].ones()) aug.set(r, c, true);
        aug.set(r, n + r, true);
    }
    auto e = aug.rref();
    if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    Gf2Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.reduced.get(r, n + c));
    return inv;
}

// ---------------------------------------------------------------------------

ColumnReducer::ColumnReducer(std::size_t ambient, std::size_t tag_bits)
    : ambient_(ambient), tag_bits_(tag_bits), pivot_of_row_(ambient, npos_)
{
}

void ColumnReducer::reduce(BitVector& v, BitVector* tag) const
{
    assert(v.size() == ambient_);
    const auto words = v.words();
    // Scan words from the top; stored columns only touch bits at or below
    // their pivot, so a single downward pass suffices.
    for (std::size_t wi = words.size(); wi-- > 0;) {
        while (true) {
            std::uint64_t w = v.words()[wi];
            bool changed = false;
            while (w) {
                const std::size_t bit = wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w));
                w &= ~(std::uint64_t{1} << (bit & 63));
                const std::size_t col = pivot_of_row_[bit];
                if (col == npos_) continue;
                v.xor_prefix(columns_[col], bit);
                if (tag) *tag ^= tags_[col];
                changed = true;
                break;
            }
            if (!changed) break;
        }
    }
}

void ColumnReducer::reduce_top(BitVector& v, BitVector* tag) const
{
    assert(v.size() == ambient_);
    for (std::size_t top = v.highest(); top != BitVector::npos; top = v.highest()) {
        const std::size_t col = pivot_of_row_[top];
        if (col == npos_) return;
        v.xor_prefix(columns_[col], top);
        if (tag) *tag ^= tags_[col];
    }
}

bool ColumnReducer::insert(BitVector v, BitVector tag)
{
    if (tag.size() == 0) tag = BitVector(tag_bits_);
    reduce_top(v, &tag);
    const std::size_t top = v.highest();
    if (top == BitVector::npos) return false;
    pivot_of_row_[top] = columns_.size();
    columns_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    return true;
}

bool ColumnReducer::contains(BitVector v) const
{
    reduce_top(v);
    return v.none();
}

} // namespace tetdual
