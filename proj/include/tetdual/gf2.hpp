#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tetdual {

/// Dense bit-packed vector over Z2.
class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
    void clear();

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    /// Index of the lowest / highest set bit, or npos.
    std::size_t lowest() const;
    std::size_t highest() const;

    /// Parity of the bitwise AND with `other`.
    bool dot(const BitVector& other) const;

    /// XOR `other` into this vector, touching only the words up to and
    /// including the one holding bit `upto`.
    void xor_prefix(const BitVector& other, std::size_t upto);

    BitVector& operator^=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

    /// Indices of set bits, increasing.
    std::vector<std::size_t> ones() const;

    void resize(std::size_t size);

    static BitVector from_indices(std::size_t size, std::span<const std::uint32_t> indices);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over Z2. Elimination routines pivot on the
/// leftmost available column and the topmost available row, so every result
/// is reproducible.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_rows(std::vector<BitVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool value) { rows_[r].assign(c, value); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector column(std::size_t c) const;

    Gf2Matrix transpose() const;
    BitVector multiply(const BitVector& x) const;
    Gf2Matrix multiply(const Gf2Matrix& other) const;

    struct Echelon;
    Echelon rref() const;

    std::size_t rank() const;

    /// Some x with A x = b (free variables set to zero), or nullopt.
    std::optional<BitVector> solve(const BitVector& b) const;

    /// Basis of { x : A x = 0 }, one vector per free column in increasing order.
    std::vector<BitVector> kernel_basis() const;

    std::optional<Gf2Matrix> inverse() const;

    bool operator==(const Gf2Matrix& other) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct Gf2Matrix::Echelon {
    Gf2Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivot_cols; // pivot column of row i
};

/// Incremental column reduction over Z2 (the standard boundary-matrix
/// reduction). Stored columns have pairwise distinct highest set bits. Each
/// column may carry a tag vector that is XORed along with it, which lets
/// callers recover the combination of inputs a residual came from.
class ColumnReducer {
public:
    explicit ColumnReducer(std::size_t ambient, std::size_t tag_bits = 0);

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return columns_.size(); }

    /// Eliminates every set bit of `v` that is a stored pivot, scanning from
    /// the top. The result is the canonical representative of `v` modulo the
    /// span of stored columns.
    void reduce(BitVector& v, BitVector* tag = nullptr) const;

    /// Reduces `v` until its highest bit is not a pivot (cheaper than reduce).
    void reduce_top(BitVector& v, BitVector* tag = nullptr) const;

    /// Reduces `v` and stores it when nonzero. Returns true when stored.
    bool insert(BitVector v, BitVector tag = {});

    bool contains(BitVector v) const;

    bool is_pivot(std::size_t row) const { return pivot_of_row_[row] != npos_; }
    std::size_t tag_bits() const { return tag_bits_; }

private:
    static constexpr std::size_t npos_ = static_cast<std::size_t>(-1);

    std::size_t ambient_;
    std::size_t tag_bits_;
    std::vector<BitVector> columns_;
    std::vector<BitVector> tags_;
    std::vector<std::size_t> pivot_of_row_;
};

} // namespace tetdual
