#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hnf::oracle {

// Dense matrix over GF(2), rows packed into 64-bit words. Vectors are
// 1 x n matrices or rows of a larger matrix; operators act on columns.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) noexcept {
        auto& w = data_[r * words_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    void flip(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    std::uint64_t* row(std::size_t r) noexcept { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const noexcept { return data_.data() + r * words_; }
    void xor_row(std::size_t dst, const std::uint64_t* src) noexcept;
    Gf2Matrix row_matrix(std::size_t r) const;

    bool is_zero() const noexcept;
    bool operator==(const Gf2Matrix&) const = default;

    Gf2Matrix transpose() const;
    std::size_t rank() const;
    // Rows form a basis of {x : A x = 0}.
    Gf2Matrix kernel() const;
    std::optional<Gf2Matrix> inverse() const;
    // X with A X = B, if one exists.
    std::optional<Gf2Matrix> solve(const Gf2Matrix& b) const;

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);

    std::string dump() const;

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

Gf2Matrix kronecker(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix block_diag(const Gf2Matrix& a, const Gf2Matrix& b);
// Vertical stack of two matrices with equal column counts.
Gf2Matrix stack(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix power(const Gf2Matrix& a, std::uint64_t k);

// x^T G y for 1 x n row vectors.
bool form(const Gf2Matrix& g, const std::uint64_t* x, const std::uint64_t* y);
// A x for a packed row vector x, result as a 1 x rows matrix.
Gf2Matrix apply(const Gf2Matrix& a, const std::uint64_t* x);

} // namespace hnf::oracle
