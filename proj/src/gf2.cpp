#include "gf2.hpp"

#include "errors.hpp"

#include <bit>

namespace hnf::oracle {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void Gf2Matrix::xor_row(std::size_t dst, const std::uint64_t* src) noexcept {
    std::uint64_t* d = row(dst);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= src[w];
}

Gf2Matrix Gf2Matrix::row_matrix(std::size_t r) const {
    Gf2Matrix m(1, cols_);
    std::copy(row(r), row(r) + words_, m.row(0));
    return m;
}

bool Gf2Matrix::is_zero() const noexcept {
    for (auto w : data_)
        if (w) return false;
    return true;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

namespace {

// In-place reduced row echelon form over the first `limit` columns; returns
// the pivot column of each pivot row.
std::vector<std::size_t> eliminate(Gf2Matrix& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t w = 0; w < m.words(); ++w) std::swap(m.row(p)[w], m.row(r)[w]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, m.row(r));
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix m = *this;
    return eliminate(m, cols_).size();
}

Gf2Matrix Gf2Matrix::kernel() const {
    Gf2Matrix m = *this;
    const auto pivots = eliminate(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    Gf2Matrix k(cols_ - pivots.size(), cols_);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        k.set(out, f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.get(i, f)) k.set(out, pivots[i]);
        ++out;
    }
    return k;
}

std::optional<Gf2Matrix> Gf2Matrix::solve(const Gf2Matrix& b) const {
    if (b.rows() != rows_) throw InvalidArgument("solve: row count mismatch");
    Gf2Matrix aug(rows_, cols_ + b.cols());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) aug.set(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) aug.set(r, cols_ + c);
    }
    const auto pivots = eliminate(aug, cols_);
    for (std::size_t r = pivots.size(); r < rows_; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (aug.get(r, cols_ + c)) return std::nullopt;
    Gf2Matrix x(cols_, b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (aug.get(i, cols_ + c)) x.set(pivots[i], c);
    return x;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return solve(identity(rows_));
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product: shape mismatch");
    Gf2Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) c.xor_row(i, b.row(k));
    return c;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum: shape mismatch");
    Gf2Matrix c = a;
    for (std::size_t r = 0; r < a.rows(); ++r) c.xor_row(r, b.row(r));
    return c;
}

std::string Gf2Matrix::dump() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

Gf2Matrix kronecker(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (b.get(p, q)) k.set(i * b.rows() + p, j * b.cols() + q);
        }
    return k;
}

Gf2Matrix block_diag(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) m.set(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) m.set(a.rows() + r, a.cols() + c);
    return m;
}

Gf2Matrix stack(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.cols()) throw InvalidArgument("stack: column mismatch");
    Gf2Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) std::copy(a.row(r), a.row(r) + a.words(), m.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) std::copy(b.row(r), b.row(r) + b.words(), m.row(a.rows() + r));
    return m;
}

Gf2Matrix power(const Gf2Matrix& a, std::uint64_t k) {
    Gf2Matrix result = Gf2Matrix::identity(a.rows());
    Gf2Matrix base = a;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Gf2Matrix apply(const Gf2Matrix& a, const std::uint64_t* x) {
    Gf2Matrix y(1, a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        unsigned parity = 0;
        for (std::size_t w = 0; w < a.words(); ++w) parity ^= std::popcount(a.row(r)[w] & x[w]) & 1u;
        if (parity) y.set(0, r);
    }
    return y;
}

bool form(const Gf2Matrix& g, const std::uint64_t* x, const std::uint64_t* y) {
    const Gf2Matrix gy = apply(g, y);
    unsigned parity = 0;
    for (std::size_t w = 0; w < gy.words(); ++w) parity ^= std::popcount(gy.row(0)[w] & x[w]) & 1u;
    return parity != 0;
}

} // namespace hnf::oracle
