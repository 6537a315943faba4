#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hnf {

// Precondition failure on an otherwise well-formed value.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text could not be parsed; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A tagged type breaks one of the parity laws at the given block size.
class ConstraintViolation : public std::runtime_error {
public:
    ConstraintViolation(const std::string& what, std::uint64_t block)
        : std::runtime_error(what), block_(block) {}
    std::uint64_t block() const noexcept { return block_; }

private:
    std::uint64_t block_;
};

class DegenerateForm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotUnipotent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic. Multiplicities grow quadratically, so every
// accumulation goes through these.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

inline std::uint64_t checked_shl(std::uint64_t a, unsigned k) {
    if (a == 0) return 0;
    if (k >= 64 || a > (UINT64_MAX >> k))
        throw std::overflow_error("64-bit overflow in shift");
    return a << k;
}

inline unsigned nu2(std::uint64_t n) { return static_cast<unsigned>(__builtin_ctzll(n)); }

inline unsigned floor_log2(std::uint64_t n) { return 63u - static_cast<unsigned>(__builtin_clzll(n)); }

} // namespace hnf
