#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hnf::jordan {

// Jordan type of a unipotent operator: block size -> multiplicity, sizes
// strictly increasing, no zero entries. The empty type is the zero module.
class JordanType {
public:
    using Block = std::pair<std::uint64_t, std::uint64_t>;

    JordanType() = default;
    JordanType(std::initializer_list<Block> blocks);

    // Sums multiplicities of repeated sizes and drops zero multiplicities.
    static JordanType from_blocks(std::vector<Block> blocks);

    // Rvalue overloads return by value so range-for over a temporary is safe.
    const std::vector<Block>& blocks() const& noexcept { return blocks_; }
    std::vector<Block> blocks() && noexcept { return std::move(blocks_); }
    bool empty() const noexcept { return blocks_.empty(); }
    std::uint64_t multiplicity(std::uint64_t d) const noexcept;
    std::uint64_t dimension() const;
    std::uint64_t largest() const noexcept { return blocks_.empty() ? 0 : blocks_.back().first; }

    bool operator==(const JordanType&) const = default;

private:
    std::vector<Block> blocks_;
};

// Unordered bag of (size, multiplicity) contributions, folded once at the end.
class Accumulator {
public:
    void add(std::uint64_t size, std::uint64_t mult);
    void add(const JordanType& j, std::uint64_t factor = 1);
    JordanType finish() &&;

private:
    std::vector<JordanType::Block> items_;
};

struct Term {
    int sign; // +1 or -1
    unsigned exponent;
    bool operator==(const Term&) const = default;
};

// n = sum of sign * 2^exponent, exponents strictly decreasing, signs
// alternating from +, of minimal length.
struct ConsecutiveOnesExpansion {
    std::vector<Term> terms;
    std::uint64_t value() const;
};

JordanType tensor_blocks(std::uint64_t m, std::uint64_t n);
JordanType tensor(const JordanType& a, const JordanType& b);
ConsecutiveOnesExpansion consecutive_ones(std::uint64_t n);
JordanType tensor_square_closed(std::uint64_t n);
std::uint64_t unique_odd_block(std::uint64_t m, std::uint64_t n);
// Closed-form guess for the odd block, validated against unique_odd_block
// in the tests rather than used as a source of truth.
std::uint64_t odd_block_formula(std::uint64_t m, std::uint64_t n);
JordanType wedge_block(std::uint64_t n);
JordanType wedge_square(const JordanType& j);
JordanType restrict_power(const JordanType& j, unsigned alpha);
JordanType induce_power(const JordanType& j, unsigned alpha);

// Read-only views into a process-wide table of small products; sizes past
// the table are computed on the fly.
const JordanType& tensor_blocks_cached(std::uint64_t m, std::uint64_t n, JordanType& scratch);
const JordanType& wedge_block_cached(std::uint64_t n, JordanType& scratch);

// Grammar: comma-separated d^m terms, ^1 optional; "" or "0" is the zero module.
JordanType parse(std::string_view text);
std::string to_string(const JordanType& j);
std::string to_string(const ConsecutiveOnesExpansion& e);

} // namespace hnf::jordan
