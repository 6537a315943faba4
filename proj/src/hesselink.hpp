#pragma once

#include "jordan.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hnf::hesselink {

struct Entry {
    std::uint64_t size;
    std::uint64_t mult;
    bool eps;
    bool operator==(const Entry&) const = default;
};

// Jordan type plus the epsilon tag of an alternating form, one tag per size.
// Invariant: eps implies an even size.
class EpsilonTaggedType {
public:
    EpsilonTaggedType() = default;
    EpsilonTaggedType(std::initializer_list<Entry> entries);

    // Repeated sizes merge: multiplicities add, tags are or-ed. This is the
    // normalization V(2d)^a + W(2d)^b = V(2d)^(a+2b).
    static EpsilonTaggedType from_entries(std::vector<Entry> entries);
    static EpsilonTaggedType tag(const jordan::JordanType& j, const std::vector<std::uint64_t>& eps_sizes);

    const std::vector<Entry>& entries() const& noexcept { return entries_; }
    std::vector<Entry> entries() && noexcept { return std::move(entries_); }
    bool empty() const noexcept { return entries_.empty(); }
    std::uint64_t dimension() const;
    std::uint64_t multiplicity(std::uint64_t d) const noexcept;
    bool eps(std::uint64_t d) const noexcept;
    jordan::JordanType jordan() const;

    bool operator==(const EpsilonTaggedType&) const = default;

private:
    std::vector<Entry> entries_;
};

// An EpsilonTaggedType that also satisfies eps = 0 => even multiplicity,
// i.e. the class of a non-degenerate form.
class SymplecticType {
public:
    SymplecticType() = default;
    const EpsilonTaggedType& tagged() const noexcept { return t_; }
    operator const EpsilonTaggedType&() const noexcept { return t_; }
    const std::vector<Entry>& entries() const& noexcept { return t_.entries(); }
    std::vector<Entry> entries() && noexcept { return std::move(t_).entries(); }
    std::uint64_t dimension() const { return t_.dimension(); }
    jordan::JordanType jordan() const { return t_.jordan(); }
    bool operator==(const SymplecticType&) const = default;

private:
    friend SymplecticType validate_symplectic(const EpsilonTaggedType&);
    explicit SymplecticType(EpsilonTaggedType t) : t_(std::move(t)) {}
    EpsilonTaggedType t_;
};

SymplecticType validate_symplectic(const EpsilonTaggedType& t);
bool is_symplectic(const EpsilonTaggedType& t) noexcept;

// Indecomposable building blocks; count copies of W(d) or V(d).
SymplecticType W(std::uint64_t d, std::uint64_t count = 1);
SymplecticType V(std::uint64_t d, std::uint64_t count = 1);

SymplecticType orthogonal_sum(const SymplecticType& a, const SymplecticType& b);
SymplecticType tensor_bilinear(const SymplecticType& a, const SymplecticType& b);
SymplecticType restrict_bilinear(const SymplecticType& s, unsigned alpha);
SymplecticType induce_bilinear(const SymplecticType& s, unsigned alpha);

// Grammar: comma-separated d_e^m terms, ^1 optional, e in {0,1}. Optional
// surrounding parentheses and spaces after commas are accepted, so table
// cells parse directly.
EpsilonTaggedType parse_tagged(std::string_view text);
SymplecticType parse_symplectic(std::string_view text);
std::string to_string(const EpsilonTaggedType& t);
// Table cell form: "(1_0^2, 2_1)".
std::string to_cell(const EpsilonTaggedType& t);

} // namespace hnf::hesselink
