#include "jordan.hpp"

#include "errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>

namespace hnf::jordan {

namespace {

constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 62;
constexpr std::uint64_t kTensorCache = 256;
constexpr std::uint64_t kWedgeCache = 1024;

void check_size(std::uint64_t d) {
    if (d == 0) throw InvalidArgument("block size must be positive");
    if (d >= kMaxSize) throw std::overflow_error("block size too large");
}

} // namespace

JordanType::JordanType(std::initializer_list<Block> blocks)
    : JordanType(from_blocks(std::vector<Block>(blocks))) {}

JordanType JordanType::from_blocks(std::vector<Block> blocks) {
    std::sort(blocks.begin(), blocks.end());
    JordanType out;
    for (const auto& [d, m] : blocks) {
        if (m == 0) continue;
        if (d == 0) throw InvalidArgument("block size must be positive");
        if (!out.blocks_.empty() && out.blocks_.back().first == d)
            out.blocks_.back().second = checked_add(out.blocks_.back().second, m);
        else
            out.blocks_.emplace_back(d, m);
    }
    return out;
}

std::uint64_t JordanType::multiplicity(std::uint64_t d) const noexcept {
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), Block{d, 0});
    return (it != blocks_.end() && it->first == d) ? it->second : 0;
}

std::uint64_t JordanType::dimension() const {
    std::uint64_t dim = 0;
    for (const auto& [d, m] : blocks_) dim = checked_add(dim, checked_mul(d, m));
    return dim;
}

void Accumulator::add(std::uint64_t size, std::uint64_t mult) {
    if (mult != 0) items_.emplace_back(size, mult);
}

void Accumulator::add(const JordanType& j, std::uint64_t factor) {
    if (factor == 0) return;
    for (const auto& [d, m] : j.blocks()) items_.emplace_back(d, checked_mul(m, factor));
}

JordanType Accumulator::finish() && { return JordanType::from_blocks(std::move(items_)); }

std::uint64_t ConsecutiveOnesExpansion::value() const {
    __int128 v = 0;
    for (const auto& t : terms) v += t.sign * (static_cast<__int128>(1) << t.exponent);
    return static_cast<std::uint64_t>(v);
}

JordanType tensor_blocks(std::uint64_t m, std::uint64_t n) {
    check_size(m);
    check_size(n);
    if (m > n) std::swap(m, n);

    // Case (iii) reflects block sizes d -> 2^{a+1} - d, so the running result
    // of the nested product is pushed through an affine map sign*d + offset.
    std::int64_t sign = 1, offset = 0;
    Accumulator acc;
    auto emit = [&](std::uint64_t d, std::uint64_t k) {
        acc.add(static_cast<std::uint64_t>(sign * static_cast<std::int64_t>(d) + offset), k);
    };

    while (true) {
        if (m == 1) {
            emit(n, 1);
            break;
        }
        const std::uint64_t p = std::uint64_t{1} << floor_log2(n);
        const std::uint64_t top = 2 * p;
        if (n == p) {
            emit(p, m);
            break;
        }
        if (m + n > top) {
            emit(top, m + n - top);
            const std::uint64_t m2 = top - n, n2 = top - m;
            m = m2;
            n = n2;
        } else {
            offset += sign * static_cast<std::int64_t>(top);
            sign = -sign;
            const std::uint64_t r = top - n;
            n = std::max(m, r);
            m = std::min(m, r);
        }
    }
    return std::move(acc).finish();
}

namespace {

struct TensorTable {
    std::vector<JordanType> cells; // upper triangle, m <= n

    TensorTable() {
        cells.resize(kTensorCache * (kTensorCache + 1) / 2);
        for (std::uint64_t n = 1; n <= kTensorCache; ++n)
            for (std::uint64_t m = 1; m <= n; ++m) cells[index(m, n)] = tensor_blocks(m, n);
    }
    static std::size_t index(std::uint64_t m, std::uint64_t n) { return (n - 1) * n / 2 + (m - 1); }
};

struct WedgeTable {
    std::vector<JordanType> cells;
    WedgeTable() {
        cells.reserve(kWedgeCache);
        for (std::uint64_t n = 1; n <= kWedgeCache; ++n) cells.push_back(wedge_block(n));
    }
};

} // namespace

const JordanType& tensor_blocks_cached(std::uint64_t m, std::uint64_t n, JordanType& scratch) {
    if (m > n) std::swap(m, n);
    if (m >= 1 && n <= kTensorCache) {
        static const TensorTable table;
        return table.cells[TensorTable::index(m, n)];
    }
    scratch = tensor_blocks(m, n);
    return scratch;
}

const JordanType& wedge_block_cached(std::uint64_t n, JordanType& scratch) {
    if (n >= 1 && n <= kWedgeCache) {
        static const WedgeTable table;
        return table.cells[n - 1];
    }
    scratch = wedge_block(n);
    return scratch;
}

JordanType tensor(const JordanType& a, const JordanType& b) {
    Accumulator acc;
    JordanType scratch;
    for (const auto& [d1, n1] : a.blocks())
        for (const auto& [d2, n2] : b.blocks())
            acc.add(tensor_blocks_cached(d1, d2, scratch), checked_mul(n1, n2));
    return std::move(acc).finish();
}

ConsecutiveOnesExpansion consecutive_ones(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("consecutive-ones expansion needs n >= 1");
    // Runs of ones in binary, highest first; a run covering bits b..a-1
    // contributes +2^a - 2^b, except that a trailing run of length one
    // contributes +2^b alone.
    ConsecutiveOnesExpansion e;
    int bit = 63;
    while (bit >= 0) {
        if (!((n >> bit) & 1)) {
            --bit;
            continue;
        }
        const unsigned a = static_cast<unsigned>(bit) + 1;
        while (bit >= 0 && ((n >> bit) & 1)) --bit;
        const unsigned b = static_cast<unsigned>(bit + 1);
        const bool last = (n & ((std::uint64_t{1} << b) - 1)) == 0;
        if (last && a == b + 1) {
            e.terms.push_back({+1, b});
        } else {
            e.terms.push_back({+1, a});
            e.terms.push_back({-1, b});
        }
    }
    return e;
}

JordanType tensor_square_closed(std::uint64_t n) {
    check_size(n);
    const auto e = consecutive_ones(n).terms;
    const std::size_t k = e.size();
    Accumulator acc;
    for (std::size_t i = 0; i < k; ++i) {
        __int128 d = static_cast<__int128>(1) << e[i].exponent;
        if (i + 1 < k) {
            // 1-based indices i+1 and j+1 in (-1)^{i+j+1}; same parity as i+j+1 here.
            for (std::size_t j = i + 1; j < k; ++j) {
                const int s = ((i + j + 1) % 2 == 0) ? 1 : -1;
                d -= s * (static_cast<__int128>(1) << (e[j].exponent + 1));
            }
        }
        if (d <= 0) throw std::logic_error("closed form produced a non-positive multiplicity");
        acc.add(std::uint64_t{1} << e[i].exponent, static_cast<std::uint64_t>(d));
    }
    return std::move(acc).finish();
}

std::uint64_t unique_odd_block(std::uint64_t m, std::uint64_t n) {
    if (m % 2 == 0 || n % 2 == 0) throw InvalidArgument("unique_odd_block needs odd sizes");
    JordanType scratch;
    const JordanType& t = tensor_blocks_cached(m, n, scratch);
    std::uint64_t found = 0;
    for (const auto& [d, k] : t.blocks()) {
        if (d % 2 == 0) continue;
        if (found != 0 || k != 1) throw std::logic_error("odd block is not unique");
        found = d;
    }
    if (found == 0) throw std::logic_error("no odd block found");
    return found;
}

std::uint64_t odd_block_formula(std::uint64_t m, std::uint64_t n) {
    if (m % 2 == 0 || n % 2 == 0) throw InvalidArgument("odd_block_formula needs odd sizes");
    if (m > n) std::swap(m, n);
    __int128 v = n;
    for (unsigned i = 1; i < 64; ++i) {
        if (!((m >> i) & 1)) continue;
        const __int128 p = static_cast<__int128>(1) << i;
        v += ((n >> i) & 1) ? -p : p;
    }
    if (v <= 0) throw std::logic_error("odd block formula went non-positive");
    return static_cast<std::uint64_t>(v);
}

JordanType wedge_block(std::uint64_t n) {
    check_size(n);
    Accumulator acc;
    while (n >= 2) {
        const std::uint64_t q = std::uint64_t{1} << (floor_log2(n - 1) + 1); // q/2 < n <= q
        acc.add(q, n - q / 2 - 1);
        acc.add(3 * q / 2 - n, 1);
        n = q - n;
    }
    return std::move(acc).finish();
}

JordanType wedge_square(const JordanType& j) {
    Accumulator acc;
    JordanType scratch;
    const auto& b = j.blocks();
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto [d, n] = b[i];
        acc.add(wedge_block_cached(d, scratch), n);
        if (n > 1) {
            const std::uint64_t pairs = (n % 2 == 0) ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
            acc.add(tensor_blocks_cached(d, d, scratch), pairs);
        }
        for (std::size_t k = i + 1; k < b.size(); ++k)
            acc.add(tensor_blocks_cached(d, b[k].first, scratch), checked_mul(n, b[k].second));
    }
    return std::move(acc).finish();
}

JordanType restrict_power(const JordanType& j, unsigned alpha) {
    Accumulator acc;
    for (const auto& [d, n] : j.blocks()) {
        if (alpha >= 63 || (std::uint64_t{1} << alpha) > d) {
            acc.add(1, checked_mul(d, n));
            continue;
        }
        const std::uint64_t p = std::uint64_t{1} << alpha;
        const std::uint64_t a = d >> alpha, r = d & (p - 1);
        acc.add(a + 1, checked_mul(r, n));
        acc.add(a, checked_mul(p - r, n));
    }
    return std::move(acc).finish();
}

JordanType induce_power(const JordanType& j, unsigned alpha) {
    Accumulator acc;
    for (const auto& [d, n] : j.blocks()) acc.add(checked_shl(d, alpha), n);
    return std::move(acc).finish();
}

JordanType parse(std::string_view text) {
    if (detail::is_zero_literal(text)) return {};
    detail::Cursor c(text);
    std::vector<JordanType::Block> blocks;
    std::set<std::uint64_t> seen;
    while (true) {
        c.skip_space();
        const std::size_t at = c.pos();
        const std::uint64_t d = c.number("block size");
        if (d == 0) c.fail("block size must be positive", at);
        std::uint64_t m = 1;
        if (c.accept('^')) {
            const std::size_t mat = c.pos();
            m = c.number("multiplicity");
            if (m == 0) c.fail("multiplicity must be positive", mat);
        }
        if (!seen.insert(d).second) c.fail("duplicate block size " + std::to_string(d), at);
        blocks.emplace_back(d, m);
        c.skip_space();
        if (c.done()) break;
        if (!c.accept(',')) c.fail("expected ',' or end of input");
    }
    auto j = JordanType::from_blocks(std::move(blocks));
    (void)j.dimension(); // rejects types whose dimension overflows
    return j;
}

std::string to_string(const JordanType& j) {
    if (j.empty()) return "0";
    std::string out;
    for (const auto& [d, m] : j.blocks()) {
        if (!out.empty()) out += ',';
        out += std::to_string(d);
        if (m != 1) out += '^' + std::to_string(m);
    }
    return out;
}

std::string to_string(const ConsecutiveOnesExpansion& e) {
    std::string out;
    for (const auto& t : e.terms) {
        if (!out.empty() || t.sign < 0) out += t.sign > 0 ? "+" : "-";
        out += "2^" + std::to_string(t.exponent);
    }
    return out;
}

} // namespace hnf::jordan
