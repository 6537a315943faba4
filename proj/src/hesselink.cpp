#include "hesselink.hpp"

#include "errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <set>

namespace hnf::hesselink {

using jordan::JordanType;

EpsilonTaggedType::EpsilonTaggedType(std::initializer_list<Entry> entries)
    : EpsilonTaggedType(from_entries(std::vector<Entry>(entries))) {}

EpsilonTaggedType EpsilonTaggedType::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.size < b.size; });
    EpsilonTaggedType out;
    for (const auto& e : entries) {
        if (e.mult == 0) continue;
        if (e.size == 0) throw InvalidArgument("block size must be positive");
        if (!out.entries_.empty() && out.entries_.back().size == e.size) {
            auto& last = out.entries_.back();
            last.mult = checked_add(last.mult, e.mult);
            last.eps = last.eps || e.eps;
        } else {
            out.entries_.push_back(e);
        }
    }
    for (const auto& e : out.entries_)
        if (e.eps && e.size % 2 != 0)
            throw ConstraintViolation("odd block size " + std::to_string(e.size) + " cannot carry eps = 1", e.size);
    return out;
}

EpsilonTaggedType EpsilonTaggedType::tag(const JordanType& j, const std::vector<std::uint64_t>& eps_sizes) {
    std::vector<Entry> entries;
    entries.reserve(j.blocks().size());
    for (const auto& [d, m] : j.blocks()) {
        const bool e = std::find(eps_sizes.begin(), eps_sizes.end(), d) != eps_sizes.end();
        entries.push_back({d, m, e});
    }
    return from_entries(std::move(entries));
}

std::uint64_t EpsilonTaggedType::dimension() const {
    std::uint64_t dim = 0;
    for (const auto& e : entries_) dim = checked_add(dim, checked_mul(e.size, e.mult));
    return dim;
}

std::uint64_t EpsilonTaggedType::multiplicity(std::uint64_t d) const noexcept {
    for (const auto& e : entries_)
        if (e.size == d) return e.mult;
    return 0;
}

bool EpsilonTaggedType::eps(std::uint64_t d) const noexcept {
    for (const auto& e : entries_)
        if (e.size == d) return e.eps;
    return false;
}

JordanType EpsilonTaggedType::jordan() const {
    std::vector<JordanType::Block> b;
    b.reserve(entries_.size());
    for (const auto& e : entries_) b.emplace_back(e.size, e.mult);
    return JordanType::from_blocks(std::move(b));
}

bool is_symplectic(const EpsilonTaggedType& t) noexcept {
    for (const auto& e : t.entries())
        if (!e.eps && e.mult % 2 != 0) return false;
    return true;
}

SymplecticType validate_symplectic(const EpsilonTaggedType& t) {
    for (const auto& e : t.entries())
        if (!e.eps && e.mult % 2 != 0)
            throw ConstraintViolation("block size " + std::to_string(e.size) +
                                          " has odd multiplicity but eps = 0",
                                      e.size);
    return SymplecticType(t);
}

SymplecticType W(std::uint64_t d, std::uint64_t count) {
    return validate_symplectic(EpsilonTaggedType::from_entries({{d, checked_mul(2, count), false}}));
}

SymplecticType V(std::uint64_t d, std::uint64_t count) {
    if (d % 2 != 0) throw InvalidArgument("V(d) needs even d");
    return validate_symplectic(EpsilonTaggedType::from_entries({{d, count, true}}));
}

SymplecticType orthogonal_sum(const SymplecticType& a, const SymplecticType& b) {
    std::vector<Entry> all = a.entries();
    all.insert(all.end(), b.entries().begin(), b.entries().end());
    return validate_symplectic(EpsilonTaggedType::from_entries(std::move(all)));
}

namespace {

// One orthogonally indecomposable summand type with its number of copies.
struct Piece {
    std::uint64_t size; // d for W(d), 2k for V(2k)
    bool v;
    std::uint64_t copies;
};

std::vector<Piece> pieces(const SymplecticType& s) {
    std::vector<Piece> out;
    for (const auto& e : s.entries()) {
        if (e.eps)
            out.push_back({e.size, true, e.mult});
        else
            out.push_back({e.size, false, e.mult / 2});
    }
    return out;
}

} // namespace

SymplecticType tensor_bilinear(const SymplecticType& a, const SymplecticType& b) {
    std::vector<Entry> acc;
    JordanType scratch;
    for (const auto& p : pieces(a)) {
        for (const auto& q : pieces(b)) {
            const std::uint64_t copies = checked_mul(p.copies, q.copies);
            if (p.v && q.v) {
                const std::uint64_t l = p.size / 2, k = q.size / 2;
                const bool same = nu2(l) == nu2(k);
                const unsigned alpha = nu2(l);
                const JordanType& half = jordan::tensor_blocks_cached(l, k, scratch);
                int tagged = 0;
                for (const auto& [d, m] : half.blocks()) {
                    const bool eps = same && nu2(d) == alpha;
                    if (eps) {
                        ++tagged;
                        if (m != (std::uint64_t{1} << alpha))
                            throw std::logic_error("V x V: distinguished summand has unexpected multiplicity");
                    }
                    acc.push_back({2 * d, checked_mul(2 * m, copies), eps});
                }
                if (same && tagged != 1) throw std::logic_error("V x V: expected exactly one V-type summand");
            } else {
                // Any W factor makes the product paired; W x W doubles it.
                const std::uint64_t factor = (!p.v && !q.v) ? 4 : 2;
                const JordanType& t = jordan::tensor_blocks_cached(p.size, q.size, scratch);
                for (const auto& [d, m] : t.blocks())
                    acc.push_back({d, checked_mul(checked_mul(factor, m), copies), false});
            }
        }
    }
    return validate_symplectic(EpsilonTaggedType::from_entries(std::move(acc)));
}

SymplecticType restrict_bilinear(const SymplecticType& s, unsigned alpha) {
    if (alpha == 0) throw InvalidArgument("restrict_bilinear needs alpha >= 1");
    std::vector<Entry> acc;
    for (const auto& p : pieces(s)) {
        if (!p.v) {
            const auto r = jordan::restrict_power(JordanType{{p.size, 1}}, alpha);
            for (const auto& [d, m] : r.blocks()) acc.push_back({d, checked_mul(2 * m, p.copies), false});
            continue;
        }
        const std::uint64_t d = p.size / 2;
        if (alpha - 1 >= 63 || (std::uint64_t{1} << (alpha - 1)) > d) {
            // d = 0 * 2^(alpha-1) + d: only W(1)^d survives.
            acc.push_back({1, checked_mul(2 * d, p.copies), false});
            continue;
        }
        const std::uint64_t half = std::uint64_t{1} << (alpha - 1);
        if (alpha < 63 && d % (half * 2) == 0) {
            acc.push_back({d / half, checked_mul(half * 2, p.copies), true});
            continue;
        }
        const std::uint64_t a = d / half, r = d % half;
        acc.push_back({a + 1, checked_mul(2 * r, p.copies), false});
        acc.push_back({a, checked_mul(2 * (half - r), p.copies), false});
    }
    return validate_symplectic(EpsilonTaggedType::from_entries(std::move(acc)));
}

SymplecticType induce_bilinear(const SymplecticType& s, unsigned alpha) {
    if (alpha == 0) throw InvalidArgument("induce_bilinear needs alpha >= 1");
    std::vector<Entry> acc;
    for (const auto& e : s.entries()) acc.push_back({checked_shl(e.size, alpha), e.mult, e.eps});
    return validate_symplectic(EpsilonTaggedType::from_entries(std::move(acc)));
}

EpsilonTaggedType parse_tagged(std::string_view text) {
    if (detail::is_zero_literal(text) || text == "()") return {};
    detail::Cursor c(text);
    c.skip_space();
    const bool paren = c.accept('(');
    std::vector<Entry> entries;
    std::set<std::uint64_t> seen;
    while (true) {
        c.skip_space();
        const std::size_t at = c.pos();
        const std::uint64_t d = c.number("block size");
        if (d == 0) c.fail("block size must be positive", at);
        if (!c.accept('_')) c.fail("expected '_' followed by 0 or 1");
        const std::size_t eat = c.pos();
        const std::uint64_t e = c.number("eps tag");
        if (e > 1) c.fail("eps tag must be 0 or 1", eat);
        if (e == 1 && d % 2 != 0) c.fail("odd block size cannot carry eps = 1", eat);
        std::uint64_t m = 1;
        if (c.accept('^')) {
            const std::size_t mat = c.pos();
            m = c.number("multiplicity");
            if (m == 0) c.fail("multiplicity must be positive", mat);
        }
        if (!seen.insert(d).second) c.fail("duplicate block size " + std::to_string(d), at);
        entries.push_back({d, m, e == 1});
        c.skip_space();
        if (paren && c.accept(')')) {
            c.skip_space();
            if (!c.done()) c.fail("trailing input after ')'");
            break;
        }
        if (c.done()) {
            if (paren) c.fail("missing ')'");
            break;
        }
        if (!c.accept(',')) c.fail("expected ',' or end of input");
    }
    auto t = EpsilonTaggedType::from_entries(std::move(entries));
    (void)t.dimension();
    return t;
}

SymplecticType parse_symplectic(std::string_view text) { return validate_symplectic(parse_tagged(text)); }

namespace {

std::string join(const EpsilonTaggedType& t, const char* sep) {
    std::string out;
    for (const auto& e : t.entries()) {
        if (!out.empty()) out += sep;
        out += std::to_string(e.size) + (e.eps ? "_1" : "_0");
        if (e.mult != 1) out += '^' + std::to_string(e.mult);
    }
    return out;
}

} // namespace

std::string to_string(const EpsilonTaggedType& t) { return t.empty() ? "0" : join(t, ","); }

std::string to_cell(const EpsilonTaggedType& t) { return "(" + join(t, ", ") + ")"; }

} // namespace hnf::hesselink
