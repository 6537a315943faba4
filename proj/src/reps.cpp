#include "reps.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>

namespace hnf::reps {

using hesselink::Entry;
using hesselink::EpsilonTaggedType;
using jordan::JordanType;

namespace {

void push_unique(std::vector<std::uint64_t>& v, std::uint64_t x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

// Powers 2^b > 1 in the consecutive-ones expansion of d.
void add_expansion_powers(std::vector<std::uint64_t>& out, std::uint64_t d) {
    for (const auto& t : jordan::consecutive_ones(d).terms)
        if (t.exponent >= 1) push_unique(out, std::uint64_t{1} << t.exponent);
}

void decrement(std::vector<JordanType::Block>& b, std::uint64_t d, std::uint64_t by) {
    for (auto& [size, m] : b) {
        if (size != d) continue;
        if (m < by) throw std::logic_error("prime rule removes more blocks than present");
        m -= by;
        return;
    }
    throw std::logic_error("prime rule needs a block that is not present");
}

EpsilonTaggedType retag(const JordanType& j, const EpsilonTaggedType& source,
                        std::uint64_t override_size, int override_eps) {
    std::vector<Entry> e;
    for (const auto& [d, m] : j.blocks()) {
        bool eps = source.eps(d);
        if (d == override_size && override_eps >= 0) eps = override_eps == 1;
        e.push_back({d, m, eps});
    }
    return EpsilonTaggedType::from_entries(std::move(e));
}

} // namespace

JordanType prime_jordan(const JordanType& lambda, std::uint64_t n, unsigned alpha, PrimeCase& which) {
    std::vector<JordanType::Block> b = lambda.blocks();
    if (n % 2 != 0) {
        which = PrimeCase::OddN;
        decrement(b, 1, 1);
    } else if (alpha == 0) {
        which = PrimeCase::EvenAlphaZero;
        decrement(b, 1, 2);
    } else {
        const std::uint64_t p = std::uint64_t{1} << alpha;
        if ((n >> alpha) % 2 == 0) {
            which = PrimeCase::EvenQuotient;
            decrement(b, p, 2);
            b.emplace_back(p - 1, 2);
        } else if (alpha > 1) {
            which = PrimeCase::OddQuotient;
            decrement(b, p, 1);
            b.emplace_back(p - 2, 1);
        } else {
            which = PrimeCase::AlphaOne;
            decrement(b, 2, 1);
        }
    }
    return JordanType::from_blocks(std::move(b));
}

TheoremAResult theorem_A(const JordanType& j) {
    if (j.empty()) throw InvalidArgument("theorem_A needs a non-empty Jordan type");
    const std::uint64_t n = j.dimension();
    if (n < 2) throw InvalidArgument("theorem_A needs dimension n >= 2");

    std::uint64_t g = 0;
    std::vector<std::uint64_t> eps;
    for (const auto& [d, m] : j.blocks()) {
        g = std::gcd(g, d);
        add_expansion_powers(eps, d);
    }

    TheoremAResult r;
    r.alpha = nu2(g);
    const JordanType lambda = jordan::tensor(j, j);
    r.tensor_space = EpsilonTaggedType::tag(lambda, eps);

    const JordanType lp = prime_jordan(lambda, n, r.alpha, r.prime_case);
    if (r.prime_case == PrimeCase::OddQuotient)
        r.irreducible = retag(lp, r.tensor_space, (std::uint64_t{1} << r.alpha) - 2, 1);
    else
        r.irreducible = retag(lp, r.tensor_space, 0, -1);
    return r;
}

TheoremCResult theorem_C(const hesselink::SymplecticType& s) {
    const std::uint64_t dim = s.dimension();
    if (dim < 4) throw InvalidArgument("theorem_C needs dimension 2n >= 4");
    const std::uint64_t n = dim / 2;

    std::uint64_t g = 0;
    std::vector<std::uint64_t> eps;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> vs; // (d_r, n_r) with V(2 d_r)
    std::vector<std::uint64_t> w_sizes;
    JordanType scratch;
    for (const auto& e : s.entries()) {
        if (e.eps) {
            const std::uint64_t d = e.size / 2;
            g = std::gcd(g, d);
            vs.emplace_back(d, e.mult);
            for (const auto& [b, m] : jordan::wedge_block_cached(e.size, scratch).blocks())
                if (b > 1) push_unique(eps, b);
        } else {
            g = std::gcd(g, e.size);
            w_sizes.push_back(e.size);
            add_expansion_powers(eps, e.size);
        }
    }
    for (std::size_t r = 0; r < vs.size(); ++r) {
        for (std::size_t q = r; q < vs.size(); ++q) {
            if (q == r && vs[r].second < 2) continue;
            const unsigned beta = nu2(vs[r].first);
            if (nu2(vs[q].first) != beta) continue;
            const std::uint64_t odd = jordan::unique_odd_block(vs[r].first >> beta, vs[q].first >> beta);
            push_unique(eps, checked_shl(odd, beta + 1));
        }
    }

    TheoremCResult r;
    r.alpha = nu2(g);
    const JordanType lambda = jordan::wedge_square(s.jordan());
    r.wedge_space = EpsilonTaggedType::tag(lambda, eps);

    const JordanType lp = prime_jordan(lambda, n, r.alpha, r.prime_case);
    std::vector<Entry> e;
    const std::uint64_t p = std::uint64_t{1} << r.alpha;
    const bool adjust = n % 2 == 0 && r.alpha > 0;
    bool w_at_alpha = false;
    for (auto d : w_sizes) w_at_alpha = w_at_alpha || nu2(d) == r.alpha;
    for (const auto& [d, m] : lp.blocks()) {
        bool tag = r.wedge_space.eps(d);
        if (adjust && d == p) tag = w_at_alpha;
        if (adjust && r.alpha > 1 && d == p - 2) tag = (n >> r.alpha) % 2 == 1;
        e.push_back({d, m, tag});
    }
    r.irreducible = EpsilonTaggedType::from_entries(std::move(e));
    return r;
}

} // namespace hnf::reps
