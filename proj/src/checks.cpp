#include "checks.hpp"

#include "enumerate.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "reps.hpp"

#include <chrono>
#include <mutex>

namespace hnf::checks {

using hesselink::EpsilonTaggedType;
using hesselink::SymplecticType;
using jordan::JordanType;
using oracle::BilinearSpace;

namespace {

using Clock = std::chrono::steady_clock;

struct Pair {
    Report main, parity;
};

template <class Check>
Report sweep(const char* name, std::size_t items, unsigned threads, Report& parity, Check check) {
    const auto t0 = Clock::now();
    Report total;
    total.name = name;
    std::mutex m;
    parallel_for(items, threads, [&](std::size_t i) {
        Pair local;
        try {
            check(i, local);
        } catch (const std::exception& e) {
            local.main.fail("item " + std::to_string(i) + " threw: " + e.what());
        }
        std::lock_guard lock(m);
        total.merge(local.main);
        parity.merge(local.parity);
    });
    total.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return total;
}

// Parity laws of the epsilon tags on one concrete space.
void parity_laws(const BilinearSpace& a, const std::string& label, Report& r) {
    const bool degenerate = oracle::is_degenerate(a);
    ++r.checked;
    for (const auto& e : oracle::raw_tags(a)) {
        if (e.eps && e.size % 2 != 0) r.fail(label + ": eps = 1 on odd size " + std::to_string(e.size));
        if (!degenerate && e.mult % 2 != 0 && !e.eps)
            r.fail(label + ": odd multiplicity at " + std::to_string(e.size) + " with eps = 0");
    }
}

void expect(Report& r, const std::string& label, const EpsilonTaggedType& got, const EpsilonTaggedType& want) {
    ++r.checked;
    if (!(got == want)) r.fail(label + ": oracle " + hesselink::to_string(got) + ", rule " + hesselink::to_string(want));
}

std::vector<SymplecticType> symplectic_up_to(std::uint64_t lo, std::uint64_t hi) {
    std::vector<SymplecticType> out;
    for (std::uint64_t d = lo; d <= hi; d += 2)
        for (auto& s : enumerate::symplectic_types(d)) out.push_back(std::move(s));
    return out;
}

} // namespace

Report oracle_theorem_A(std::uint64_t max_n, unsigned threads, Report& parity) {
    std::vector<JordanType> all;
    for (std::uint64_t n = 2; n <= max_n; ++n)
        for (auto& j : enumerate::partitions(n)) all.push_back(std::move(j));
    return sweep("oracle theorem A", all.size(), threads, parity, [&](std::size_t i, Pair& p) {
        const JordanType& j = all[i];
        const std::string label = "A " + jordan::to_string(j);
        const auto rule = reps::theorem_A(j);
        const auto space = oracle::dual_tensor_space(oracle::jordan_matrix(j));
        parity_laws(space.space, label + " tensor", p.parity);
        expect(p.main, label + " tensor", oracle::hesselink_of_space(space.space), rule.tensor_space);
        const auto q = oracle::subquotient(space.space, space.marked);
        parity_laws(q, label + " irreducible", p.parity);
        expect(p.main, label + " irreducible", oracle::hesselink_of_space(q), rule.irreducible);
    });
}

Report oracle_theorem_C(std::uint64_t max_dim, unsigned threads, Report& parity) {
    const auto all = symplectic_up_to(4, max_dim);
    return sweep("oracle theorem C", all.size(), threads, parity, [&](std::size_t i, Pair& p) {
        const SymplecticType& s = all[i];
        const std::string label = "C " + hesselink::to_string(s);
        const auto rule = reps::theorem_C(s);
        const BilinearSpace base = oracle::build(s);
        parity_laws(base, label + " natural", p.parity);
        expect(p.main, label + " natural", oracle::hesselink_of_space(base), s.tagged());
        const auto w = oracle::wedge_space(base);
        parity_laws(w.space, label + " wedge", p.parity);
        expect(p.main, label + " wedge", oracle::hesselink_of_space(w.space), rule.wedge_space);
        const auto q = oracle::subquotient(w.space, w.marked);
        parity_laws(q, label + " irreducible", p.parity);
        expect(p.main, label + " irreducible", oracle::hesselink_of_space(q), rule.irreducible);
    });
}

Report oracle_jordan(std::uint64_t max_dim, unsigned threads) {
    std::vector<JordanType> all;
    for (std::uint64_t n = 1; n <= max_dim; ++n)
        for (auto& j : enumerate::partitions(n)) all.push_back(std::move(j));
    Report parity;
    // Products are capped at 6 * max_dim to keep the rank profiles small.
    const std::uint64_t product_cap = 6 * max_dim;
    return sweep("oracle jordan", all.size(), threads, parity, [&](std::size_t i, Pair& p) {
        const JordanType& a = all[i];
        const auto ua = oracle::jordan_matrix(a);
        for (std::size_t k = i; k < all.size(); ++k) {
            const JordanType& b = all[k];
            if (a.dimension() * b.dimension() > product_cap) continue;
            ++p.main.checked;
            const auto got = oracle::jordan_of_operator(oracle::kronecker(ua, oracle::jordan_matrix(b)));
            if (!(got == jordan::tensor(a, b)))
                p.main.fail("tensor " + jordan::to_string(a) + " x " + jordan::to_string(b) + ": oracle " +
                            jordan::to_string(got));
        }
        if (a.dimension() >= 2) {
            ++p.main.checked;
            if (!(oracle::jordan_of_operator(oracle::wedge_operator(ua)) == jordan::wedge_square(a)))
                p.main.fail("wedge " + jordan::to_string(a));
        }
        for (unsigned alpha = 0; alpha <= 3; ++alpha) {
            ++p.main.checked;
            const auto got = oracle::jordan_of_operator(oracle::power(ua, std::uint64_t{1} << alpha));
            if (!(got == jordan::restrict_power(a, alpha)))
                p.main.fail("restrict " + jordan::to_string(a) + " by 2^" + std::to_string(alpha));
        }
    });
}

Report oracle_bilinear(std::uint64_t max_product, unsigned threads, Report& parity) {
    const auto all = symplectic_up_to(2, max_product / 2);
    return sweep("oracle bilinear", all.size(), threads, parity, [&](std::size_t i, Pair& p) {
        const SymplecticType& a = all[i];
        const BilinearSpace sa = oracle::build(a);
        const std::string la = hesselink::to_string(a);
        for (std::size_t k = i; k < all.size(); ++k) {
            const SymplecticType& b = all[k];
            if (a.dimension() * b.dimension() <= max_product) {
                const auto t = oracle::tensor_space(sa, oracle::build(b));
                const std::string label = la + " x " + hesselink::to_string(b);
                parity_laws(t, label, p.parity);
                expect(p.main, label, oracle::hesselink_of_space(t), hesselink::tensor_bilinear(a, b).tagged());
            }
            if (a.dimension() + b.dimension() <= max_product / 2) {
                const auto s = oracle::direct_sum(sa, oracle::build(b));
                expect(p.main, la + " + " + hesselink::to_string(b), oracle::hesselink_of_space(s),
                       hesselink::orthogonal_sum(a, b).tagged());
            }
        }
        for (unsigned alpha = 1; alpha <= 3; ++alpha) {
            const BilinearSpace r{oracle::power(sa.u, std::uint64_t{1} << alpha), sa.gram};
            parity_laws(r, la + " restricted", p.parity);
            expect(p.main, la + " restricted by 2^" + std::to_string(alpha), oracle::hesselink_of_space(r),
                   hesselink::restrict_bilinear(a, alpha).tagged());
        }
    });
}

std::vector<Report> oracle_check(const OracleOptions& opt) {
    if (opt.max_dim > kLimits.max_dim || opt.max_sl > kLimits.max_sl || opt.max_product > kLimits.max_product ||
        opt.max_jordan > kLimits.max_jordan)
        throw InvalidArgument("oracle bounds exceed " + std::to_string(kLimits.max_dim) + "/" +
                              std::to_string(kLimits.max_sl) + "/" + std::to_string(kLimits.max_product) + "/" +
                              std::to_string(kLimits.max_jordan));
    Report parity;
    parity.name = "parity laws";
    const auto t0 = Clock::now();
    std::vector<Report> out;
    out.push_back(oracle_jordan(opt.max_jordan, opt.threads));
    out.push_back(oracle_bilinear(opt.max_product, opt.threads, parity));
    out.push_back(oracle_theorem_A(opt.max_sl, opt.threads, parity));
    out.push_back(oracle_theorem_C(opt.max_dim, opt.threads, parity));
    parity.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(parity);
    return out;
}

} // namespace hnf::checks
