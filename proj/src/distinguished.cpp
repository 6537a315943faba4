#include "distinguished.hpp"

#include "enumerate.hpp"
#include "parallel.hpp"
#include "reps.hpp"

#include <chrono>
#include <mutex>

namespace hnf::distinguished {

using hesselink::EpsilonTaggedType;
using hesselink::SymplecticType;
using jordan::JordanType;

bool is_distinguished(const EpsilonTaggedType& t) {
    if (t.empty() || !hesselink::is_symplectic(t)) return false;
    for (const auto& e : t.entries())
        if (e.size % 2 != 0 || e.mult > 2 || !e.eps) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs check(item, report) for each work item in parallel and merges.
template <class Check>
Report sweep(const char* name, std::size_t items, unsigned threads, Check check) {
    const auto t0 = Clock::now();
    Report total;
    total.name = name;
    std::mutex m;
    parallel_for(items, threads, [&](std::size_t i) {
        Report local;
        try {
            check(i, local);
        } catch (const std::exception& e) {
            local.fail("item " + std::to_string(i) + " threw: " + e.what());
        }
        std::lock_guard lock(m);
        total.merge(local);
    });
    total.seconds = since(t0);
    return total;
}

template <class Visit>
Report partition_sweep(const char* name, std::uint64_t max_n, unsigned threads, Visit visit) {
    return sweep(name, max_n >= 2 ? max_n - 1 : 0, threads, [&](std::size_t i, Report& r) {
        enumerate::for_each_partition(i + 2, [&](const JordanType& j) {
            ++r.checked;
            visit(j, r);
        });
    });
}

bool is_odd_v_sum(const SymplecticType& s) {
    for (const auto& e : s.entries())
        if (!e.eps || e.mult != 1 || e.size % 4 != 2) return false;
    return true;
}

} // namespace

Report verify_prop_A_tensor(std::uint64_t max_n, unsigned threads) {
    return partition_sweep("prop A tensor", max_n, threads, [](const JordanType& j, Report& r) {
        const bool got = is_distinguished(reps::theorem_A(j).tensor_space);
        const bool want = j == JordanType{{2, 1}};
        if (got != want) r.fail(jordan::to_string(j) + ": tensor space distinguished = " + (got ? "yes" : "no"));
    });
}

Report verify_prop_A_irr(std::uint64_t max_n, unsigned threads) {
    return partition_sweep("prop A irreducible", max_n, threads, [](const JordanType& j, Report& r) {
        const bool got = is_distinguished(reps::theorem_A(j).irreducible);
        const std::uint64_t n = j.dimension();
        const bool want = j.blocks().size() == 1 && j.blocks()[0].second == 1 && (n == 2 || n == 3 || n == 5);
        if (got != want) r.fail(jordan::to_string(j) + ": irreducible distinguished = " + (got ? "yes" : "no"));
    });
}

Report verify_prop_tensor(std::uint64_t max_dim, unsigned threads) {
    std::vector<std::vector<SymplecticType>> by_half(max_dim / 2 + 1);
    for (std::uint64_t h = 1; 2 * h <= max_dim; ++h) by_half[h] = enumerate::symplectic_types(2 * h);
    const SymplecticType v2 = hesselink::V(2);

    return sweep("prop tensor", by_half.size(), threads, [&](std::size_t h1, Report& r) {
        if (h1 == 0) return;
        for (std::uint64_t h2 = h1; 4 * h1 * h2 <= max_dim; ++h2)
            for (const auto& a : by_half[h1])
                for (const auto& b : by_half[h2]) {
                    ++r.checked;
                    const auto t = hesselink::tensor_bilinear(a, b);
                    const bool got = is_distinguished(t);
                    const bool want = (a == v2 && is_odd_v_sum(b)) || (b == v2 && is_odd_v_sum(a));
                    const std::string tag = hesselink::to_string(a) + " x " + hesselink::to_string(b);
                    if (got != want) {
                        r.fail(tag + ": distinguished = " + (got ? "yes" : "no"));
                        continue;
                    }
                    if (want) {
                        const SymplecticType& other = (a == v2) ? b : a;
                        std::vector<hesselink::Entry> sq;
                        for (const auto& e : other.entries()) sq.push_back({e.size, 2, true});
                        if (!(t.tagged() == EpsilonTaggedType::from_entries(sq)))
                            r.fail(tag + ": product is " + hesselink::to_string(t));
                    }
                }
    });
}

Report verify_prop_C(std::uint64_t max_n, unsigned threads) {
    // One work item per (n, largest block) so the big dimensions split up.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (std::uint64_t n = 2; n <= max_n; ++n)
        for (std::uint64_t top = 2 * n; top >= 1; --top) items.emplace_back(n, top);
    const SymplecticType v4 = hesselink::V(4);

    return sweep("prop C", items.size(), threads, [&](std::size_t i, Report& r) {
        const auto [n, top] = items[i];
        const SymplecticType regular = hesselink::V(2 * n);
        const bool regular_ok = n == 2 || n == 3 || n == 5;
        const bool split_ok = n == 2 || n == 6;
        const SymplecticType split = hesselink::orthogonal_sum(hesselink::V(2), hesselink::V(2 * n - 2));
        enumerate::for_each_symplectic_largest(2 * n, top, [&](const SymplecticType& s) {
            ++r.checked;
            const auto c = reps::theorem_C(s);
            const bool wedge = is_distinguished(c.wedge_space);
            if (wedge != (s == v4)) r.fail(hesselink::to_string(s) + ": wedge distinguished = " + (wedge ? "yes" : "no"));
            const bool irr = is_distinguished(c.irreducible);
            const bool want = (regular_ok && s == regular) || (split_ok && s == split);
            if (irr != want) r.fail(hesselink::to_string(s) + ": irreducible distinguished = " + (irr ? "yes" : "no"));
        });
    });
}

} // namespace hnf::distinguished
