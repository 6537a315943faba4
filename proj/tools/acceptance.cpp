// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: hnf_acceptance [golden-dir]

#include "checks.hpp"
#include "distinguished.hpp"
#include "errors.hpp"
#include "hesselink.hpp"
#include "jordan.hpp"
#include "parallel.hpp"
#include "tables.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hnf;
using hesselink::orthogonal_sum;
using hesselink::SymplecticType;
using hesselink::tensor_bilinear;
using hesselink::V;
using hesselink::W;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %d %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs,
                limit_seconds, in_time ? "" : ", too slow");
    std::fflush(stdout);
}

Outcome golden(const std::vector<std::string>& rows, const std::string& path) {
    const auto diffs = tables::diff(rows, tables::read_lines(path));
    if (diffs.empty()) return {true, std::to_string(rows.size()) + " rows match"};
    return {false, std::to_string(diffs.size()) + " differences, first: " + diffs.front()};
}

Outcome from_reports(const std::vector<Report>& reports) {
    Outcome out;
    std::uint64_t checked = 0, failed = 0;
    for (const auto& r : reports) {
        checked += r.checked;
        failed += r.failures;
        if (!r.ok() && out.ok) out.detail = r.name + ": " + (r.counterexamples.empty() ? "" : r.counterexamples[0]) + "; ";
        out.ok = out.ok && r.ok();
    }
    out.detail += std::to_string(checked) + " checked, " + std::to_string(failed) + " failed";
    return out;
}

SymplecticType sum(std::initializer_list<SymplecticType> parts) {
    SymplecticType acc;
    for (const auto& p : parts) acc = orthogonal_sum(acc, p);
    return acc;
}

// Expected V(2l) (x) V(2k) for l = 1, 2, 3 and k >= l.
SymplecticType family(std::uint64_t l, std::uint64_t k) {
    const std::uint64_t d = 2 * k;
    if (l == 1) return k % 2 == 0 ? W(d) : V(d, 2);
    if (l == 2) {
        switch (k % 4) {
        case 0: return W(d, 2);
        case 2: return V(d, 4);
        default: return sum({W(d - 2), W(d + 2)});
        }
    }
    switch (k % 4) {
    case 0: return W(d, 3);
    case 1: return sum({W(d - 2, 2), V(d + 4, 2)});
    case 2: return sum({W(d - 4), W(d), W(d + 4)});
    default: return sum({V(d - 4, 2), W(d + 2, 2)});
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : HNF_GOLDEN_DIR;
    const unsigned threads = default_threads();
    std::printf("threads: %u\n", threads);

    criterion(1, "table A 2..7 golden", 1, [&] { return golden(tables::table_A(2, 7), dir + "/table_a.txt"); });
    criterion(2, "table C 2..8 golden", 1, [&] { return golden(tables::table_C(2, 8), dir + "/table_c.txt"); });

    criterion(3, "closed form vs recursion, n <= 4096", 10, [] {
        for (std::uint64_t n = 1; n <= 4096; ++n)
            if (!(jordan::tensor_square_closed(n) == jordan::tensor_blocks(n, n)))
                return Outcome{false, "differs at n = " + std::to_string(n)};
        return Outcome{true, "4096 sizes agree"};
    });

    criterion(4, "V(2)/V(4)/V(6) (x) V(2k) families, k <= 200", 1, [] {
        std::uint64_t checked = 0;
        for (std::uint64_t l = 1; l <= 3; ++l)
            for (std::uint64_t k = l; k <= 200; ++k) {
                ++checked;
                if (!(tensor_bilinear(V(2 * l), V(2 * k)) == family(l, k)))
                    return Outcome{false, "l = " + std::to_string(l) + ", k = " + std::to_string(k)};
            }
        return Outcome{true, std::to_string(checked) + " products agree"};
    });

    Report parity;
    parity.name = "parity";
    criterion(5, "oracle sweep, symplectic dim <= 12 and SL n <= 8", 300, [&] {
        return from_reports({checks::oracle_theorem_C(12, threads, parity),
                             checks::oracle_theorem_A(8, threads, parity)});
    });
    criterion(6, "epsilon parity laws on every oracle space", 60, [&] {
        const auto bilinear = checks::oracle_bilinear(24, threads, parity);
        Outcome out = from_reports({parity});
        out.ok = out.ok && bilinear.ok();
        return out;
    });

    criterion(7, "distinguished propositions", 120, [&] {
        return from_reports({distinguished::verify_prop_A_tensor(40, threads),
                             distinguished::verify_prop_A_irr(40, threads),
                             distinguished::verify_prop_tensor(60, threads), distinguished::verify_prop_C(40, threads)});
    });

    criterion(8, "wedge_block(2n) lemmas and the odd-block formula", 60, [] {
        for (std::uint64_t n = 1; n <= 200; ++n) {
            const auto w = jordan::wedge_block(2 * n);
            const auto& b = w.blocks();
            if (b.front().first != (std::uint64_t{1} << nu2(n)) || b.front().second != 1)
                return Outcome{false, "smallest block wrong at n = " + std::to_string(n)};
            bool small = true;
            for (const auto& [d, k] : b) {
                if (k % 2 == 0) return Outcome{false, "even multiplicity at n = " + std::to_string(n)};
                small = small && k <= 2;
            }
            if (small != (n == 1 || n == 2 || n == 3 || n == 5))
                return Outcome{false, "multiplicity bound wrong at n = " + std::to_string(n)};
        }
        std::uint64_t pairs = 0;
        for (std::uint64_t m = 1; m <= 513; m += 2)
            for (std::uint64_t n = m; n <= 513; n += 2, ++pairs)
                if (jordan::odd_block_formula(m, n) != jordan::unique_odd_block(m, n))
                    return Outcome{false, "formula differs at (" + std::to_string(m) + ", " + std::to_string(n) + ")"};
        return Outcome{true, "200 wedge sizes, " + std::to_string(pairs) + " odd pairs"};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
