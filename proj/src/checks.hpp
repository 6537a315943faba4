#pragma once

#include "report.hpp"

#include <cstdint>
#include <vector>

namespace hnf::checks {

struct OracleOptions {
    std::uint64_t max_dim = 12;    // symplectic dimension for the exterior square sweep
    std::uint64_t max_sl = 8;      // SL dimension for the V (x) V* sweep
    std::uint64_t max_product = 24;// dimension bound for bilinear tensor products
    std::uint64_t max_jordan = 10; // dimension bound for plain Jordan-type checks
    unsigned threads = 1;
};

// Largest accepted bounds; beyond these the enumeration or the matrices blow up.
inline constexpr OracleOptions kLimits{32, 16, 256, 40, 0};

// Every sweep compares the combinatorial rule against explicit GF(2)
// matrices. The last report tallies parity-law violations seen on every
// space the oracle touched.
std::vector<Report> oracle_check(const OracleOptions& opt);

Report oracle_theorem_A(std::uint64_t max_n, unsigned threads, Report& parity);
Report oracle_theorem_C(std::uint64_t max_dim, unsigned threads, Report& parity);
Report oracle_jordan(std::uint64_t max_dim, unsigned threads);
Report oracle_bilinear(std::uint64_t max_product, unsigned threads, Report& parity);

} // namespace hnf::checks
