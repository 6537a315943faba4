#pragma once

#include "hesselink.hpp"
#include "report.hpp"

namespace hnf::distinguished {

// Every block size even, every multiplicity at most two, every tag 1.
// Types that are not symplectic (degenerate forms) are never distinguished.
bool is_distinguished(const hesselink::EpsilonTaggedType& t);

// The sweeps enumerate every type in range and compare the predicate with
// the expected classification; counterexamples land in the report.
Report verify_prop_A_tensor(std::uint64_t max_n, unsigned threads = 1);
Report verify_prop_A_irr(std::uint64_t max_n, unsigned threads = 1);
Report verify_prop_tensor(std::uint64_t max_dim, unsigned threads = 1);
Report verify_prop_C(std::uint64_t max_n, unsigned threads = 1);

} // namespace hnf::distinguished
