#pragma once

#include "hesselink.hpp"
#include "jordan.hpp"

namespace hnf::reps {

// Which adjustment produced the irreducible Jordan type from the ambient one.
enum class PrimeCase {
    OddN,         // n odd: one trivial block removed
    EvenAlphaZero,// n even, alpha = 0: two trivial blocks removed
    EvenQuotient, // n even, alpha > 0, n / 2^alpha even
    OddQuotient,  // alpha > 1, n / 2^alpha odd
    AlphaOne,     // alpha = 1, n / 2 odd
};

struct TheoremAResult {
    hesselink::EpsilonTaggedType tensor_space;
    hesselink::EpsilonTaggedType irreducible;
    unsigned alpha = 0;
    PrimeCase prime_case = PrimeCase::OddN;
};

struct TheoremCResult {
    hesselink::EpsilonTaggedType wedge_space;
    hesselink::EpsilonTaggedType irreducible;
    unsigned alpha = 0;
    PrimeCase prime_case = PrimeCase::OddN;
};

// Conjugacy class of u on V (x) V* and on the irreducible subquotient,
// SL(V) with dim V = n >= 2.
TheoremAResult theorem_A(const jordan::JordanType& j);

// Conjugacy class of u on the exterior square and on the irreducible
// subquotient, Sp(V) with dim V = 2n >= 4.
TheoremCResult theorem_C(const hesselink::SymplecticType& s);

// Shared lambda -> lambda' step. The 2^alpha - 1 and 2^alpha - 2 counts are
// incremented, which matters only for the exterior square where those sizes
// can already be present.
jordan::JordanType prime_jordan(const jordan::JordanType& lambda, std::uint64_t n, unsigned alpha,
                                PrimeCase& which);

} // namespace hnf::reps
