#include <doctest.h>

#include "enumerate.hpp"
#include "errors.hpp"
#include "hesselink.hpp"
#include "oracle.hpp"

#include <random>

using namespace hnf::hesselink;
using hnf::jordan::JordanType;

namespace {

EpsilonTaggedType T(std::initializer_list<Entry> e) { return EpsilonTaggedType(e); }

SymplecticType S(const char* text) { return parse_symplectic(text); }

EpsilonTaggedType by_oracle(const SymplecticType& a, const SymplecticType& b) {
    return hnf::oracle::hesselink_of_space(hnf::oracle::tensor_space(hnf::oracle::build(a), hnf::oracle::build(b)));
}

} // namespace

TEST_SUITE("hesselink") {

TEST_CASE("validate_symplectic") {
    CHECK(validate_symplectic(T({{2, 1, true}})) == V(2));
    CHECK(validate_symplectic(T({{3, 2, false}})) == W(3));
    try {
        validate_symplectic(T({{4, 3, false}}));
        FAIL("expected a constraint violation");
    } catch (const hnf::ConstraintViolation& e) {
        CHECK(e.block() == 4);
    }
    CHECK_THROWS_AS(EpsilonTaggedType::from_entries({{3, 1, true}}), hnf::ConstraintViolation);
    CHECK_THROWS_AS(V(3), hnf::InvalidArgument);
    CHECK(is_symplectic(T({{1, 2, false}, {6, 1, true}})));
    CHECK_FALSE(is_symplectic(T({{1, 1, false}})));
}

TEST_CASE("orthogonal_sum") {
    CHECK(orthogonal_sum(V(4), W(4)) == V(4, 3));
    CHECK(orthogonal_sum(W(3), W(3)) == validate_symplectic(T({{3, 4, false}})));
    CHECK(orthogonal_sum(V(2), W(5)) == validate_symplectic(T({{2, 1, true}, {5, 2, false}})));
    CHECK(orthogonal_sum(V(4), SymplecticType()) == V(4));
}

TEST_CASE("orthogonal_sum is commutative, associative and tracks Jordan types") {
    const auto all = hnf::enumerate::symplectic_types(6);
    const auto small = hnf::enumerate::symplectic_types(4);
    for (const auto& a : all)
        for (const auto& b : small) {
            CHECK(orthogonal_sum(a, b) == orthogonal_sum(b, a));
            CHECK(orthogonal_sum(a, b).dimension() == a.dimension() + b.dimension());
            std::vector<JordanType::Block> blocks = a.jordan().blocks();
            const auto more = b.jordan().blocks();
            blocks.insert(blocks.end(), more.begin(), more.end());
            CHECK(orthogonal_sum(a, b).jordan() == JordanType::from_blocks(blocks));
            for (const auto& c : small)
                CHECK(orthogonal_sum(orthogonal_sum(a, b), c) == orthogonal_sum(a, orthogonal_sum(b, c)));
        }
}

TEST_CASE("tensor_bilinear examples") {
    CHECK(tensor_bilinear(V(2), V(4)) == W(4));
    CHECK(tensor_bilinear(V(2), V(6)) == V(6, 2));
    CHECK(tensor_bilinear(V(6), V(10)) == orthogonal_sum(W(8, 2), V(14, 2)));
    const auto derived = tensor_bilinear(W(3), V(4));
    CHECK(derived == W(4, 3));
    CHECK(derived.tagged() == by_oracle(W(3), V(4)));
    CHECK(tensor_bilinear(V(2), V(2)) == V(2, 2));
}

TEST_CASE("tensor_bilinear properties") {
    std::vector<SymplecticType> all;
    for (std::uint64_t d = 2; d <= 10; d += 2)
        for (auto& s : hnf::enumerate::symplectic_types(d)) all.push_back(s);
    for (const auto& a : all)
        for (const auto& b : all) {
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            const auto t = tensor_bilinear(a, b);
            CHECK(t == tensor_bilinear(b, a));
            CHECK(t.jordan() == hnf::jordan::tensor(a.jordan(), b.jordan()));
            bool a_paired = true, b_paired = true;
            for (const auto& e : a.entries()) a_paired = a_paired && !e.eps;
            for (const auto& e : b.entries()) b_paired = b_paired && !e.eps;
            if (a_paired || b_paired)
                for (const auto& e : t.entries()) CHECK_FALSE(e.eps);
        }
}

TEST_CASE("V(2l) (x) V(2k) has even sizes with even multiplicities") {
    for (std::uint64_t l = 1; l <= 40; ++l)
        for (std::uint64_t k = l; k <= 40; ++k)
            for (const auto& e : tensor_bilinear(V(2 * l), V(2 * k)).entries()) {
                CHECK(e.size % 2 == 0);
                CHECK(e.mult % 2 == 0);
            }
}

TEST_CASE("tensor_bilinear agrees with the oracle on small products") {
    std::vector<SymplecticType> all;
    for (std::uint64_t d = 2; d <= 6; d += 2)
        for (auto& s : hnf::enumerate::symplectic_types(d)) all.push_back(s);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.dimension() * b.dimension() > 24) continue;
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            CHECK(tensor_bilinear(a, b).tagged() == by_oracle(a, b));
        }
}

TEST_CASE("restrict_bilinear") {
    CHECK(restrict_bilinear(V(4), 1) == V(2, 2));
    CHECK(restrict_bilinear(V(6), 1) == W(3));
    CHECK(restrict_bilinear(V(8), 2) == V(2, 4));
    CHECK_THROWS_AS(restrict_bilinear(V(4), 0), hnf::InvalidArgument);
    // d < 2^(alpha-1): only W(1) pieces remain.
    CHECK(restrict_bilinear(V(2), 3) == W(1));
    CHECK(restrict_bilinear(V(6), 3) == W(1, 3));
}

TEST_CASE("restrict_bilinear agrees with the oracle, including the a = 0 boundary") {
    std::vector<SymplecticType> all;
    for (std::uint64_t d = 2; d <= 12; d += 2)
        for (auto& s : hnf::enumerate::symplectic_types(d)) all.push_back(s);
    for (const auto& s : all)
        for (unsigned alpha = 1; alpha <= 4; ++alpha) {
            CAPTURE(to_string(s));
            CAPTURE(alpha);
            const auto b = hnf::oracle::build(s);
            const hnf::oracle::BilinearSpace r{hnf::oracle::power(b.u, std::uint64_t{1} << alpha), b.gram};
            const auto got = restrict_bilinear(s, alpha);
            CHECK(got.tagged() == hnf::oracle::hesselink_of_space(r));
            CHECK(got.jordan() == hnf::jordan::restrict_power(s.jordan(), alpha));
        }
}

TEST_CASE("induce_bilinear") {
    CHECK(induce_bilinear(W(3), 1) == W(6));
    CHECK(induce_bilinear(V(2), 2) == V(8));
    CHECK(induce_bilinear(orthogonal_sum(W(1), V(4)), 1) == orthogonal_sum(W(2), V(8)));
    CHECK_THROWS_AS(induce_bilinear(V(2), 0), hnf::InvalidArgument);
    for (const auto& s : hnf::enumerate::symplectic_types(10))
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            CHECK(induce_bilinear(s, alpha).jordan() == hnf::jordan::induce_power(s.jordan(), alpha));
}

TEST_CASE("parse and format") {
    CHECK(parse_tagged("2_0^2,8_1") == T({{2, 2, false}, {8, 1, true}}));
    CHECK(parse_tagged("(2_0^2, 8_1)") == T({{2, 2, false}, {8, 1, true}}));
    CHECK(to_string(T({{2, 2, false}, {8, 1, true}})) == "2_0^2,8_1");
    CHECK(to_cell(T({{2, 2, false}, {8, 1, true}})) == "(2_0^2, 8_1)");
    CHECK(parse_tagged("0").empty());
    for (const char* bad : {"2", "2_2", "3_1", "2_1,2_0", "(2_1", "2_1)", "2_1^0", "0_0", "2_1,"})
        CHECK_THROWS_AS(parse_tagged(bad), hnf::ParseError);
    CHECK_THROWS_AS(parse_symplectic("4_0^3"), hnf::ConstraintViolation);
    try {
        parse_tagged("4_1,3_1");
        FAIL("expected a parse error");
    } catch (const hnf::ParseError& e) {
        CHECK(e.position() == 6);
    }
    for (std::uint64_t d = 2; d <= 12; d += 2)
        for (const auto& s : hnf::enumerate::symplectic_types(d)) {
            CHECK(parse_symplectic(to_string(s)) == s);
            CHECK(parse_tagged(to_cell(s)) == s.tagged());
        }
}

} // TEST_SUITE
