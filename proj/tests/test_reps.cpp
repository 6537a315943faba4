#include <doctest.h>

#include "enumerate.hpp"
#include "errors.hpp"
#include "reps.hpp"
#include "tables.hpp"

#include <string>

using namespace hnf;
using hesselink::EpsilonTaggedType;
using hesselink::SymplecticType;
using jordan::JordanType;

namespace {

std::string str(const EpsilonTaggedType& t) { return hesselink::to_string(t); }

std::vector<std::string> split_cells(const std::string& row) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto bar = row.find(" | ", start);
        cells.push_back(row.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 3;
    }
    return cells;
}

std::string strip_parens(std::string s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
}

// Merges tagged types without requiring non-degeneracy.
EpsilonTaggedType merge(std::initializer_list<EpsilonTaggedType> parts) {
    std::vector<hesselink::Entry> all;
    for (const auto& p : parts) all.insert(all.end(), p.entries().begin(), p.entries().end());
    return EpsilonTaggedType::from_entries(all);
}

} // namespace

TEST_SUITE("reps") {

TEST_CASE("theorem_A examples") {
    auto a = reps::theorem_A(JordanType{{5, 1}});
    CHECK(str(a.tensor_space) == "1_0,4_1^2,8_1^2");
    CHECK(str(a.irreducible) == "4_1^2,8_1^2");
    a = reps::theorem_A(JordanType{{4, 1}});
    CHECK(str(a.tensor_space) == "4_1^4");
    CHECK(str(a.irreducible) == "2_1,4_1^3");
    a = reps::theorem_A(JordanType{{1, 1}, {2, 2}});
    CHECK(str(a.tensor_space) == "1_0,2_1^12");
    CHECK(str(a.irreducible) == "2_1^12");
    a = reps::theorem_A(JordanType{{2, 1}, {4, 1}});
    CHECK(str(a.tensor_space) == "2_1^2,4_1^8");
    CHECK(str(a.irreducible) == "2_1,4_1^8");
    CHECK(a.alpha == 1);
    CHECK(a.prime_case == reps::PrimeCase::AlphaOne);
    CHECK_THROWS_AS(reps::theorem_A(JordanType{}), InvalidArgument);
    CHECK_THROWS_AS(reps::theorem_A(JordanType{{1, 1}}), InvalidArgument);
}

TEST_CASE("theorem_C examples") {
    auto c = reps::theorem_C(hesselink::parse_symplectic("4_1"));
    CHECK(str(c.wedge_space) == "2_1,4_1");
    CHECK(str(c.irreducible) == "4_1");
    c = reps::theorem_C(hesselink::parse_symplectic("2_0^2,8_1"));
    CHECK(str(c.wedge_space) == "1_0^2,2_1^2,4_1,8_1^7");
    CHECK(str(c.irreducible) == "1_0^2,2_1,4_1,8_1^7");
    c = reps::theorem_C(hesselink::parse_symplectic("8_0^2"));
    CHECK(str(c.wedge_space) == "4_0^2,8_1^14");
    CHECK(str(c.irreducible) == "4_0^2,6_1,8_1^13");
    CHECK(c.alpha == 3);
    c = reps::theorem_C(hesselink::parse_symplectic("4_1^2"));
    CHECK(str(c.wedge_space) == "2_1^2,4_1^6");
    CHECK(str(c.irreducible) == "1_0^2,4_1^6");
    c = reps::theorem_C(hesselink::parse_symplectic("2_0^2"));
    CHECK(str(c.wedge_space) == "1_0^2,2_1^2");
    CHECK(str(c.irreducible) == "1_0^2,2_1");
    CHECK_THROWS_AS(reps::theorem_C(hesselink::V(2)), InvalidArgument);
}

TEST_CASE("golden rows round-trip through the theorems") {
    const auto a_rows = tables::read_lines(HNF_GOLDEN_DIR "/table_a.txt");
    REQUIRE(a_rows.size() == 37);
    for (const auto& row : a_rows) {
        CAPTURE(row);
        const auto cells = split_cells(row);
        REQUIRE(cells.size() == 3);
        const auto r = reps::theorem_A(jordan::parse(strip_parens(cells[0])));
        CHECK(hesselink::to_cell(r.tensor_space) == cells[1]);
        CHECK(hesselink::to_cell(r.irreducible) == cells[2]);
    }
    const auto c_rows = tables::read_lines(HNF_GOLDEN_DIR "/table_c.txt");
    REQUIRE(c_rows.size() == 44);
    for (const auto& row : c_rows) {
        CAPTURE(row);
        const auto cells = split_cells(row);
        REQUIRE(cells.size() == 4);
        const auto r = reps::theorem_C(hesselink::parse_symplectic(cells[0]));
        CHECK(hesselink::to_cell(r.wedge_space) == cells[1]);
        CHECK(hesselink::to_cell(r.irreducible) == cells[2]);
        CHECK(std::to_string(r.alpha) == cells[3]);
    }
}

TEST_CASE("theorem_A invariants") {
    for (std::uint64_t n = 2; n <= 16; ++n)
        for (const auto& j : enumerate::partitions(n)) {
            CAPTURE(jordan::to_string(j));
            const auto r = reps::theorem_A(j);
            CHECK(r.tensor_space.dimension() == n * n);
            CHECK(r.irreducible.dimension() == n * n - (n % 2 ? 1 : 2));
            CHECK(r.tensor_space.jordan() == jordan::tensor(j, j));
            CHECK(hesselink::is_symplectic(r.irreducible));
            CHECK(hesselink::is_symplectic(r.tensor_space) == (n % 2 == 0));
            for (const auto& e : r.tensor_space.entries())
                if (e.eps) CHECK(e.size % 2 == 0);
        }
}

TEST_CASE("theorem_A tags ignore blocks that add no new powers") {
    // 3 = 2^2 - 2^0 and 4 = 2^2 contribute the same power 4.
    const auto base = reps::theorem_A(JordanType{{3, 1}});
    const auto more = reps::theorem_A(JordanType{{3, 1}, {4, 1}});
    for (const auto& e : base.tensor_space.entries())
        if (more.tensor_space.multiplicity(e.size)) CHECK(more.tensor_space.eps(e.size) == e.eps);
}

TEST_CASE("theorem_C invariants") {
    for (std::uint64_t n = 2; n <= 8; ++n)
        for (const auto& s : enumerate::symplectic_types(2 * n)) {
            CAPTURE(hesselink::to_string(s));
            const auto r = reps::theorem_C(s);
            CHECK(r.wedge_space.dimension() == n * (2 * n - 1));
            CHECK(r.irreducible.dimension() == r.wedge_space.dimension() - (n % 2 ? 1 : 2));
            CHECK(r.wedge_space.jordan() == jordan::wedge_square(s.jordan()));
            CHECK(hesselink::is_symplectic(r.irreducible));
        }
}

TEST_CASE("the exterior square splits over orthogonal sums") {
    // wedge(A + B) = wedge(A) + wedge(B) + A (x) B as tagged types.
    std::vector<SymplecticType> parts;
    for (std::uint64_t d = 4; d <= 8; d += 2)
        for (auto& s : enumerate::symplectic_types(d)) parts.push_back(s);
    for (const auto& a : parts)
        for (const auto& b : parts) {
            CAPTURE(hesselink::to_string(a));
            CAPTURE(hesselink::to_string(b));
            const auto whole = reps::theorem_C(hesselink::orthogonal_sum(a, b)).wedge_space;
            const auto pieces = merge({reps::theorem_C(a).wedge_space, reps::theorem_C(b).wedge_space,
                                       hesselink::tensor_bilinear(a, b).tagged()});
            CHECK(whole == pieces);
        }
}

TEST_CASE("prime_jordan cases") {
    reps::PrimeCase which{};
    CHECK(reps::prime_jordan(JordanType{{1, 3}}, 3, 0, which) == JordanType{{1, 2}});
    CHECK(which == reps::PrimeCase::OddN);
    CHECK(reps::prime_jordan(JordanType{{1, 4}}, 2, 0, which) == JordanType{{1, 2}});
    CHECK(which == reps::PrimeCase::EvenAlphaZero);
    CHECK(reps::prime_jordan(JordanType{{4, 4}}, 4, 2, which) == JordanType{{2, 1}, {4, 3}});
    CHECK(which == reps::PrimeCase::OddQuotient);
    CHECK(reps::prime_jordan(JordanType{{4, 16}}, 8, 2, which) == JordanType{{3, 2}, {4, 14}});
    CHECK(which == reps::PrimeCase::EvenQuotient);
    CHECK(reps::prime_jordan(JordanType{{2, 4}, {4, 8}}, 6, 1, which) == JordanType{{2, 3}, {4, 8}});
    CHECK(which == reps::PrimeCase::AlphaOne);
    // The added blocks stack on blocks already present.
    CHECK(reps::prime_jordan(JordanType{{2, 1}, {4, 8}}, 4, 2, which) == JordanType{{2, 2}, {4, 7}});
}

} // TEST_SUITE
