#include <doctest.h>

#include "checks.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "tables.hpp"

#include <random>

using namespace hnf;
using hesselink::EpsilonTaggedType;
using jordan::JordanType;

namespace {

// Partition numbers by the textbook dynamic program.
std::vector<std::uint64_t> partition_numbers(std::size_t n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t part = 1; part <= n; ++part)
        for (std::size_t k = part; k <= n; ++k) p[k] += p[k - part];
    return p;
}

// Symplectic classes counted from the partition list: odd sizes need even
// multiplicity, even sizes with even multiplicity choose a tag freely.
std::uint64_t symplectic_count(std::uint64_t dim) {
    std::uint64_t total = 0;
    for (const auto& j : enumerate::partitions(dim)) {
        std::uint64_t ways = 1;
        for (const auto& [d, m] : j.blocks()) {
            if (d % 2 && m % 2) ways = 0;
            if (d % 2 == 0 && m % 2 == 0) ways *= 2;
        }
        total += ways;
    }
    return total;
}

} // namespace

TEST_SUITE("enumerate") {

TEST_CASE("partition counts and order") {
    const auto p = partition_numbers(30);
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const auto all = enumerate::partitions(n);
        CHECK(all.size() == p[n]);
        for (const auto& j : all) CHECK(j.dimension() == n);
    }
    const auto four = enumerate::partitions(4);
    std::vector<std::string> cells;
    for (const auto& j : four) cells.push_back(enumerate::partition_cell(j));
    CHECK(cells == std::vector<std::string>{"(4)", "(1, 3)", "(2^2)", "(1^2, 2)", "(1^4)"});
}

TEST_CASE("symplectic type counts and order") {
    for (std::uint64_t d = 2; d <= 24; d += 2) {
        const auto all = enumerate::symplectic_types(d);
        CHECK(all.size() == symplectic_count(d));
        std::uint64_t sliced = 0;
        for (std::uint64_t top = 1; top <= d; ++top)
            enumerate::for_each_symplectic_largest(d, top, [&](const hesselink::SymplecticType&) { ++sliced; });
        CHECK(sliced == all.size());
    }
    std::vector<std::string> four;
    for (const auto& s : enumerate::symplectic_types(4)) four.push_back(hesselink::to_string(s));
    CHECK(four == std::vector<std::string>{"4_1", "2_1^2", "2_0^2", "1_0^2,2_1", "1_0^4"});
}

} // TEST_SUITE

TEST_SUITE("tables") {

TEST_CASE("tables match the stored rows") {
    CHECK(tables::diff(tables::table_A(2, 7), tables::read_lines(HNF_GOLDEN_DIR "/table_a.txt")).empty());
    CHECK(tables::diff(tables::table_C(2, 8), tables::read_lines(HNF_GOLDEN_DIR "/table_c.txt")).empty());
    CHECK(tables::table_A(2, 2) == std::vector<std::string>{"(2) | (2_1^2) | (2_1)"});
}

TEST_CASE("table C selection") {
    // Odd n has no alpha > 0 rows; --all restores every class but the identity.
    CHECK(tables::table_C(5, 5).empty());
    CHECK(tables::table_C(7, 7).empty());
    CHECK(tables::table_C(4, 4, true).size() == enumerate::symplectic_types(8).size() - 1);
    CHECK(tables::table_C(2, 2, true).size() == tables::table_C(2, 2).size());
}

TEST_CASE("diff reports line differences") {
    CHECK(tables::diff({"a", "b"}, {"a", "b"}).empty());
    CHECK(tables::diff({"a", "b"}, {"a", "c"}).size() == 1);
    CHECK(!tables::diff({"a"}, {"a", "b"}).empty());
    CHECK_THROWS(tables::read_lines("/nonexistent/golden.txt"));
}

} // TEST_SUITE

TEST_SUITE("json") {

TEST_CASE("round trip") {
    std::mt19937_64 rng(12);
    for (std::uint64_t d = 2; d <= 10; d += 2)
        for (const auto& s : enumerate::symplectic_types(d)) {
            const auto j = io::to_json(s.tagged());
            CHECK(io::tagged_from_json(nlohmann::json::parse(j.dump())) == s.tagged());
            CHECK(j["text"] == hesselink::to_string(s));
            CHECK(j["dimension"] == d);
            const auto jj = io::to_json(s.jordan());
            CHECK(io::jordan_from_json(nlohmann::json::parse(jj.dump())) == s.jordan());
        }
    CHECK(io::jordan_from_json(io::to_json(JordanType{})).empty());
}

TEST_CASE("malformed input") {
    using nlohmann::json;
    CHECK_THROWS_AS(io::jordan_from_json(json::parse(R"({"blocks": [{"size": 0, "mult": 1}]})")), InvalidArgument);
    CHECK_THROWS_AS(io::jordan_from_json(json::parse(R"({"blocks": 3})")), InvalidArgument);
    CHECK_THROWS_AS(io::jordan_from_json(json::parse(R"([1, 2])")), InvalidArgument);
    CHECK_THROWS_AS(io::tagged_from_json(json::parse(R"({"entries": [{"size": 2, "mult": 1, "eps": 2}]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::tagged_from_json(json::parse(R"({"entries": [{"size": 3, "mult": 1, "eps": 1}]})")),
                    ConstraintViolation);
}

} // TEST_SUITE

TEST_SUITE("checks") {

TEST_CASE("oracle sweeps at small bounds") {
    checks::OracleOptions opt;
    opt.max_dim = 8;
    opt.max_sl = 5;
    opt.max_product = 16;
    opt.max_jordan = 6;
    opt.threads = 2;
    const auto reports = checks::oracle_check(opt);
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) {
        CAPTURE(to_text(r));
        CHECK(r.ok());
        CHECK(r.checked > 0);
    }
    const auto json = to_json(reports.front());
    CHECK(json["ok"] == true);
    CHECK(json["failures"] == 0);
}

TEST_CASE("oracle bounds are enforced") {
    checks::OracleOptions opt;
    opt.max_dim = checks::kLimits.max_dim + 2;
    CHECK_THROWS_AS(checks::oracle_check(opt), InvalidArgument);
}

TEST_CASE("report bookkeeping") {
    Report r;
    r.name = "x";
    for (int i = 0; i < 30; ++i) r.fail("case " + std::to_string(i));
    CHECK(r.failures == 30);
    CHECK(r.counterexamples.size() == 20);
    CHECK_FALSE(r.ok());
    CHECK(to_text(r).rfind("FAIL x: 0 checked, 30 failed", 0) == 0);
}

} // TEST_SUITE
