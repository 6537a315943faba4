#include <doctest.h>

#include "enumerate.hpp"
#include "errors.hpp"
#include "oracle.hpp"

#include <random>

using namespace hnf::oracle;
using hnf::hesselink::EpsilonTaggedType;
using hnf::jordan::JordanType;

namespace {

using Dense = std::vector<std::vector<int>>;

Dense dense(const Gf2Matrix& m) {
    Dense d(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
    return d;
}

// Plain Gaussian elimination on ints mod 2.
std::size_t naive_rank(Dense a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && !a[p][c]) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

EpsilonTaggedType tagged(const char* text) { return hnf::hesselink::parse_tagged(text); }

BilinearSpace identity_space_with(const Gf2Matrix& gram) { return {Gf2Matrix::identity(gram.rows()), gram}; }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("Gf2Matrix arithmetic matches a naive implementation") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 150);
        const std::size_t r = dim(rng), c = dim(rng), k = dim(rng);
        const auto a = random_matrix(rng, r, c, trial % 3 == 0 ? 0.05 : 0.5);
        const auto b = random_matrix(rng, c, k);
        CHECK(a.rank() == naive_rank(dense(a)));
        CHECK(a.transpose().rank() == a.rank());
        CHECK(a.transpose().transpose() == a);

        const auto ab = a * b;
        const auto da = dense(a), db = dense(b);
        bool same = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                int s = 0;
                for (std::size_t t = 0; t < c; ++t) s ^= da[i][t] & db[t][j];
                same = same && (s == ab.get(i, j));
            }
        CHECK(same);

        const auto ker = a.kernel();
        CHECK(ker.rows() == c - a.rank());
        if (ker.rows()) {
            CHECK((a * ker.transpose()).is_zero());
            CHECK(ker.rank() == ker.rows());
        }
        const auto x = random_matrix(rng, c, 3);
        const auto sol = a.solve(a * x);
        REQUIRE(sol);
        CHECK(a * *sol == a * x);
    }
}

TEST_CASE("inverse and solve") {
    std::mt19937_64 rng(5);
    int invertible = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_matrix(rng, 20, 20);
        const auto inv = a.inverse();
        CHECK(inv.has_value() == (a.rank() == 20));
        if (inv) {
            ++invertible;
            CHECK(a * *inv == Gf2Matrix::identity(20));
        }
    }
    CHECK(invertible > 0);
    Gf2Matrix z(3, 3);
    CHECK_FALSE(z.inverse());
    Gf2Matrix e(3, 1);
    e.set(0, 0);
    CHECK_FALSE(z.solve(e));
}

TEST_CASE("build_V and build_W") {
    const auto v2 = build_V(2);
    CHECK(v2.u.get(0, 0));
    CHECK(v2.u.get(0, 1));
    CHECK(v2.u.get(1, 1));
    CHECK_FALSE(v2.u.get(1, 0));
    CHECK(v2.gram.get(0, 1));
    CHECK(v2.gram.get(1, 0));
    CHECK(epsilon_of_space(v2, 2));
    for (std::uint64_t d = 2; d <= 16; d += 2) {
        const auto v = build_V(d);
        check_invariants(v);
        CHECK(jordan_of_space(v) == JordanType{{d, 1}});
        CHECK(epsilon_of_space(v, d));
        CHECK(hesselink_of_space(v) == hnf::hesselink::V(d).tagged());
    }
    for (std::uint64_t d = 1; d <= 8; ++d) {
        const auto w = build_W(d);
        check_invariants(w);
        CHECK(jordan_of_space(w) == JordanType{{d, 2}});
        CHECK_FALSE(epsilon_of_space(w, d));
        CHECK(hesselink_of_space(w) == hnf::hesselink::W(d).tagged());
    }
    CHECK_THROWS_AS(build_V(3), hnf::InvalidArgument);
    CHECK_THROWS_AS(build_V(0), hnf::InvalidArgument);
    CHECK_THROWS_AS(build_W(0), hnf::InvalidArgument);
}

TEST_CASE("direct_sum and tensor_space") {
    const auto s = direct_sum(build_V(2), build_W(3));
    check_invariants(s);
    CHECK(jordan_of_space(s) == JordanType{{2, 1}, {3, 2}});
    CHECK(hesselink_of_space(direct_sum(build_V(4), build_W(4))) == tagged("4_1^3"));
    CHECK(hesselink_of_space(direct_sum(direct_sum(build_V(4), build_V(4)), build_V(4))) == tagged("4_1^3"));
    CHECK(hesselink_of_space(tensor_space(build_V(2), build_V(2))) == tagged("2_1^2"));
    CHECK(hesselink_of_space(tensor_space(build_V(2), build_V(6))) == tagged("6_1^2"));
    CHECK(jordan_of_space(tensor_space(build_V(2), build_V(10))) == JordanType{{10, 2}});
    CHECK(epsilon_of_space(tensor_space(build_V(6), build_V(10)), 14));
    CHECK_FALSE(epsilon_of_space(build_W(4), 4));
    // W(1) (x) S is the paired module on S + S.
    for (const auto& t : hnf::enumerate::symplectic_types(6)) {
        const auto w = hesselink_of_space(tensor_space(build_W(1), build(t)));
        for (const auto& e : w.entries()) CHECK_FALSE(e.eps);
        CHECK(w.jordan() == hnf::jordan::tensor(JordanType{{1, 2}}, t.jordan()));
    }
}

TEST_CASE("jordan_of_space") {
    CHECK(jordan_of_space(identity_space_with(Gf2Matrix(3, 3))) == JordanType{{1, 3}});
    CHECK(jordan_of_space(build_W(5)) == JordanType{{5, 2}});
    Gf2Matrix not_unipotent(2, 2);
    not_unipotent.set(0, 1);
    not_unipotent.set(1, 0);
    not_unipotent.set(1, 1);
    CHECK_THROWS_AS(jordan_of_operator(not_unipotent), hnf::NotUnipotent);
}

TEST_CASE("dual_tensor_space") {
    const auto two = dual_tensor_space(jordan_matrix(JordanType{{2, 1}}));
    check_invariants(two.space);
    CHECK(hesselink_of_space(two.space) == tagged("2_1^2"));
    CHECK(hesselink_of_space(subquotient(two.space, two.marked)) == tagged("2_1"));

    const auto three = dual_tensor_space(jordan_matrix(JordanType{{3, 1}}));
    CHECK(hesselink_of_space(three.space) == tagged("1_0,4_1^2"));
    // The radical is spanned by gamma.
    const auto rad = three.space.gram.kernel();
    REQUIRE(rad.rows() == 1);
    CHECK(rad == three.marked);

    for (std::size_t n = 2; n <= 7; ++n) {
        const auto id = dual_tensor_space(Gf2Matrix::identity(n));
        CHECK(id.space.gram.rank() == (n % 2 ? n * n - 1 : n * n));
    }
}

TEST_CASE("wedge_space") {
    const auto v4 = wedge_space(build_V(4));
    check_invariants(v4.space);
    CHECK(hesselink_of_space(v4.space) == tagged("2_1,4_1"));
    CHECK(hesselink_of_space(subquotient(v4.space, v4.marked)) == tagged("4_1"));
    CHECK(hesselink_of_space(wedge_space(build_W(2)).space) == tagged("1_0^2,2_1^2"));
    CHECK(wedge_space(identity_space_with(build_V(4).gram)).space.gram.rank() == 6);
    CHECK_THROWS_AS(wedge_space(identity_space_with(Gf2Matrix(4, 4))), hnf::DegenerateForm);
}

TEST_CASE("the marked bivector is the inverse Gram matrix") {
    std::mt19937_64 rng(9);
    for (const auto& t : hnf::enumerate::symplectic_types(8)) {
        const auto space = build(t);
        // Random change of basis so the Gram matrix is not already standard.
        Gf2Matrix p;
        do {
            p = random_matrix(rng, 8, 8);
        } while (!p.inverse());
        const auto pinv = *p.inverse();
        const BilinearSpace moved{pinv * space.u * p, p.transpose() * space.gram * p};
        check_invariants(moved);
        const auto w = wedge_space(moved);
        const auto ginv = *moved.gram.inverse();
        std::size_t idx = 0;
        bool same = true;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j) same = same && (w.marked.get(0, idx++) == ginv.get(i, j));
        CHECK(same);
        CHECK(hesselink_of_space(moved) == t.tagged());
    }
}

TEST_CASE("symplectic_basis") {
    std::mt19937_64 rng(1);
    for (std::uint64_t d = 2; d <= 12; d += 2)
        for (const auto& t : hnf::enumerate::symplectic_types(d)) {
            const auto g = build(t).gram;
            const auto s = symplectic_basis(g);
            CHECK(s.rank() == d);
            const auto std_form = s * g * s.transpose();
            bool ok = true;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) ok = ok && std_form.get(r, c) == ((r ^ 1) == c);
            CHECK(ok);
        }
    CHECK_THROWS_AS(symplectic_basis(Gf2Matrix(2, 2)), hnf::DegenerateForm);
}

TEST_CASE("subquotient") {
    const auto w = wedge_space(build_V(4));
    const auto q = subquotient(w.space, w.marked);
    CHECK(q.dim() == w.space.dim() - 2);
    check_invariants(q);

    Gf2Matrix zero(1, w.space.dim());
    CHECK_THROWS_AS(subquotient(w.space, zero), hnf::InvalidArgument);
    Gf2Matrix wrong(1, 3);
    CHECK_THROWS_AS(subquotient(w.space, wrong), hnf::InvalidArgument);
    // e_1 of V(4) is fixed; e_4 is not.
    const auto v = build_V(4);
    Gf2Matrix e1(1, 4), e4(1, 4);
    e1.set(0, 0);
    e4.set(0, 3);
    CHECK(hesselink_of_space(subquotient(v, e1)) == tagged("2_1"));
    CHECK_THROWS_AS(subquotient(v, e4), hnf::InvalidArgument);

    // A fixed vector outside Im X removes a pair of trivial blocks.
    const auto w1 = build_W(1);
    Gf2Matrix f(1, 2);
    f.set(0, 0);
    const auto s = direct_sum(w1, build_V(2));
    Gf2Matrix g(1, 4);
    g.set(0, 0);
    CHECK(jordan_of_space(subquotient(s, g)) == JordanType{{2, 1}});
    CHECK(subquotient(w1, f).dim() == 0);
}

TEST_CASE("the epsilon functional is additive on the kernel") {
    std::mt19937_64 rng(77);
    for (std::uint64_t dim = 4; dim <= 10; dim += 2)
        for (const auto& t : hnf::enumerate::symplectic_types(dim)) {
            const auto s = build(t);
            const std::size_t n = s.dim();
            Gf2Matrix x = s.u + Gf2Matrix::identity(n);
            for (const auto& [d, m] : t.jordan().blocks()) {
                const auto ker = power(x, d).kernel();
                const auto xd1 = power(x, d - 1);
                auto q = [&](const Gf2Matrix& v) { return form(s.gram, apply(xd1, v.row(0)).row(0), v.row(0)); };
                std::uniform_int_distribution<std::size_t> pick(0, ker.rows() - 1);
                bool any = false;
                for (int k = 0; k < 20; ++k) {
                    const auto a = ker.row_matrix(pick(rng)) + ker.row_matrix(pick(rng));
                    const auto b = ker.row_matrix(pick(rng));
                    CHECK(q(a + b) == (q(a) != q(b)));
                }
                for (std::size_t r = 0; r < ker.rows(); ++r) any = any || q(ker.row_matrix(r));
                CHECK(any == epsilon_of_space(s, d));
            }
        }
}

TEST_CASE("hesselink_of_space inverts build") {
    for (std::uint64_t d = 2; d <= 12; d += 2)
        for (const auto& t : hnf::enumerate::symplectic_types(d)) {
            const auto s = build(t);
            check_invariants(s);
            CHECK_FALSE(is_degenerate(s));
            CHECK(hesselink_of_space(s) == t.tagged());
        }
}

} // TEST_SUITE
