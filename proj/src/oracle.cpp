#include "oracle.hpp"

#include "errors.hpp"

namespace hnf::oracle {

using hesselink::Entry;
using jordan::JordanType;

namespace {

constexpr std::uint64_t kMaxDim = 4096;

void check_dim(std::uint64_t d) {
    if (d > kMaxDim) throw InvalidArgument("oracle dimension too large");
}

Gf2Matrix x_of(const Gf2Matrix& u) { return u + Gf2Matrix::identity(u.rows()); }

// Powers X^0 .. X^k until X^k = 0.
std::vector<Gf2Matrix> nilpotent_powers(const Gf2Matrix& u) {
    const Gf2Matrix x = x_of(u);
    std::vector<Gf2Matrix> p{Gf2Matrix::identity(u.rows())};
    while (!p.back().is_zero()) {
        if (p.size() > u.rows()) throw NotUnipotent("u - 1 is not nilpotent");
        p.push_back(p.back() * x);
    }
    return p;
}

JordanType jordan_from_powers(const std::vector<Gf2Matrix>& p) {
    std::vector<std::size_t> r;
    for (const auto& m : p) r.push_back(m.rank());
    r.push_back(0);
    std::vector<JordanType::Block> b;
    for (std::size_t d = 1; d + 1 < r.size(); ++d) {
        const long long m = static_cast<long long>(r[d - 1]) - 2 * static_cast<long long>(r[d]) +
                            static_cast<long long>(r[d + 1]);
        if (m < 0) throw std::logic_error("negative Jordan multiplicity from rank profile");
        if (m > 0) b.emplace_back(d, static_cast<std::uint64_t>(m));
    }
    return JordanType::from_blocks(std::move(b));
}

bool epsilon_from_powers(const BilinearSpace& a, const std::vector<Gf2Matrix>& p, std::uint64_t d) {
    if (d == 0) throw InvalidArgument("epsilon needs d >= 1");
    const Gf2Matrix xd = d < p.size() ? p[d] : Gf2Matrix(a.dim(), a.dim());
    const Gf2Matrix y = d - 1 < p.size() ? p[d - 1] : Gf2Matrix(a.dim(), a.dim());
    const Gf2Matrix k = xd.kernel();
    for (std::size_t i = 0; i < k.rows(); ++i) {
        const Gf2Matrix yv = apply(y, k.row(i));
        if (form(a.gram, yv.row(0), k.row(i))) return true;
    }
    return false;
}

} // namespace

BilinearSpace build_V(std::uint64_t d) {
    if (d == 0 || d % 2 != 0) throw InvalidArgument("build_V needs an even positive size");
    check_dim(d);
    const std::size_t k = d / 2;
    BilinearSpace s{Gf2Matrix(d, d), Gf2Matrix(d, d)};
    // Column i (0-based) holds u e_{i+1}.
    for (std::size_t i = 0; i < d; ++i) {
        s.u.set(i, i);
        if (i >= 1 && i <= k)
            for (std::size_t j = 0; j < i; ++j) s.u.set(j, i);
        else if (i > k)
            s.u.set(i - 1, i);
        s.gram.set(i, d - 1 - i);
    }
    return s;
}

Gf2Matrix jordan_matrix(const JordanType& j) {
    const std::uint64_t n = j.dimension();
    check_dim(n);
    Gf2Matrix u = Gf2Matrix::identity(n);
    std::size_t at = 0;
    for (const auto& [d, m] : j.blocks())
        for (std::uint64_t c = 0; c < m; ++c) {
            for (std::size_t i = 1; i < d; ++i) u.set(at + i - 1, at + i);
            at += d;
        }
    return u;
}

BilinearSpace build_W(std::uint64_t d) {
    if (d == 0) throw InvalidArgument("build_W needs a positive size");
    check_dim(2 * d);
    const Gf2Matrix j = jordan_matrix(JordanType{{d, 1}});
    const Gf2Matrix dual = j.inverse()->transpose();
    BilinearSpace s{block_diag(j, dual), Gf2Matrix(2 * d, 2 * d)};
    for (std::size_t i = 0; i < d; ++i) {
        s.gram.set(i, d + i);
        s.gram.set(d + i, i);
    }
    return s;
}

BilinearSpace direct_sum(const BilinearSpace& a, const BilinearSpace& b) {
    return {block_diag(a.u, b.u), block_diag(a.gram, b.gram)};
}

BilinearSpace tensor_space(const BilinearSpace& a, const BilinearSpace& b) {
    check_dim(a.dim() * b.dim());
    return {kronecker(a.u, b.u), kronecker(a.gram, b.gram)};
}

BilinearSpace build(const hesselink::SymplecticType& s) {
    BilinearSpace out{Gf2Matrix(0, 0), Gf2Matrix(0, 0)};
    for (const auto& e : s.entries()) {
        const std::uint64_t copies = e.eps ? e.mult : e.mult / 2;
        const BilinearSpace one = e.eps ? build_V(e.size) : build_W(e.size);
        for (std::uint64_t c = 0; c < copies; ++c) out = direct_sum(out, one);
    }
    return out;
}

MarkedSpace dual_tensor_space(const Gf2Matrix& u) {
    const std::size_t n = u.rows();
    if (n < 2) throw InvalidArgument("dual_tensor_space needs dim >= 2");
    check_dim(n * n);
    const auto inv = u.inverse();
    if (!inv) throw NotUnipotent("u is not invertible");
    MarkedSpace m{{kronecker(u, inv->transpose()), Gf2Matrix(n * n, n * n)}, Gf2Matrix(1, n * n)};
    // e_i (x) e_j* sits at index i*n + j.
    auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.space.gram.flip(at(i, j), at(j, i));
    for (std::size_t i = 0; i < n; ++i) {
        m.marked.set(0, at(i, i));
        for (std::size_t k = 0; k < n; ++k) m.space.gram.flip(at(i, i), at(k, k));
    }
    return m;
}

MarkedSpace dual_tensor_space(const BilinearSpace& a) { return dual_tensor_space(a.u); }

Gf2Matrix symplectic_basis(const Gf2Matrix& gram) {
    const std::size_t n = gram.rows();
    Gf2Matrix rest = Gf2Matrix::identity(n);
    std::vector<bool> used(n, false);
    Gf2Matrix out(n, n);
    std::size_t filled = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::size_t j = i + 1;
        while (j < n && (used[j] || !form(gram, rest.row(i), rest.row(j)))) ++j;
        if (j == n) throw DegenerateForm("Gram matrix is degenerate");
        used[i] = used[j] = true;
        const Gf2Matrix p = rest.row_matrix(i), q = rest.row_matrix(j);
        std::copy(p.row(0), p.row(0) + p.words(), out.row(filled++));
        std::copy(q.row(0), q.row(0) + q.words(), out.row(filled++));
        // w -> w + b(w,q) p + b(w,p) q makes w orthogonal to both.
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            const bool wq = form(gram, rest.row(k), q.row(0));
            const bool wp = form(gram, rest.row(k), p.row(0));
            if (wq) rest.xor_row(k, p.row(0));
            if (wp) rest.xor_row(k, q.row(0));
        }
    }
    return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

} // namespace

Gf2Matrix wedge_operator(const Gf2Matrix& u) {
    const auto pairs = wedge_pairs(u.rows());
    const std::size_t m = pairs.size();
    check_dim(m);
    Gf2Matrix w(m, m);
    for (std::size_t c = 0; c < m; ++c) {
        const auto [i, j] = pairs[c];
        for (std::size_t r = 0; r < m; ++r) {
            const auto [k, l] = pairs[r];
            if ((u.get(k, i) && u.get(l, j)) != (u.get(l, i) && u.get(k, j))) w.set(r, c);
        }
    }
    return w;
}

MarkedSpace wedge_space(const BilinearSpace& a) {
    const std::size_t n = a.dim();
    if (n < 2) throw InvalidArgument("wedge_space needs dim >= 2");
    if (a.gram.rank() != n) throw DegenerateForm("wedge_space needs a non-degenerate form");
    const auto pairs = wedge_pairs(n);
    const std::size_t m = pairs.size();
    const auto& b = a.gram;
    MarkedSpace w{{wedge_operator(a.u), Gf2Matrix(m, m)}, Gf2Matrix(1, m)};
    for (std::size_t c = 0; c < m; ++c) {
        const auto [i, j] = pairs[c];
        for (std::size_t r = 0; r < m; ++r) {
            const auto [k, l] = pairs[r];
            const bool hat = (b.get(i, k) && b.get(j, l)) != (b.get(i, l) && b.get(j, k));
            const bool phi = b.get(i, j) && b.get(k, l);
            if (hat != phi) w.space.gram.set(c, r);
        }
    }
    const Gf2Matrix s = symplectic_basis(b);
    for (std::size_t t = 0; t + 1 < n; t += 2)
        for (std::size_t r = 0; r < m; ++r) {
            const auto [k, l] = pairs[r];
            if ((s.get(t, k) && s.get(t + 1, l)) != (s.get(t, l) && s.get(t + 1, k))) w.marked.flip(0, r);
        }
    return w;
}

JordanType jordan_of_operator(const Gf2Matrix& u) { return jordan_from_powers(nilpotent_powers(u)); }

JordanType jordan_of_space(const BilinearSpace& a) { return jordan_of_operator(a.u); }

bool epsilon_of_space(const BilinearSpace& a, std::uint64_t d) {
    return epsilon_from_powers(a, nilpotent_powers(a.u), d);
}

std::vector<Entry> raw_tags(const BilinearSpace& a) {
    const auto p = nilpotent_powers(a.u);
    const jordan::JordanType j = jordan_from_powers(p);
    std::vector<Entry> out;
    for (const auto& [d, m] : j.blocks()) out.push_back({d, m, epsilon_from_powers(a, p, d)});
    return out;
}

hesselink::EpsilonTaggedType hesselink_of_space(const BilinearSpace& a) {
    return hesselink::EpsilonTaggedType::from_entries(raw_tags(a));
}

BilinearSpace subquotient(const BilinearSpace& a, const Gf2Matrix& v) {
    const std::size_t n = a.dim();
    if (v.rows() != 1 || v.cols() != n) throw InvalidArgument("subquotient: vector has the wrong shape");
    if (v.is_zero()) throw InvalidArgument("subquotient: vector is zero");
    if (!(apply(a.u, v.row(0)) == v)) throw InvalidArgument("subquotient: vector is not fixed by u");
    if (form(a.gram, v.row(0), v.row(0))) throw InvalidArgument("subquotient: vector is not isotropic");

    // Basis of <v>-perp with v first.
    const Gf2Matrix perp = apply(a.gram, v.row(0)).kernel();
    Gf2Matrix basis = v;
    std::size_t rank = 1;
    for (std::size_t i = 0; i < perp.rows(); ++i) {
        Gf2Matrix trial = stack(basis, perp.row_matrix(i));
        const std::size_t r = trial.rank();
        if (r > rank) {
            basis = std::move(trial);
            rank = r;
        }
    }
    const Gf2Matrix cols = basis.transpose(); // n x k
    const auto coords = cols.solve(a.u * cols);
    if (!coords) throw std::logic_error("subquotient: <v>-perp is not u-invariant");
    const Gf2Matrix g = basis * a.gram * cols;
    const std::size_t k = basis.rows();
    BilinearSpace q{Gf2Matrix(k - 1, k - 1), Gf2Matrix(k - 1, k - 1)};
    for (std::size_t r = 1; r < k; ++r)
        for (std::size_t c = 1; c < k; ++c) {
            if (coords->get(r, c)) q.u.set(r - 1, c - 1);
            if (g.get(r, c)) q.gram.set(r - 1, c - 1);
        }
    if (q.gram.rank() != k - 1) throw DegenerateForm("subquotient form is degenerate");
    return q;
}

bool is_degenerate(const BilinearSpace& a) { return a.gram.rank() != a.dim(); }

void check_invariants(const BilinearSpace& a) {
    if (a.u.rows() != a.u.cols() || a.gram.rows() != a.u.rows() || a.gram.cols() != a.u.rows())
        throw std::logic_error("bilinear space has inconsistent shapes");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.gram.get(i, i)) throw std::logic_error("Gram matrix is not alternating");
    if (!(a.gram.transpose() == a.gram)) throw std::logic_error("Gram matrix is not symmetric");
    if (!(a.u.transpose() * a.gram * a.u == a.gram)) throw std::logic_error("form is not u-invariant");
    (void)nilpotent_powers(a.u);
}

} // namespace hnf::oracle
