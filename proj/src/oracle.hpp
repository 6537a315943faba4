#pragma once

#include "gf2.hpp"
#include "hesselink.hpp"
#include "jordan.hpp"

#include <vector>

namespace hnf::oracle {

// Unipotent u with a u-invariant alternating Gram matrix on an explicit basis.
struct BilinearSpace {
    Gf2Matrix u;
    Gf2Matrix gram;
    std::size_t dim() const noexcept { return u.rows(); }
};

// A space together with a distinguished u-fixed vector (1 x dim).
struct MarkedSpace {
    BilinearSpace space;
    Gf2Matrix marked;
};

BilinearSpace build_V(std::uint64_t d);
BilinearSpace build_W(std::uint64_t d);
BilinearSpace direct_sum(const BilinearSpace& a, const BilinearSpace& b);
BilinearSpace tensor_space(const BilinearSpace& a, const BilinearSpace& b);
// Orthogonal sum of V(2k) and W(d) summands realizing the type.
BilinearSpace build(const hesselink::SymplecticType& s);

// Unipotent matrix in Jordan form with the given block sizes.
Gf2Matrix jordan_matrix(const jordan::JordanType& j);

// V (x) V* with b_V; marked vector is gamma = sum e_i (x) e_i*.
MarkedSpace dual_tensor_space(const Gf2Matrix& u);
MarkedSpace dual_tensor_space(const BilinearSpace& a);
// Induced action on the basis e_i ^ e_j, i < j.
Gf2Matrix wedge_operator(const Gf2Matrix& u);
// Exterior square with a_V; marked vector is the form's bivector beta.
MarkedSpace wedge_space(const BilinearSpace& a);

// Rows p1, q1, p2, q2, ... with b(p_i, q_i) = 1 and all other pairs 0.
Gf2Matrix symplectic_basis(const Gf2Matrix& gram);

jordan::JordanType jordan_of_operator(const Gf2Matrix& u);
jordan::JordanType jordan_of_space(const BilinearSpace& a);
bool epsilon_of_space(const BilinearSpace& a, std::uint64_t d);
BilinearSpace subquotient(const BilinearSpace& a, const Gf2Matrix& v);
hesselink::EpsilonTaggedType hesselink_of_space(const BilinearSpace& a);

// Per-size tags without validation, for checking the parity laws.
std::vector<hesselink::Entry> raw_tags(const BilinearSpace& a);

// Throws std::logic_error unless u^T G u = G, G is alternating and u unipotent.
void check_invariants(const BilinearSpace& a);
bool is_degenerate(const BilinearSpace& a);

} // namespace hnf::oracle
