#pragma once

#include <string>
#include <vector>

#include "drg/derange.hpp"
#include "drg/fqlin.hpp"
#include "drg/permcore.hpp"

namespace drg::fixtures {

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
/// Symmetries of an n-gon on its n vertices, order 2n.
PermGroup dihedral(std::size_t n);

/// x -> a x^(p^frob) + b on the q field elements (points are encodings).
Permutation affine_map(const FqField& k, Fq a, Fq b, unsigned frob = 0);
/// Translations by F_q.
PermGroup translations(unsigned q);
/// x -> a x + b with a ranging over the subgroup of order m of F_q^*.
PermGroup affine_subgroup(unsigned q, unsigned m);
PermGroup agl1(unsigned q);
/// Frobenius group of order q(q-1)/2 (q odd).
PermGroup half_agl1(unsigned q);
/// AGL(1,q) extended by the field automorphisms.
PermGroup agaml1(unsigned q);

/// Möbius action on the q+1 points of the projective line; point q is ∞.
PermGroup pgl2(unsigned q);
PermGroup psl2(unsigned q);
/// GL(3,2) ≅ PSL(2,7) on the 7 nonzero vectors of F_2^3.
PermGroup gl32_on_points();

/// Product action of base ≀ top on base_degree^top_degree points, point
/// index = sum x_i m^i.
PermGroup product_action(const PermGroup& base, const PermGroup& top);

/// A group on the elements of `t` (points are element indices) generated by
/// right multiplications and by conjugations by `automorphisms`, which must
/// normalize t.  Returns (group, right regular subgroup).
std::pair<PermGroup, PermGroup> holomorph(const PermGroup& t, const std::vector<Permutation>& automorphisms);

/// (T x T) ⋊ C2 on the elements of T: x -> a^-1 x b, with the swap acting as
/// inversion.  This is the action on the cosets of the diagonal.
PermGroup diagonal_action(const PermGroup& t);

} // namespace drg::fixtures
