#pragma once

#include <string>
#include <vector>

#include "hsd/domains.hpp"

namespace hsd {

/// Boundary component F_b of an irreducible domain: the hermitian factor
/// appearing in the boundary of the bounded realization at rank step b,
/// together with its complex dimension.  F_t is a point for every class.
struct BoundaryComponent {
  Factor factor = Factor::point();
  int b = 0;
  int complex_dim = 0;
};

/// Closed forms per class: I(p,q) -> I(p-b,q-b); II(n) -> II(n-2b);
/// III(n) -> III(n-b); IV(n) -> IV(1) at b=1; V -> I(5,1) at b=1;
/// VI -> IV(10), IV(1) at b=1,2.  Zero-dimensional results collapse to
/// Point; no other identification is applied (II(3) stays II(3)).
BoundaryComponent boundary_component(const Domain& d, int b);

/// Factor-wise boundary of a product, indexed by a b-vector.  b_i = 0 keeps
/// the i-th factor whole (improper); the all-zero vector is rejected.
DomainProduct boundary_component(const DomainProduct& d, const std::vector<int>& bs);

/// Symbolic fine structure of the standard maximal parabolic
/// P_b = (M_b . L_b . R_b) |x (Z_b . V_b): hermitian factor L_b acting on
/// F_b, reductive factor R_b of type A_{b-1}, compact factor M_b recorded
/// as a flag, center Z_b of the unipotent radical carrying a self-dual cone
/// of rank b, and V_b carrying a complex structure (dim_Vb is even).
struct LeviDecomposition {
  int b = 0;
  Factor hermitian_factor = Factor::point();
  int reductive_factor_rank = 0;
  bool has_compact_factor_M = false;
  std::string m_descriptor;  // "U(1)" for class I, empty otherwise
  int dim_Zb = 0;
  int dim_Vb = 0;
  int cone_rank = 0;

  int dim_Ub() const { return dim_Zb + dim_Vb; }
};

/// Dimensions by root counting over the restricted datum:
/// dim_Zb = b*mult_long + b(b-1)/2*mult_short_pair,
/// dim_Vb = 2b(t-b)*mult_short_pair + b*mult_very_short.
LeviDecomposition levi_decomposition(const Domain& d, int b);

}  // namespace hsd
