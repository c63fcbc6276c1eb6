#include "hsd/parabolic.hpp"

#include <stdexcept>

namespace hsd {

namespace {

Factor boundary_factor(const Domain& d, int b) {
  switch (d.cls()) {
    case DomainClass::I:
      if (b == d.q()) return Factor::point();
      return Factor::dom(Domain::TypeI(d.p() - b, d.q() - b));
    case DomainClass::II: {
      const int m = d.n() - 2 * b;
      if (m <= 1) return Factor::point();
      return Factor::dom(Domain::TypeII(m));
    }
    case DomainClass::III:
      if (b == d.n()) return Factor::point();
      return Factor::dom(Domain::TypeIII(d.n() - b));
    case DomainClass::IV:
      if (b == d.real_rank()) return Factor::point();
      return Factor::dom(Domain::TypeIV(1));
    case DomainClass::V:
      return b == 1 ? Factor::dom(Domain::TypeI(5, 1)) : Factor::point();
    case DomainClass::VI:
      if (b == 1) return Factor::dom(Domain::TypeIV(10));
      if (b == 2) return Factor::dom(Domain::TypeIV(1));
      return Factor::point();
  }
  throw std::logic_error("unknown domain class");
}

}  // namespace

BoundaryComponent boundary_component(const Domain& d, int b) {
  if (!d.irreducible())
    throw std::invalid_argument("boundary_component: reducible domain, use the product overload");
  if (b < 1 || b > d.real_rank())
    throw std::out_of_range("boundary_component: b out of range");
  BoundaryComponent bc;
  bc.factor = boundary_factor(d, b);
  bc.b = b;
  bc.complex_dim = bc.factor.dim_complex();
  return bc;
}

DomainProduct boundary_component(const DomainProduct& d, const std::vector<int>& bs) {
  if (bs.size() != d.factors.size())
    throw std::invalid_argument("boundary_component: b-vector length != factor count");
  bool proper = false;
  for (int b : bs) proper = proper || b != 0;
  if (!proper)
    throw std::invalid_argument("boundary_component: all-zero b-vector has no boundary component");
  std::vector<Factor> out;
  out.reserve(d.factors.size());
  for (size_t i = 0; i < bs.size(); ++i) {
    const Factor& f = d.factors[i];
    if (bs[i] == 0) {
      out.push_back(f);  // improper: the factor itself
      continue;
    }
    if (f.is_point())
      throw std::out_of_range("boundary_component: nonzero b on a point factor");
    out.push_back(boundary_component(f.domain(), bs[i]).factor);
  }
  return DomainProduct::of(std::move(out));
}

LeviDecomposition levi_decomposition(const Domain& d, int b) {
  const RestrictedRootDatum rr = restricted_root_datum(d);
  if (b < 1 || b > rr.t) throw std::out_of_range("levi_decomposition: b out of range");
  LeviDecomposition ld;
  ld.b = b;
  ld.hermitian_factor = boundary_component(d, b).factor;
  ld.reductive_factor_rank = b - 1;
  ld.has_compact_factor_M =
      d.cls() == DomainClass::I || d.cls() == DomainClass::IV;
  if (d.cls() == DomainClass::I) ld.m_descriptor = "U(1)";
  ld.dim_Zb = b * rr.mult_long + b * (b - 1) / 2 * rr.mult_short_pair;
  ld.dim_Vb = 2 * b * (rr.t - b) * rr.mult_short_pair + b * rr.mult_very_short;
  ld.cone_rank = b;
  return ld;
}

}  // namespace hsd
