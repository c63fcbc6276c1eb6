#pragma once

#include <string>
#include <vector>

#include "hsd/roots.hpp"

namespace hsd {

/// The six classes of irreducible bounded symmetric domains.
enum class DomainClass { I, II, III, IV, V, VI };

std::string class_name(DomainClass c);

/// An irreducible bounded symmetric domain, identified by class and integer
/// parameters: I(p,q) with p >= q >= 1 (constructor swaps if needed), II(n)
/// n >= 2, III(n) n >= 1, IV(n) n >= 1, and the two exceptional domains V
/// (rank 2, dim 32) and VI (rank 3, dim 54).
///
/// Low-parameter values such as I(1,1), II(2), II(3), III(1), IV(1), IV(2)
/// are representable (they occur as boundary and product factors) but are
/// not accepted as primary query inputs; see valid_primary().
class Domain {
 public:
  static Domain TypeI(int p, int q);
  static Domain TypeII(int n);
  static Domain TypeIII(int n);
  static Domain TypeIV(int n);
  static Domain TypeV();
  static Domain TypeVI();

  DomainClass cls() const { return cls_; }
  int p() const { return p_; }  // I only
  int q() const { return q_; }  // I only
  int n() const { return p_; }  // II/III/IV

  bool operator==(const Domain& o) const {
    return cls_ == o.cls_ && p_ == o.p_ && q_ == o.q_;
  }
  bool operator!=(const Domain& o) const { return !(*this == o); }
  bool operator<(const Domain& o) const;

  int real_rank() const;
  int dim_real() const;
  int dim_complex() const { return dim_real() / 2; }
  bool tube_type() const;

  /// True when the domain is a valid primary input: excludes the degenerate
  /// parameter values that only arise as factors, and the reducible IV(2).
  bool valid_primary() const;
  /// True for every representable value (factors included).
  bool valid_factor() const;
  /// IV(2) is a bidisc, not irreducible.
  bool irreducible() const { return !(cls_ == DomainClass::IV && p_ == 2); }

  std::string str() const;

 private:
  Domain(DomainClass c, int p, int q) : cls_(c), p_(p), q_(q) {}
  DomainClass cls_;
  int p_ = 0, q_ = 0;
};

/// A boundary or product factor: an irreducible domain or a point.
class Factor {
 public:
  static Factor point() { return Factor(); }
  static Factor dom(const Domain& d) { return Factor(d); }

  bool is_point() const { return point_; }
  const Domain& domain() const;

  int rank() const;
  int dim_real() const;
  int dim_complex() const { return dim_real() / 2; }

  bool operator==(const Factor& o) const;
  bool operator!=(const Factor& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Factor() : point_(true), d_(Domain::TypeV()) {}
  explicit Factor(const Domain& d) : point_(false), d_(d) {}
  bool point_;
  Domain d_;
};

/// A finite product of factors.  The factor list is kept in given order;
/// printing collapses consecutive equal factors into powers.
struct DomainProduct {
  std::vector<Factor> factors;

  int rank() const;
  int dim_real() const;
  int dim_complex() const { return dim_real() / 2; }
  bool operator==(const DomainProduct& o) const { return factors == o.factors; }
  std::string str() const;

  static DomainProduct of(std::vector<Factor> fs) { return DomainProduct{std::move(fs)}; }
  static DomainProduct single(const Domain& d) { return DomainProduct{{Factor::dom(d)}}; }
  static DomainProduct power(const Domain& d, int k);
};

/// Restricted root datum: system type (C_t or BC_t), the real rank t, and
/// the three multiplicities (xi_i +- xi_j pairs, long roots 2xi_i, very
/// short roots xi_i).  BC is equivalent to mult_very_short > 0.
struct RestrictedRootDatum {
  bool bc = false;
  int t = 0;
  int mult_short_pair = 0;
  int mult_long = 0;
  int mult_very_short = 0;

  /// t + t(t-1)*mult_short_pair + t*mult_long + t*mult_very_short.
  int dim_real() const;
};

RestrictedRootDatum restricted_root_datum(const Domain& d);

int real_rank(const Domain& d);
int dim_real(const Domain& d);
bool is_tube_type(const Domain& d);

/// Canonical representative under the low-rank identifications
/// I(1,1) = II(2) = III(1) = IV(1), II(3) = I(3,1), IV(3) = III(2),
/// IV(4) = I(2,2), IV(6) = II(4).  Identity on everything else; idempotent.
/// The identifications are applied only here, never silently elsewhere.
Domain normalize(const Domain& d);

bool same_domain(const Domain& a, const Domain& b);
bool same_factor(const Factor& a, const Factor& b);

/// Absolute root system together with the noncompact positive roots
/// (an abelian set: the sum of two members is never a root).
struct NoncompactRealization {
  RootSystem system;
  std::vector<Root> sigma_plus;  // ascending lexicographic
};

NoncompactRealization noncompact_realization(const Domain& d);

/// Greedy strongly orthogonal cascade inside sigma_plus: repeatedly take the
/// lexicographically least root strongly orthogonal to everything chosen.
/// The result has length real_rank(d).
std::vector<Root> strongly_orthogonal_cascade(const Domain& d);

}  // namespace hsd
