#pragma once

#include <string>
#include <vector>

#include "hsd/domains.hpp"
#include "hsd/incidence.hpp"

namespace hsd {

/// The k-rational index catalog over a totally real number field:
/// A2(d;n,s)   unitary over a degree-d division algebra, absolute type A_n
/// Asplit(n;q) the d = 1 quasi-split-type unitary family, Witt index q
/// 1D2(n,s)/2D2(n,s) quaternionic skew-hermitian, absolute type D_n
/// C2(n,s)     quaternionic hermitian (totally indefinite), absolute C_n
/// C1(n)       split symplectic
/// IV(n;s)     quadratic form of Witt index s in {1,2}, real form IV(n)
/// E6-28, E7-31 the two exceptional hermitian indices.
enum class KFamily { A2, Asplit, D2_1, D2_2, C2, C1, IVForm, E6_28, E7_31 };

std::string k_family_name(KFamily f);

struct KIndex {
  KFamily family = KFamily::C1;
  int d = 0;  // A-types: division algebra degree (1 for Asplit)
  int n = 0;  // A2/Asplit: absolute A_n; D2: D_n; C2/C1: C_n; IVForm: IV(n)
  int s = 0;  // k-rank (= q for Asplit, = n for C1)

  static KIndex A2(int d, int n, int s);
  static KIndex Asplit(int n, int q);
  static KIndex D2(int variant, int n, int s);  // variant 1 or 2
  static KIndex C2(int n, int s);
  static KIndex C1(int n);
  static KIndex IVForm(int n, int s);
  static KIndex E6();
  static KIndex E7();

  bool operator==(const KIndex& o) const = default;
  bool is_a_type() const { return family == KFamily::A2 || family == KFamily::Asplit; }
  bool is_d_type() const { return family == KFamily::D2_1 || family == KFamily::D2_2; }
  std::string str() const;
};

/// Datum at one real place: a signature for the A- and IV-families, a
/// definite/split flag for the quaternionic D-family.  C- and E-type
/// indices carry no per-place choice; their entries are accepted and
/// ignored (the count still sets the degree f).
enum class PlaceKind { signature, definite, split };

struct ArchPlace {
  PlaceKind kind = PlaceKind::definite;
  int p = 0, q = 0;

  static ArchPlace sig(int p, int q);
  static ArchPlace def();
  static ArchPlace spl();
  bool operator==(const ArchPlace& o) const = default;
  std::string str() const;
};

struct ArchimedeanData {
  std::vector<ArchPlace> places;

  int degree_f() const { return static_cast<int>(places.size()); }
  bool operator==(const ArchimedeanData& o) const = default;
  std::string str() const;  // comma-separated place list
};

/// One place, chosen canonically: A-types (n+1-sd, sd); D2 definite;
/// IVForm (n,2); flag placeholder for C/E types.
ArchimedeanData default_arch(const KIndex& ix);

/// Empty result means valid; otherwise each entry names one violated
/// catalog constraint.
std::vector<std::string> validate_index(const KIndex& ix);
std::vector<std::string> validate_arch(const KIndex& ix, const ArchimedeanData& a);

struct QGroup {
  KIndex index;
  ArchimedeanData arch;
};

/// Index + arch constraints plus the global exclusions (isotropy, and the
/// all-SL2(R) degenerate product).
std::vector<std::string> validate_qgroup(const QGroup& g);

/// The real form cut out at one archimedean place.
Domain real_form_at_place(const KIndex& ix, const ArchPlace& pl);

/// k-restricted root system of the index, in the hermitian normalization
/// (C_s or BC_s).
struct KRootSystem {
  bool bc = false;
  int rank = 0;
};
KRootSystem k_root_system(const KIndex& ix);

/// True when the maximal k-split torus is maximal R-split at every place:
/// the k-system and every place's restricted datum agree in type and rank.
bool is_split_over_R(const QGroup& g);

/// Position of the b-th simple k-root among the simple restricted R-roots
/// (eta-numbering); independent of the place for every cataloged family.
int c_map(const KIndex& ix, int b);

struct RationalBoundary {
  int b = 0;
  std::vector<int> per_place_c;
  std::vector<Factor> per_place_factor;
  bool is_zero_dimensional = false;  // every per-place factor a point
};

RationalBoundary rational_boundary(const QGroup& g, int b);

/// L_b is anisotropic exactly at the last rational boundary step.
bool anisotropic_hermitian_levi(const QGroup& g, int b);

/// How the incident k-subgroup is built:
/// LeviCentralizerPair  N = L x Z_G(L) with L the hermitian Levi part
/// Table3Row            the b = s pair (anisotropic L, split centralizer)
/// PolydiscOverK        maximal polydisc defined over k
/// HyperbolicPlaneSplit per-plane decomposition (the C2 boundary cases)
/// OrthoComplement      codimension-one (or -two) orthogonal complement
/// RegularSubalgebra    real-level table plan realized over k (split case)
enum class QConstruction {
  LeviCentralizerPair,
  Table3Row,
  PolydiscOverK,
  HyperbolicPlaneSplit,
  OrthoComplement,
  RegularSubalgebra,
};
enum class QException { none, C2_2n_n, C2_2_1 };

std::string q_construction_name(QConstruction c);
std::string q_exception_name(QException e);

struct QIncidencePlan {
  QConstruction construction = QConstruction::LeviCentralizerPair;
  std::string symbolic;       // index pair or construction description
  std::string z_real_points;  // centralizer real points, e.g. "SU(6,6)"
  std::vector<DomainProduct> real_domains;  // one product per place
  IncidenceConditions conditions;           // aggregated over places
  bool cond4 = true;
  QException exception = QException::none;
  std::string source_row;
};

/// The single incident k-subgroup answer for (g, b), with the two C2
/// exceptional indices tagged instead of silently patched.
QIncidencePlan incident_qsubgroup(const QGroup& g, int b);

}  // namespace hsd
