#include "hsd/rational.hpp"

#include <stdexcept>

#include "hsd/parabolic.hpp"

namespace hsd {

std::string k_family_name(KFamily f) {
  switch (f) {
    case KFamily::A2: return "2A";
    case KFamily::Asplit: return "Asplit";
    case KFamily::D2_1: return "1D2";
    case KFamily::D2_2: return "2D2";
    case KFamily::C2: return "C2";
    case KFamily::C1: return "C1";
    case KFamily::IVForm: return "IV";
    case KFamily::E6_28: return "E6-28";
    case KFamily::E7_31: return "E7-31";
  }
  return "?";
}

KIndex KIndex::A2(int d, int n, int s) { return KIndex{KFamily::A2, d, n, s}; }
KIndex KIndex::Asplit(int n, int q) { return KIndex{KFamily::Asplit, 1, n, q}; }
KIndex KIndex::D2(int variant, int n, int s) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("D2 variant must be 1 or 2");
  return KIndex{variant == 1 ? KFamily::D2_1 : KFamily::D2_2, 0, n, s};
}
KIndex KIndex::C2(int n, int s) { return KIndex{KFamily::C2, 0, n, s}; }
KIndex KIndex::C1(int n) { return KIndex{KFamily::C1, 0, n, n}; }
KIndex KIndex::IVForm(int n, int s) { return KIndex{KFamily::IVForm, 0, n, s}; }
KIndex KIndex::E6() { return KIndex{KFamily::E6_28, 0, 6, 1}; }
KIndex KIndex::E7() { return KIndex{KFamily::E7_31, 0, 7, 2}; }

std::string KIndex::str() const {
  const std::string N = std::to_string(n);
  const std::string S = std::to_string(s);
  switch (family) {
    case KFamily::A2: return "2A(" + std::to_string(d) + ";" + N + "," + S + ")";
    case KFamily::Asplit: return "Asplit(" + N + ";" + S + ")";
    case KFamily::D2_1: return "1D2(" + N + "," + S + ")";
    case KFamily::D2_2: return "2D2(" + N + "," + S + ")";
    case KFamily::C2: return "C2(" + N + "," + S + ")";
    case KFamily::C1: return "C1(" + N + ")";
    case KFamily::IVForm: return "IV(" + N + ";" + S + ")";
    case KFamily::E6_28: return "E6-28";
    case KFamily::E7_31: return "E7-31";
  }
  return "?";
}

ArchPlace ArchPlace::sig(int p, int q) { return ArchPlace{PlaceKind::signature, p, q}; }
ArchPlace ArchPlace::def() { return ArchPlace{PlaceKind::definite, 0, 0}; }
ArchPlace ArchPlace::spl() { return ArchPlace{PlaceKind::split, 0, 0}; }

std::string ArchPlace::str() const {
  switch (kind) {
    case PlaceKind::signature:
      return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case PlaceKind::definite: return "def";
    case PlaceKind::split: return "split";
  }
  return "?";
}

std::string ArchimedeanData::str() const {
  std::string out;
  for (size_t i = 0; i < places.size(); ++i) {
    if (i) out += ",";
    out += places[i].str();
  }
  return out;
}

ArchimedeanData default_arch(const KIndex& ix) {
  ArchimedeanData a;
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit:
      a.places.push_back(ArchPlace::sig(ix.n + 1 - ix.s * ix.d, ix.s * ix.d));
      break;
    case KFamily::IVForm:
      a.places.push_back(ArchPlace::sig(ix.n, 2));
      break;
    default:
      a.places.push_back(ArchPlace::def());
      break;
  }
  return a;
}

std::vector<std::string> validate_index(const KIndex& ix) {
  std::vector<std::string> v;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) v.push_back(msg);
  };
  switch (ix.family) {
    case KFamily::A2:
      need(ix.d >= 1, "2A: d >= 1 required");
      need(ix.n >= 1, "2A: n >= 1 required");
      need(ix.s >= 1, "2A: s >= 1 required (isotropic)");
      if (!v.empty()) break;
      need((ix.n + 1) % ix.d == 0, "2A: d must divide n+1");
      need(2 * ix.s * ix.d <= ix.n + 1, "2A: 2sd <= n+1 required");
      need(!(ix.d == 1 && 2 * ix.s >= ix.n + 1), "2A: if d = 1, then 2s < n+1");
      break;
    case KFamily::Asplit:
      need(ix.n >= 1, "Asplit: n >= 1 required");
      need(ix.s >= 1, "Asplit: q >= 1 required (isotropic)");
      need(2 * ix.s <= ix.n + 1, "Asplit: 2q <= n+1 required");
      break;
    case KFamily::D2_1:
    case KFamily::D2_2: {
      const bool even = ix.family == KFamily::D2_1;
      need(ix.n >= (even ? 4 : 5), even ? "1D2: n >= 4 required" : "2D2: n >= 5 required");
      need(ix.n % 2 == (even ? 0 : 1),
           even ? "1D2: n must be even (n = 2l)" : "2D2: n must be odd (n = 2l+1)");
      need(ix.s >= 1, "D2: s >= 1 required (isotropic)");
      if (!v.empty()) break;
      need(ix.s < ix.n / 2, "D2: s < l required (l = [n/2])");
      break;
    }
    case KFamily::C2:
      need(ix.n >= 2, "C2: n >= 2 required");
      need(ix.s >= 1, "C2: s >= 1 required (isotropic)");
      if (!v.empty()) break;
      if (ix.s >= 2)
        need(ix.s < ix.n / 2 || 2 * ix.s == ix.n,
             "C2: s >= 2 requires s < [n/2] or the boundary case 2s = n");
      else
        need(2 * ix.s <= ix.n, "C2: 2s <= n required");
      break;
    case KFamily::C1:
      need(ix.n >= 2, "C1: n >= 2 required");
      break;
    case KFamily::IVForm:
      need(ix.n >= 3, "IV: n >= 3 required");
      need(ix.s == 1 || ix.s == 2, "IV: Witt index s must be 1 or 2");
      break;
    case KFamily::E6_28:
    case KFamily::E7_31:
      break;
  }
  return v;
}

std::vector<std::string> validate_arch(const KIndex& ix, const ArchimedeanData& a) {
  std::vector<std::string> v;
  if (a.places.empty()) {
    v.push_back("arch: at least one real place required");
    return v;
  }
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit: {
      const int sd = ix.s * ix.d;
      for (const ArchPlace& pl : a.places) {
        if (pl.kind != PlaceKind::signature) {
          v.push_back("arch: A-type places take signatures (p,q)");
          continue;
        }
        if (pl.p < pl.q || pl.q < 1)
          v.push_back("arch: signature must satisfy p >= q >= 1");
        else if (pl.p + pl.q != ix.n + 1)
          v.push_back("arch: signature must satisfy p + q = n+1");
        else if (pl.q < sd)
          v.push_back("arch: Witt index forces q >= sd at every place");
      }
      break;
    }
    case KFamily::D2_1:
    case KFamily::D2_2: {
      bool any_def = false, any_split = false;
      for (const ArchPlace& pl : a.places) {
        if (pl.kind == PlaceKind::signature) {
          v.push_back("arch: D2 places take def/split flags");
          continue;
        }
        (pl.kind == PlaceKind::definite ? any_def : any_split) = true;
      }
      if (any_split && ix.s > 1)
        v.push_back("arch: a split place bounds the Witt index by s <= 1");
      if (any_def && any_split && ix.n != 4)
        v.push_back("arch: mixed definite/split places occur only for n = 4");
      break;
    }
    case KFamily::C2:
    case KFamily::C1:
    case KFamily::E6_28:
    case KFamily::E7_31:
      for (const ArchPlace& pl : a.places)
        if (pl.kind == PlaceKind::signature)
          v.push_back("arch: this index takes def/split placeholders only");
      break;
    case KFamily::IVForm:
      for (const ArchPlace& pl : a.places) {
        if (pl.kind != PlaceKind::signature) {
          v.push_back("arch: IV places take signatures (p,q)");
          continue;
        }
        if (pl.p != ix.n || pl.q != 2)
          v.push_back("arch: IV signature must be (n,2) at every place");
      }
      break;
  }
  return v;
}

std::vector<std::string> validate_qgroup(const QGroup& g) {
  std::vector<std::string> v = validate_index(g.index);
  if (!v.empty()) return v;
  v = validate_arch(g.index, g.arch);
  if (!v.empty()) return v;
  bool all_sl2 = true;
  for (const ArchPlace& pl : g.arch.places) {
    const Domain d = real_form_at_place(g.index, pl);
    all_sl2 = all_sl2 && d.real_rank() == 1 && d.dim_real() == 2;
  }
  if (all_sl2) v.push_back("excluded: every real factor is of type SL(2,R)");
  return v;
}

Domain real_form_at_place(const KIndex& ix, const ArchPlace& pl) {
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit:
      if (pl.kind != PlaceKind::signature)
        throw std::invalid_argument("real_form_at_place: A-type place needs a signature");
      return Domain::TypeI(pl.p, pl.q);
    case KFamily::D2_1:
    case KFamily::D2_2:
      if (pl.kind == PlaceKind::definite) return Domain::TypeII(ix.n);
      if (pl.kind == PlaceKind::split) return Domain::TypeIV(2 * ix.n - 2);
      throw std::invalid_argument("real_form_at_place: D2 place needs def/split");
    case KFamily::C2:
    case KFamily::C1:
      return Domain::TypeIII(ix.n);
    case KFamily::IVForm:
      return Domain::TypeIV(ix.n);
    case KFamily::E6_28:
      return Domain::TypeV();
    case KFamily::E7_31:
      return Domain::TypeVI();
  }
  throw std::logic_error("unknown index family");
}

KRootSystem k_root_system(const KIndex& ix) {
  switch (ix.family) {
    case KFamily::A2: return {2 * ix.s * ix.d != ix.n + 1, ix.s};
    case KFamily::Asplit: return {2 * ix.s != ix.n + 1, ix.s};
    case KFamily::D2_1:
    case KFamily::D2_2: return {true, ix.s};
    case KFamily::C2: return {ix.n != 2 * ix.s, ix.s};
    case KFamily::C1: return {false, ix.n};
    case KFamily::IVForm: return {false, ix.s};
    case KFamily::E6_28: return {true, 1};
    case KFamily::E7_31: return {true, 2};
  }
  throw std::logic_error("unknown index family");
}

bool is_split_over_R(const QGroup& g) {
  const KRootSystem ks = k_root_system(g.index);
  for (const ArchPlace& pl : g.arch.places) {
    const RestrictedRootDatum rr =
        restricted_root_datum(real_form_at_place(g.index, pl));
    if (rr.t != ks.rank || (rr.mult_very_short > 0) != ks.bc) return false;
  }
  return true;
}

int c_map(const KIndex& ix, int b) {
  if (b < 1 || b > ix.s) throw std::out_of_range("c_map: b out of range");
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit: return b * ix.d;
    case KFamily::D2_1:
    case KFamily::D2_2: return b;
    case KFamily::C2: return 2 * b;
    case KFamily::C1: return b;
    case KFamily::IVForm: return ix.s == 2 ? b : 2;
    case KFamily::E6_28: return 1;
    case KFamily::E7_31: return b;
  }
  throw std::logic_error("unknown index family");
}

RationalBoundary rational_boundary(const QGroup& g, int b) {
  if (b < 1 || b > g.index.s)
    throw std::out_of_range("rational_boundary: b out of range");
  RationalBoundary rb;
  rb.b = b;
  rb.is_zero_dimensional = true;
  const int c = c_map(g.index, b);
  for (const ArchPlace& pl : g.arch.places) {
    const Domain form = real_form_at_place(g.index, pl);
    const Factor f = boundary_component(form, c).factor;
    rb.per_place_c.push_back(c);
    rb.per_place_factor.push_back(f);
    rb.is_zero_dimensional = rb.is_zero_dimensional && f.is_point();
  }
  return rb;
}

bool anisotropic_hermitian_levi(const QGroup& g, int b) {
  if (b < 1 || b > g.index.s)
    throw std::out_of_range("anisotropic_hermitian_levi: b out of range");
  return b == g.index.s;
}

std::string q_construction_name(QConstruction c) {
  switch (c) {
    case QConstruction::LeviCentralizerPair: return "levi_centralizer_pair";
    case QConstruction::Table3Row: return "table3_row";
    case QConstruction::PolydiscOverK: return "polydisc_over_k";
    case QConstruction::HyperbolicPlaneSplit: return "hyperbolic_plane_split";
    case QConstruction::OrthoComplement: return "ortho_complement";
    case QConstruction::RegularSubalgebra: return "regular_subalgebra";
  }
  return "?";
}

std::string q_exception_name(QException e) {
  switch (e) {
    case QException::none: return "none";
    case QException::C2_2n_n: return "C2_2n_n";
    case QException::C2_2_1: return "C2_2_1";
  }
  return "?";
}

namespace {

/// Conditions aggregated over places: c1 and c3 must hold at every place,
/// c2 is catalog provenance, the variant is global.
IncidenceConditions aggregate_conditions(const std::vector<Domain>& forms,
                                         const std::vector<Factor>& bfs,
                                         const std::vector<DomainProduct>& plans,
                                         bool provenance_c2, CondVariant variant) {
  IncidenceConditions c;
  c.variant = variant;
  c.c2 = provenance_c2;
  c.c1 = true;
  c.c3 = true;
  for (size_t i = 0; i < forms.size(); ++i) {
    c.c1 = c.c1 && plans[i].rank() == forms[i].real_rank();
    if (!bfs[i].is_point()) {
      bool found = false;
      for (const Factor& f : plans[i].factors) found = found || same_factor(f, bfs[i]);
      c.c3 = c.c3 && found;
    } else {
      const Factor& lead = plans[i].factors.front();
      c.c3 = c.c3 && !lead.is_point() && lead.domain().irreducible() &&
             boundary_component(lead.domain(), lead.rank()).factor.is_point();
    }
  }
  return c;
}

CondVariant zero_dim_variant(const Domain& ambient, bool ambient_as_iv4) {
  if (ambient_as_iv4) return CondVariant::prime;
  return is_ED(ambient) ? CondVariant::double_prime : CondVariant::prime;
}

/// The unique Table-1 plan factors for (form, c); requires c < rank(form).
DomainProduct table1_factors(const Domain& form, int c) {
  return incident_subdomain(form, c).front().factors;
}

/// The first b = t plan of the requested kind from the Table 2 catalog.
DomainProduct table2_factors(const Domain& form, PlanKind kind) {
  for (const SymmetricSubgroupPlan& p : incident_subdomain(form, form.real_rank()))
    if (p.kind == kind) return p.factors;
  throw std::logic_error("table2_factors: no plan of the requested kind");
}

std::string d2_index_str(int n, int s) {
  return KIndex::D2(n % 2 == 0 ? 1 : 2, n, s).str();
}

QIncidencePlan c2_exception(const QGroup& g, const std::vector<Domain>& forms,
                            const std::vector<Factor>& bfs) {
  const int s = g.index.s;
  QIncidencePlan plan;
  plan.construction = QConstruction::HyperbolicPlaneSplit;
  plan.source_row = "hyperbolic plane decomposition";
  if (s == 1) {
    plan.exception = QException::C2_2_1;
    plan.symbolic =
        "III(1) inside III(2) from the hyperbolic-plane normal form; "
        "conditions 1 and 4 fail";
    plan.cond4 = false;
    for (size_t i = 0; i < forms.size(); ++i)
      plan.real_domains.push_back(DomainProduct::single(Domain::TypeIII(1)));
  } else {
    plan.exception = QException::C2_2n_n;
    plan.symbolic = "C2(2,1)^" + std::to_string(s) +
                    ": one hyperbolic plane per factor, N(R) = Sp(4,R)^" +
                    std::to_string(s) + " per place; minimal over k, not over R";
    plan.cond4 = true;
    for (size_t i = 0; i < forms.size(); ++i)
      plan.real_domains.push_back(DomainProduct::power(Domain::TypeIII(2), s));
  }
  plan.conditions = aggregate_conditions(forms, bfs, plan.real_domains,
                                         /*provenance_c2=*/false,
                                         zero_dim_variant(forms.front(), false));
  return plan;
}

QIncidencePlan split_over_r_plan(const QGroup& g, int b,
                                 const std::vector<Domain>& forms,
                                 const std::vector<Factor>& bfs) {
  const KIndex& ix = g.index;
  const int s = ix.s;
  const Domain& form = forms.front();  // split over R: all places equal
  QIncidencePlan plan;
  CondVariant variant = CondVariant::plain;
  if (b < s) {
    plan.construction = QConstruction::RegularSubalgebra;
    plan.symbolic = "real-level Table 1 plan defined over k (group split over R)";
    plan.source_row = "Table 1, row " + class_name(form.cls()) + " per place";
    for (const Domain& f : forms) plan.real_domains.push_back(table1_factors(f, b));
  } else if (is_ED(form)) {
    plan.construction = QConstruction::PolydiscOverK;
    plan.symbolic = "maximal k-polydisc (I(1,1))^" + std::to_string(s);
    plan.source_row = "maximal polydisc";
    variant = CondVariant::double_prime;
    for (const Domain& f : forms)
      plan.real_domains.push_back(table2_factors(f, PlanKind::Polydisc));
  } else if (ix.is_a_type() && s == 1) {
    // Witt index one: stabilizer of a codimension-one k-subspace.
    plan.construction = QConstruction::OrthoComplement;
    plan.symbolic = "stabilizer of a codimension-one k-subspace, type I(" +
                    std::to_string(form.p() - 1) + ",1)";
    plan.source_row = "Table 2, row I (maximal) per place";
    variant = CondVariant::prime;
    for (const Domain& f : forms)
      plan.real_domains.push_back(table2_factors(f, PlanKind::Table2_maximal));
  } else if (ix.family == KFamily::IVForm) {
    plan.construction = ix.n % 2 == 0 ? QConstruction::OrthoComplement
                                      : QConstruction::RegularSubalgebra;
    plan.symbolic = ix.n % 2 == 0
                        ? "orthogonal complement of an anisotropic k-line, SO(" +
                              std::to_string(ix.n - 1) + ",2)"
                        : "tube subdomain IV(" + std::to_string(ix.n - 1) +
                              ") defined over k";
    plan.source_row = "Table 2, row IV (tube) per place";
    variant = CondVariant::prime;
    for (const Domain& f : forms)
      plan.real_domains.push_back(table2_factors(f, PlanKind::Table2_tube));
  } else {
    // A-type, s >= 2, p > q: the maximal tube subdomain I(s,s) over k.
    plan.construction = QConstruction::RegularSubalgebra;
    plan.symbolic = "maximal tube subdomain I(" + std::to_string(s) + "," +
                    std::to_string(s) + ") defined over k";
    plan.source_row = "Table 2, row I (tube) per place";
    variant = CondVariant::prime;
    for (const Domain& f : forms)
      plan.real_domains.push_back(table2_factors(f, PlanKind::Table2_tube));
  }
  plan.conditions = aggregate_conditions(forms, bfs, plan.real_domains, true, variant);
  return plan;
}

QIncidencePlan levi_pair_plan(const QGroup& g, int b,
                              const std::vector<Domain>& forms,
                              const std::vector<Factor>& bfs) {
  const KIndex& ix = g.index;
  const int c = c_map(ix, b);
  QIncidencePlan plan;
  plan.construction = QConstruction::LeviCentralizerPair;
  for (const Domain& f : forms) plan.real_domains.push_back(table1_factors(f, c));
  plan.source_row = "Levi-centralizer pair; Table 1, row " +
                    class_name(forms.front().cls()) + " per place";
  if (ix.is_a_type()) {
    const int bd = b * ix.d;
    plan.symbolic = "L = " + KIndex::A2(ix.d, ix.n - 2 * bd, ix.s - b).str() +
                    ", Z_G(L) = " + KIndex::A2(ix.d, 2 * bd - 1, b).str();
    plan.z_real_points = "SU(" + std::to_string(bd) + "," + std::to_string(bd) + ")";
  } else if (ix.is_d_type()) {
    plan.symbolic = "L = " + d2_index_str(ix.n - 2 * b, ix.s - b) +
                    ", Z_G(L) = " + KIndex::D2(1, 2 * b, b).str();
    plan.z_real_points = "SU(" + std::to_string(2 * b) + ",H)";
  } else {  // C2
    plan.symbolic = "L = " + KIndex::C2(ix.n - 2 * b, ix.s - b).str() +
                    ", Z_G(L) = " + KIndex::C2(2 * b, b).str();
    plan.z_real_points = "Sp(" + std::to_string(4 * b) + ",R)";
  }
  plan.conditions =
      aggregate_conditions(forms, bfs, plan.real_domains, true, CondVariant::plain);
  return plan;
}

QIncidencePlan table3_plan(const QGroup& g, const std::vector<Domain>& forms,
                           const std::vector<Factor>& bfs) {
  const KIndex& ix = g.index;
  const int s = ix.s;
  const int c = c_map(ix, s);
  QIncidencePlan plan;
  plan.construction = QConstruction::Table3Row;
  for (size_t i = 0; i < forms.size(); ++i) {
    if (bfs[i].is_point()) {
      // Compact complement at this place: only the tube factor survives.
      const int sd = s * ix.d;
      plan.real_domains.push_back(DomainProduct::single(Domain::TypeI(sd, sd)));
    } else {
      plan.real_domains.push_back(table1_factors(forms[i], c));
    }
  }
  if (ix.is_a_type()) {
    const int sd = s * ix.d;
    const std::string l = ix.n - 2 * sd >= 1
                              ? KIndex::A2(ix.d, ix.n - 2 * sd, 0).str()
                              : "(anisotropic torus)";
    plan.symbolic = "L = " + l + " (anisotropic), Z_G(L) = " +
                    KIndex::A2(ix.d, 2 * sd - 1, s).str();
    plan.z_real_points = "SU(" + std::to_string(sd) + "," + std::to_string(sd) + ")";
    plan.source_row = "Table 3, row 2A";
  } else if (ix.is_d_type()) {
    plan.symbolic = "L = " + d2_index_str(ix.n - 2 * s, 0) + " (anisotropic), Z_G(L) = " +
                    KIndex::D2(1, 2 * s, s).str();
    plan.z_real_points = "SU(" + std::to_string(2 * s) + ",H)";
    plan.source_row = "Table 3, row " + k_family_name(ix.family);
  } else {  // C2, n > 2s
    plan.symbolic = "L = " + KIndex::C2(ix.n - 2 * s, 0).str() +
                    " (anisotropic), Z_G(L) = " + KIndex::C2(2 * s, s).str();
    plan.z_real_points = "Sp(" + std::to_string(4 * s) + ",R)";
    plan.source_row = "Table 3, row C2";
  }
  plan.conditions =
      aggregate_conditions(forms, bfs, plan.real_domains, true, CondVariant::plain);
  return plan;
}

QIncidencePlan zero_dim_plan(const QGroup& g, const std::vector<Domain>& forms,
                             const std::vector<Factor>& bfs) {
  const KIndex& ix = g.index;
  const int s = ix.s;
  QIncidencePlan plan;
  if (ix.family == KFamily::IVForm) {  // Witt index 1 (s = 2 is split over R)
    plan.construction = QConstruction::OrthoComplement;
    plan.symbolic = "stabilizer of a codimension-one k-subspace, type IV(" +
                    std::to_string(ix.n - 1) + ")";
    plan.source_row = "Table 2, row IV (maximal) per place";
    for (const Domain& f : forms)
      plan.real_domains.push_back(table2_factors(f, PlanKind::Table2_maximal));
    plan.conditions = aggregate_conditions(forms, bfs, plan.real_domains, true,
                                           zero_dim_variant(forms.front(), false));
    return plan;
  }
  // A-type with d >= 2 (d = 1 zero-dim groups are split over R).
  const int sd = s * ix.d;
  const Domain& ambient = forms.front();
  if (ambient.p() == ambient.q()) {  // p = q = sd at every place
    if (ix.d == 2 && s == 1) {
      // Degree-2 lift: the ambient I(2,2) is an orthogonal group in six
      // variables, and the plan is IV(3) inside IV(4).
      plan.construction = QConstruction::OrthoComplement;
      plan.symbolic =
          "IV(3) inside IV(4): ambient I(2,2) viewed as IV(4) via the "
          "degree-2 lift";
      plan.source_row = "Table 2, row IV (maximal) per place (ambient as IV(4))";
      for (size_t i = 0; i < forms.size(); ++i)
        plan.real_domains.push_back(DomainProduct::single(Domain::TypeIV(3)));
      plan.conditions = aggregate_conditions(forms, bfs, plan.real_domains, true,
                                             zero_dim_variant(ambient, true));
      return plan;
    }
    plan.construction = QConstruction::PolydiscOverK;
    plan.symbolic = "(I(1,1))^" + std::to_string(sd) +
                    ": hyperbolic-plane splitting, one (I(1,1))^" +
                    std::to_string(ix.d) + " per plane";
    plan.source_row = "maximal polydisc";
    for (size_t i = 0; i < forms.size(); ++i)
      plan.real_domains.push_back(
          DomainProduct::power(Domain::TypeI(1, 1), sd));
    plan.conditions = aggregate_conditions(forms, bfs, plan.real_domains, true,
                                           zero_dim_variant(ambient, false));
    return plan;
  }
  // q = sd < p: the anisotropic complement is compact, the centralizer of
  // the hyperbolic part carves out the maximal tube I(sd,sd).
  plan.construction = QConstruction::Table3Row;
  const std::string l = ix.n - 2 * sd >= 1
                            ? KIndex::A2(ix.d, ix.n - 2 * sd, 0).str()
                            : "(anisotropic torus)";
  plan.symbolic = "L = " + l + " (anisotropic, compact over R), Z_G(L) = " +
                  KIndex::A2(ix.d, 2 * sd - 1, s).str();
  plan.z_real_points = "SU(" + std::to_string(sd) + "," + std::to_string(sd) + ")";
  plan.source_row = "Table 3, row 2A (compact complement)";
  for (size_t i = 0; i < forms.size(); ++i)
    plan.real_domains.push_back(DomainProduct::single(Domain::TypeI(sd, sd)));
  plan.conditions = aggregate_conditions(forms, bfs, plan.real_domains, true,
                                         zero_dim_variant(ambient, false));
  return plan;
}

}  // namespace

QIncidencePlan incident_qsubgroup(const QGroup& g, int b) {
  {
    const std::vector<std::string> v = validate_qgroup(g);
    if (!v.empty())
      throw std::invalid_argument("incident_qsubgroup: " + v.front());
  }
  const KIndex& ix = g.index;
  const int s = ix.s;
  if (b < 1 || b > s) throw std::out_of_range("incident_qsubgroup: b out of range");

  std::vector<Domain> forms;
  for (const ArchPlace& pl : g.arch.places)
    forms.push_back(real_form_at_place(ix, pl));
  const RationalBoundary rb = rational_boundary(g, b);
  const std::vector<Factor>& bfs = rb.per_place_factor;

  if (ix.family == KFamily::C2 && ix.n == 2 * s && b == s)
    return c2_exception(g, forms, bfs);

  if (is_split_over_R(g)) return split_over_r_plan(g, b, forms, bfs);

  if (ix.family == KFamily::E7_31) {
    QIncidencePlan plan;
    plan.construction = QConstruction::LeviCentralizerPair;
    plan.symbolic = "N_b = L_b x Z_G(L_b); the compact factor is absent";
    plan.source_row = "Table 1, row VI per place";
    for (const Domain& f : forms) plan.real_domains.push_back(table1_factors(f, b));
    plan.conditions =
        aggregate_conditions(forms, bfs, plan.real_domains, true, CondVariant::plain);
    return plan;
  }
  if (ix.family == KFamily::E6_28) {
    QIncidencePlan plan;
    plan.construction = QConstruction::LeviCentralizerPair;
    plan.symbolic =
        "N = Z_G(L_1) x L_1: a split SL(2) times the hermitian Levi of the "
        "five-dimensional boundary component";
    plan.source_row = "rank-one Levi-centralizer pair";
    for (const Domain& f : forms) {
      DomainProduct t1 = table1_factors(f, 1);
      std::swap(t1.factors[0], t1.factors[1]);  // printed complement-first
      plan.real_domains.push_back(std::move(t1));
    }
    plan.conditions =
        aggregate_conditions(forms, bfs, plan.real_domains, true, CondVariant::plain);
    return plan;
  }

  if (b < s) return levi_pair_plan(g, b, forms, bfs);
  if (!rb.is_zero_dimensional) return table3_plan(g, forms, bfs);
  return zero_dim_plan(g, forms, bfs);
}

}  // namespace hsd
