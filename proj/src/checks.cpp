#include "hsd/checks.hpp"

#include <algorithm>

#include "hsd/grammar.hpp"
#include "hsd/incidence.hpp"
#include "hsd/parabolic.hpp"
#include "hsd/roots.hpp"

namespace hsd {
namespace {

struct Harness {
  CheckReport rep;

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++rep.passed;
    } else {
      ++rep.failed;
      if (rep.failures.size() < 40) rep.failures.push_back(what);
    }
  }
};

int classical_dim(const Domain& d) {
  switch (d.cls()) {
    case DomainClass::I: return 2 * d.p() * d.q();
    case DomainClass::II: return d.n() * (d.n() - 1);
    case DomainClass::III: return d.n() * (d.n() + 1);
    case DomainClass::IV: return 2 * d.n();
    case DomainClass::V: return 32;
    case DomainClass::VI: return 54;
  }
  return -1;
}

void root_system_checks(Harness& h, bool full) {
  std::vector<std::pair<RootFamily, int>> specs = {
      {RootFamily::A, 1}, {RootFamily::A, 3}, {RootFamily::A, 5},
      {RootFamily::B, 2}, {RootFamily::B, 4}, {RootFamily::C, 2},
      {RootFamily::C, 4}, {RootFamily::D, 4}, {RootFamily::D, 5},
      {RootFamily::BC, 1}, {RootFamily::BC, 3}, {RootFamily::E6, 6},
      {RootFamily::E7, 7}};
  if (full) {
    specs.push_back({RootFamily::A, 7});
    specs.push_back({RootFamily::C, 6});
    specs.push_back({RootFamily::D, 7});
    specs.push_back({RootFamily::BC, 5});
  }
  for (const auto& [fam, rank] : specs) {
    const RootSystem rs = RootSystem::build(fam, rank);
    const std::string name = family_name(fam) + std::to_string(rank);
    bool neg = true;
    for (const Root& r : rs.roots()) neg = neg && rs.contains(-r);
    h.check(neg, name + ": negation closure");

    const auto pos = rs.positive_roots();
    h.check(2 * pos.size() == rs.roots().size(),
            name + ": positivity partition size");
    bool part = true;
    for (const Root& r : pos) part = part && !(-r).lex_positive();
    h.check(part, name + ": positive roots lex-positive only");

    const auto simples = rs.simple_roots();
    h.check(static_cast<int>(simples.size()) == rank,
            name + ": simple-root count = rank");

    bool combos = true;
    for (const Root& r : pos) {
      const auto coeff = rs.simple_coefficients(r);
      Root acc(std::vector<int>(r.dim(), 0));
      bool nonneg = true;
      for (size_t i = 0; i < coeff.size(); ++i) {
        nonneg = nonneg && coeff[i] >= 0;
        for (int k = 0; k < coeff[i]; ++k) acc = acc + simples[i];
      }
      combos = combos && nonneg && acc == r;
    }
    h.check(combos, name + ": positives are nonnegative simple combinations");

    bool sym = true, dot0 = true;
    for (size_t i = 0; i < pos.size(); ++i)
      for (size_t j = i + 1; j < pos.size(); ++j) {
        const bool so = rs.strongly_orthogonal(pos[i], pos[j]);
        sym = sym && so == rs.strongly_orthogonal(pos[j], pos[i]);
        if (so) dot0 = dot0 && pos[i].dot(pos[j]) == 0;
      }
    h.check(sym, name + ": strong orthogonality symmetric");
    h.check(dot0, name + ": strong orthogonality implies dot = 0");
  }
}

void domain_checks(Harness& h, const std::vector<Domain>& grid) {
  for (const Domain& d : grid) {
    const std::string name = d.str();
    const RestrictedRootDatum rr = restricted_root_datum(d);
    h.check(d.dim_real() == classical_dim(d), name + ": classical dimension");
    h.check(rr.dim_real() == d.dim_real(), name + ": datum dimension identity");
    h.check(d.tube_type() == (rr.mult_very_short == 0),
            name + ": tube iff no very short roots");
    h.check(d.tube_type() == !rr.bc, name + ": tube iff C-type datum");

    const Domain nd = normalize(d);
    h.check(normalize(nd) == nd, name + ": normalize idempotent");
    h.check(nd.real_rank() == d.real_rank() && nd.dim_real() == d.dim_real(),
            name + ": normalize preserves rank and dimension");

    h.check(parse_domain(d.str()) == d, name + ": string round-trip");

    const NoncompactRealization nr = noncompact_realization(d);
    h.check(2 * static_cast<int>(nr.sigma_plus.size()) == d.dim_real(),
            name + ": |sigma_plus| = dim/2");
    bool abelian = true;
    for (size_t i = 0; i < nr.sigma_plus.size(); ++i)
      for (size_t j = i + 1; j < nr.sigma_plus.size(); ++j)
        abelian =
            abelian && !nr.system.contains(nr.sigma_plus[i] + nr.sigma_plus[j]);
    h.check(abelian, name + ": p+ abelian");

    const auto cascade = strongly_orthogonal_cascade(d);
    h.check(static_cast<int>(cascade.size()) == d.real_rank(),
            name + ": cascade length = rank");
    bool so = true;
    for (size_t i = 0; i < cascade.size(); ++i)
      for (size_t j = i + 1; j < cascade.size(); ++j)
        so = so && nr.system.strongly_orthogonal(cascade[i], cascade[j]);
    h.check(so, name + ": cascade pairwise strongly orthogonal");
  }
}

void parabolic_checks(Harness& h, const std::vector<Domain>& grid) {
  for (const Domain& d : grid) {
    const int t = d.real_rank();
    int prev_dim = d.dim_complex() + 1;
    for (int b = 1; b <= t; ++b) {
      const std::string name = d.str() + " b=" + std::to_string(b);
      const BoundaryComponent f = boundary_component(d, b);
      const LeviDecomposition ld = levi_decomposition(d, b);
      h.check(f.factor.is_point() == (b == t), name + ": point iff b = t");
      h.check(f.factor.rank() == t - b, name + ": boundary rank t - b");
      h.check(f.complex_dim < prev_dim, name + ": boundary dim decreasing");
      prev_dim = f.complex_dim;
      h.check(ld.hermitian_factor == f.factor, name + ": levi factor matches");
      h.check(ld.dim_Vb % 2 == 0, name + ": dim V_b even");
      h.check(d.dim_complex() == f.complex_dim + ld.dim_Vb / 2 + ld.dim_Zb,
              name + ": Siegel dimension identity");
      h.check(ld.cone_rank == b && ld.dim_Zb >= b, name + ": cone rank b in Z_b");
      h.check(ld.reductive_factor_rank == b - 1, name + ": reductive rank b - 1");
      const bool want_m =
          d.cls() == DomainClass::I || d.cls() == DomainClass::IV;
      h.check(ld.has_compact_factor_M == want_m, name + ": compact factor flag");

      if (!f.factor.is_point())
        for (int b2 = b + 1; b2 <= t; ++b2) {
          const Factor direct = boundary_component(d, b2).factor;
          const Factor telescoped =
              boundary_component(f.factor.domain(), b2 - b).factor;
          h.check(direct == telescoped,
                  name + "->" + std::to_string(b2) + ": telescoping");
        }
    }
  }
}

void incidence_checks(Harness& h, const std::vector<Domain>& grid) {
  for (const Domain& d : grid) {
    const int t = d.real_rank();
    for (int b = 1; b <= t; ++b) {
      const std::string name = d.str() + " b=" + std::to_string(b);
      const auto plans = incident_subdomain(d, b);
      h.check(!plans.empty(), name + ": some plan");
      if (b < t)
        h.check(plans.size() == 1 && plans[0].kind == PlanKind::Table1,
                name + ": single Table 1 plan below full rank");
      else
        h.check(is_ED(d) == (plans.size() == 1 &&
                             plans[0].kind == PlanKind::Polydisc),
                name + ": polydisc iff ED list");
      for (const SymmetricSubgroupPlan& plan : plans) {
        const std::string pname = name + " [" + plan.source_row + "]";
        h.check(plan.factors.rank() == t, pname + ": rank preserved");
        const IncidenceConditions c = verify_conditions(d, b, plan);
        h.check(c.c1 && c.c2 && c.c3, pname + ": conditions hold");
        const CondVariant want =
            b < t ? CondVariant::plain
                  : (is_ED(d) ? CondVariant::double_prime : CondVariant::prime);
        h.check(c.variant == want, pname + ": condition variant");
        if (plan.kind == PlanKind::Table1)
          h.check(same_factor(plan.factors.factors.front(),
                              boundary_component(d, b).factor),
                  pname + ": leads with the boundary factor");
        h.check(plan.factors.dim_complex() < d.dim_complex(),
                pname + ": dimension strictly decreases");
        if (plan.h2_flag == H2Flag::yes && d.tube_type()) {
          bool all_tube = true;
          for (const Factor& f : plan.factors.factors)
            all_tube = all_tube && !f.is_point() && f.domain().tube_type();
          h.check(all_tube, pname + ": tube factors under H2 = yes");
        }
        h.check(parse_product(plan.factors.str()) == plan.factors,
                pname + ": product round-trip");
      }
    }
  }
}

bool zero_dim_closed_form(const QGroup& g, int b) {
  const KIndex& ix = g.index;
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit: {
      if (b != ix.s) return false;
      for (const ArchPlace& pl : g.arch.places)
        if (pl.q != ix.s * ix.d) return false;
      return true;
    }
    case KFamily::D2_1:
    case KFamily::D2_2: return false;
    case KFamily::C2: return ix.n == 2 * ix.s && b == ix.s;
    case KFamily::C1:
    case KFamily::IVForm: return b == ix.s;
    case KFamily::E6_28:
    case KFamily::E7_31: return false;
  }
  return false;
}

void rational_checks(Harness& h, const std::vector<KIndex>& grid, int max_f) {
  for (const KIndex& ix : grid) {
    const std::string iname = ix.str();
    h.check(parse_index(ix.str()) == ix, iname + ": index round-trip");

    // Rank-1 quaternionic mixed places: only through II(4) = IV(6).
    if (ix.is_d_type() && ix.s == 1) {
      ArchimedeanData mixed;
      mixed.places = {ArchPlace::def(), ArchPlace::spl()};
      const bool ok = validate_arch(ix, mixed).empty();
      h.check(ok == (ix.n == 4), iname + ": mixed def/split only at n = 4");
      if (ok)
        h.check(same_domain(real_form_at_place(ix, mixed.places[0]),
                            real_form_at_place(ix, mixed.places[1])),
                iname + ": mixed places agree up to normalization");
    }

    for_each_qgroup(ix, max_f, [&](const QGroup& g) {
      const std::string gname = iname + " arch " + g.arch.str();
      h.check(parse_arch(g.arch.str()) == g.arch, gname + ": arch round-trip");

      std::vector<Domain> forms;
      for (const ArchPlace& pl : g.arch.places)
        forms.push_back(real_form_at_place(ix, pl));

      if (is_split_over_R(g)) {
        bool equal = true;
        for (const Domain& f : forms) equal = equal && f == forms.front();
        h.check(equal, gname + ": split over R forces equal places");
      }

      for (int b = 1; b + 1 <= ix.s; ++b)
        h.check(c_map(ix, b) < c_map(ix, b + 1),
                gname + " b=" + std::to_string(b) + ": c strictly monotone");

      for (int b = 1; b <= ix.s; ++b) {
        const std::string name = gname + " b=" + std::to_string(b);
        const RationalBoundary rb = rational_boundary(g, b);
        h.check(rb.is_zero_dimensional == zero_dim_closed_form(g, b),
                name + ": zero-dim closed form");
        h.check(anisotropic_hermitian_levi(g, b) == (b == ix.s),
                name + ": anisotropic Levi at b = s");

        QIncidencePlan plan;
        try {
          plan = incident_qsubgroup(g, b);
        } catch (const std::exception& e) {
          h.check(false, name + ": plan construction threw: " + e.what());
          continue;
        }
        const bool c2_case =
            ix.family == KFamily::C2 && ix.n == 2 * ix.s && b == ix.s;
        h.check((plan.exception != QException::none) == c2_case,
                name + ": exception surface");
        if (c2_case) {
          const QException want =
              ix.s == 1 ? QException::C2_2_1 : QException::C2_2n_n;
          h.check(plan.exception == want, name + ": exception kind");
        }
        const IncidenceConditions& c = plan.conditions;
        if (plan.exception == QException::none)
          h.check(c.c1 && c.c2 && c.c3 && plan.cond4,
                  name + ": all conditions hold");
        else if (plan.exception == QException::C2_2n_n)
          h.check(c.c1 && !c.c2 && c.c3 && plan.cond4,
                  name + ": minimal-over-k-only profile");
        else
          h.check(!c.c1 && !c.c2 && c.c3 && !plan.cond4,
                  name + ": C2(2,1) failure profile");

        h.check(plan.real_domains.size() == g.arch.places.size(),
                name + ": one product per place");
        if (b < ix.s) {
          bool agree = true;
          for (size_t i = 0; i < forms.size(); ++i)
            agree = agree &&
                    plan.real_domains[i] ==
                        incident_subdomain(forms[i], c_map(ix, b))[0].factors;
          h.check(agree, name + ": matches the real-level plan per place");
        }
        for (const DomainProduct& p : plan.real_domains)
          h.check(parse_product(p.str()) == p, name + ": product round-trip");
      }
    });
  }

  {
    QGroup sl2{KIndex::Asplit(1, 1), default_arch(KIndex::Asplit(1, 1))};
    h.check(!validate_qgroup(sl2).empty(), "Asplit(1;1): all-SL2 exclusion");
  }
}

}  // namespace

std::vector<Domain> standard_domain_grid(bool full) {
  const int pmax = full ? 10 : 6;
  const int nmax = full ? 12 : 8;
  std::vector<Domain> grid;
  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q <= p; ++q)
      if (!(p == 1 && q == 1)) grid.push_back(Domain::TypeI(p, q));
  for (int n = 4; n <= nmax; ++n) grid.push_back(Domain::TypeII(n));
  for (int n = 2; n <= nmax; ++n) grid.push_back(Domain::TypeIII(n));
  for (int n = 3; n <= nmax; ++n) grid.push_back(Domain::TypeIV(n));
  grid.push_back(Domain::TypeV());
  grid.push_back(Domain::TypeVI());
  return grid;
}

std::vector<KIndex> standard_index_grid(bool full) {
  std::vector<KIndex> out;
  const auto add = [&out](const KIndex& ix) {
    if (validate_index(ix).empty()) out.push_back(ix);
  };
  const int nmax = full ? 12 : 9;
  const int dmax = full ? 5 : 3;
  const int smax = full ? 5 : 3;
  for (int d = 2; d <= dmax; ++d)
    for (int n = 1; n <= nmax; ++n)
      for (int s = 1; s <= smax; ++s) add(KIndex::A2(d, n, s));
  for (int n = 1; n <= nmax; ++n)
    for (int s = 1; s <= smax; ++s) add(KIndex::A2(1, n, s));
  for (int n = 1; n <= nmax; ++n)
    for (int q = 1; 2 * q <= n + 1; ++q) add(KIndex::Asplit(n, q));
  for (int n = 4; n <= nmax; ++n)
    for (int s = 1; s <= smax; ++s) {
      add(KIndex::D2(1, n, s));
      add(KIndex::D2(2, n, s));
    }
  for (int n = 2; n <= nmax; ++n)
    for (int s = 1; 2 * s <= n; ++s) add(KIndex::C2(n, s));
  for (int n = 2; n <= (full ? 8 : 6); ++n) add(KIndex::C1(n));
  for (int n = 3; n <= nmax; ++n) {
    add(KIndex::IVForm(n, 1));
    add(KIndex::IVForm(n, 2));
  }
  add(KIndex::E6());
  add(KIndex::E7());
  return out;
}

void for_each_qgroup(const KIndex& ix, int max_f,
                     const std::function<void(const QGroup&)>& fn) {
  const auto emit = [&](const ArchimedeanData& a) {
    QGroup g{ix, a};
    if (validate_qgroup(g).empty()) fn(g);
  };
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit: {
      std::vector<int> qs;
      for (int q = ix.s * ix.d; 2 * q <= ix.n + 1; ++q) qs.push_back(q);
      // Non-decreasing q-profiles of length 1..max_f.
      std::vector<int> profile;
      const std::function<void(size_t)> rec = [&](size_t start) {
        if (!profile.empty()) {
          ArchimedeanData a;
          for (int q : profile) a.places.push_back(ArchPlace::sig(ix.n + 1 - q, q));
          emit(a);
        }
        if (static_cast<int>(profile.size()) == max_f) return;
        for (size_t i = start; i < qs.size(); ++i) {
          profile.push_back(qs[i]);
          rec(i);
          profile.pop_back();
        }
      };
      rec(0);
      break;
    }
    case KFamily::D2_1:
    case KFamily::D2_2:
      for (int f = 1; f <= max_f; ++f)
        for (int splits = 0; splits <= f; ++splits) {
          ArchimedeanData a;
          for (int i = 0; i < f - splits; ++i) a.places.push_back(ArchPlace::def());
          for (int i = 0; i < splits; ++i) a.places.push_back(ArchPlace::spl());
          emit(a);
        }
      break;
    default:
      for (int f = 1; f <= max_f; ++f) {
        ArchimedeanData a;
        for (int i = 0; i < f; ++i) a.places.push_back(default_arch(ix).places[0]);
        emit(a);
      }
      break;
  }
}

CheckReport run_invariant_suite(bool full_grid) {
  Harness h;
  const auto domains = standard_domain_grid(full_grid);
  const auto indices = standard_index_grid(full_grid);
  root_system_checks(h, full_grid);
  domain_checks(h, domains);
  parabolic_checks(h, domains);
  incidence_checks(h, domains);
  rational_checks(h, indices, full_grid ? 3 : 2);
  return h.rep;
}

}  // namespace hsd
