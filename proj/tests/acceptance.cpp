// Acceptance harness: one line per criterion, exit 0 iff every criterion
// passes (including its time budget where one is pinned).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hsd/checks.hpp"
#include "hsd/domains.hpp"
#include "hsd/grammar.hpp"
#include "hsd/incidence.hpp"
#include "hsd/parabolic.hpp"
#include "hsd/rational.hpp"
#include "hsd/roots.hpp"
#include "json.hpp"
#include "table_eval.h"

using namespace hsd;
using nlohmann::json;
using table_eval::instantiate;

namespace {

using Fails = std::vector<std::string>;

void expect(Fails& fails, bool ok, const std::string& msg) {
  if (!ok) fails.push_back(msg);
}

json load_table(const std::string& name) {
  std::ifstream f(std::string(HSD_DATA_DIR) + "/" + name);
  if (!f) throw std::runtime_error("missing data file " + name);
  json j;
  f >> j;
  return j;
}

std::map<char, long> vars_for(const Domain& d, int b) {
  std::map<char, long> v;
  v['b'] = b;
  v['t'] = d.real_rank();
  if (d.cls() == DomainClass::I) {
    v['p'] = d.p();
    v['q'] = d.q();
  } else {
    v['n'] = d.n();
  }
  return v;
}

bool applies_ok(const json& row, const Domain& d, int b) {
  if (row.contains("domain")) {
    const std::string dom = row["domain"];
    if (dom == "I(q,q)" && !(d.cls() == DomainClass::I && d.p() == d.q()))
      return false;
    if (dom == "I(p,q)" && d.cls() != DomainClass::I) return false;
    if (dom == "II(n)" && d.cls() != DomainClass::II) return false;
    if (dom == "III(n)" && d.cls() != DomainClass::III) return false;
    if (dom == "IV(n)" && d.cls() != DomainClass::IV) return false;
    if (dom == "V" && d.cls() != DomainClass::V) return false;
    if (dom == "VI" && d.cls() != DomainClass::VI) return false;
  }
  if (!row.contains("applies")) return true;
  const std::string ap = row["applies"];
  if (ap == "b=1") return b == 1;
  if (ap == "b=2") return b == 2;
  if (ap == "p>q") return d.p() > d.q();
  if (ap == "n even") return d.n() % 2 == 0;
  if (ap == "n odd") return d.n() % 2 == 1;
  throw std::runtime_error("unknown applies clause: " + ap);
}

const json* find_row(const json& table, const Domain& d, int b) {
  for (const json& r : table["rows"])
    if (applies_ok(r, d, b)) return &r;
  return nullptr;
}

DomainProduct instantiate_factors(const json& factors,
                                  const std::map<char, long>& vars) {
  DomainProduct p;
  for (const auto& cell : factors)
    p.factors.push_back(
        Factor::dom(parse_domain(instantiate(cell.get<std::string>(), vars))));
  return p;
}

// ---- criterion bodies -----------------------------------------------------

void ac_tables(Fails& fails) {
  const json t1 = load_table("table1.json");
  const json t2 = load_table("table2.json");
  for (const Domain& d : standard_domain_grid(true)) {
    const int t = d.real_rank();
    for (int b = 1; b <= t; ++b) {
      const std::string at = d.str() + ", b=" + std::to_string(b);
      const auto vars = vars_for(d, b);
      const auto plans = incident_subdomain(d, b);
      if (b < t) {
        const json* row = find_row(t1, d, b);
        if (!row) {
          fails.push_back(at + ": no table 1 row");
          continue;
        }
        expect(fails, plans.size() == 1, at + ": expected a single plan");
        if (plans.size() != 1) continue;
        const Factor fb = boundary_component(d, b).factor;
        expect(fails,
               fb == Factor::dom(parse_domain(instantiate(
                         (*row)["boundary"].get<std::string>(), vars))),
               at + ": boundary cell mismatch");
        expect(fails,
               plans[0].factors == instantiate_factors((*row)["subdomain"], vars),
               at + ": subdomain cell mismatch");
        expect(fails,
               h2_flag_name(plans[0].h2_flag) == (*row)["h2"].get<std::string>(),
               at + ": h2 cell mismatch");
        continue;
      }
      const json* row = find_row(t2, d, b);
      if (!row) {
        fails.push_back(at + ": no table 2 row");
        continue;
      }
      if ((*row)["maximal"].is_null()) continue;  // polydisc rows: criterion 2
      std::vector<const json*> expected;
      for (const json& e : (*row)["maximal"]) expected.push_back(&e);
      for (const json& e : (*row)["tube"]) expected.push_back(&e);
      expect(fails, plans.size() == expected.size(),
             at + ": plan count mismatch");
      if (plans.size() != expected.size()) continue;
      const size_t n_max = (*row)["maximal"].size();
      for (size_t i = 0; i < plans.size(); ++i) {
        const std::string cell = at + ", plan " + std::to_string(i);
        expect(fails,
               plans[i].kind == (i < n_max ? PlanKind::Table2_maximal
                                           : PlanKind::Table2_tube),
               cell + ": kind mismatch");
        DomainProduct want;
        if (row->contains("special") && d.cls() == DomainClass::IV &&
            d.n() == 3)
          want = instantiate_factors((*row)["special"]["n=3"]["factors"], vars);
        else
          want = instantiate_factors((*expected[i])["factors"], vars);
        expect(fails, plans[i].factors == want, cell + ": factors mismatch");
        expect(fails,
               h2_flag_name(plans[i].h2_flag) ==
                   (*expected[i])["h2"].get<std::string>(),
               cell + ": h2 flag mismatch");
      }
    }
  }
}

void ac_polydisc(Fails& fails) {
  for (const Domain& d : standard_domain_grid(true)) {
    const int t = d.real_rank();
    const auto plans = incident_subdomain(d, t);
    const bool got_polydisc =
        plans.size() == 1 && plans[0].kind == PlanKind::Polydisc;
    expect(fails, got_polydisc == is_ED(d),
           d.str() + ": polydisc answer iff I(q,q), II(even), III");
    if (got_polydisc) {
      expect(fails,
             plans[0].factors ==
                 DomainProduct::power(Domain::TypeI(1, 1), t),
             d.str() + ": polydisc must be (I(1,1))^t");
    }
  }
}

void ac_dimensions(Fails& fails) {
  for (const Domain& d : standard_domain_grid(true)) {
    long closed = 0;
    switch (d.cls()) {
      case DomainClass::I: closed = 2L * d.p() * d.q(); break;
      case DomainClass::II: closed = 1L * d.n() * (d.n() - 1); break;
      case DomainClass::III: closed = 1L * d.n() * (d.n() + 1); break;
      case DomainClass::IV: closed = 2L * d.n(); break;
      case DomainClass::V: closed = 32; break;
      case DomainClass::VI: closed = 54; break;
    }
    expect(fails, d.dim_real() == closed, d.str() + ": dim_real closed form");
    for (int b = 1; b <= d.real_rank(); ++b) {
      const BoundaryComponent fb = boundary_component(d, b);
      const LeviDecomposition levi = levi_decomposition(d, b);
      expect(fails,
             d.dim_complex() ==
                 fb.complex_dim + levi.dim_Vb / 2 + levi.dim_Zb,
             d.str() + ", b=" + std::to_string(b) + ": Siegel identity");
    }
  }
}

void ac_cascade(Fails& fails) {
  for (const Domain& d : standard_domain_grid(true)) {
    const auto casc = strongly_orthogonal_cascade(d);
    expect(fails, static_cast<int>(casc.size()) == d.real_rank(),
           d.str() + ": cascade length != real rank");
    const NoncompactRealization nr = noncompact_realization(d);
    for (size_t i = 0; i < casc.size(); ++i)
      for (size_t j = i + 1; j < casc.size(); ++j)
        expect(fails, nr.system.strongly_orthogonal(casc[i], casc[j]),
               d.str() + ": cascade pair not strongly orthogonal");
  }
  const Domain v = Domain::TypeV(), vi = Domain::TypeVI();
  expect(fails, strongly_orthogonal_cascade(v).size() == 2, "V: length 2");
  expect(fails, strongly_orthogonal_cascade(vi).size() == 3, "VI: length 3");
}

void ac_rank_preservation(Fails& fails) {
  for (const Domain& d : standard_domain_grid(true)) {
    for (int b = 1; b <= d.real_rank(); ++b)
      for (const auto& plan : incident_subdomain(d, b)) {
        expect(fails, plan.factors.rank() == d.real_rank(),
               d.str() + ", b=" + std::to_string(b) + ": plan rank");
        expect(fails, verify_conditions(d, b, plan).c1,
               d.str() + ", b=" + std::to_string(b) + ": condition 1");
      }
  }
  for (const KIndex& ix : standard_index_grid(true)) {
    const int krank = k_root_system(ix).rank;
    for_each_qgroup(ix, 2, [&](const QGroup& g) {
      for (int b = 1; b <= krank; ++b) {
        const QIncidencePlan plan = incident_qsubgroup(g, b);
        if (plan.exception == QException::C2_2_1) continue;
        expect(fails, plan.conditions.c1,
               ix.str() + " [" + g.arch.str() + "], b=" + std::to_string(b) +
                   ": condition 1 over k");
      }
    });
  }
}

void ac_zero_dimensional(Fails& fails) {
  for (const KIndex& ix : standard_index_grid(true)) {
    const int krank = k_root_system(ix).rank;
    for_each_qgroup(ix, 3, [&](const QGroup& g) {
      for (int b = 1; b <= krank; ++b) {
        const RationalBoundary rb = rational_boundary(g, b);
        bool closed = false;
        switch (ix.family) {
          case KFamily::A2:
          case KFamily::Asplit: {
            closed = b == ix.s;
            for (const ArchPlace& pl : g.arch.places)
              closed = closed && pl.q == ix.s * std::max(ix.d, 1);
            break;
          }
          case KFamily::D2_1:
          case KFamily::D2_2:
            closed = false;
            break;
          case KFamily::C2:
            closed = ix.n == 2 * ix.s && b == ix.s;
            break;
          case KFamily::C1:
          case KFamily::IVForm:
            closed = b == ix.s;
            break;
          case KFamily::E6_28:
          case KFamily::E7_31:
            closed = false;
            break;
        }
        expect(fails, rb.is_zero_dimensional == closed,
               ix.str() + " [" + g.arch.str() + "], b=" + std::to_string(b) +
                   ": zero-dimensional flag");
      }
    });
  }
}

void ac_exceptions(Fails& fails) {
  for (const KIndex& ix : standard_index_grid(true)) {
    const int krank = k_root_system(ix).rank;
    const QGroup g{ix, default_arch(ix)};
    if (!validate_qgroup(g).empty()) continue;  // e.g. all-SL(2,R) groups
    for (int b = 1; b <= krank; ++b) {
      const QIncidencePlan plan = incident_qsubgroup(g, b);
      const bool on_surface =
          ix.family == KFamily::C2 && ix.n == 2 * ix.s && b == ix.s;
      const bool tagged = plan.exception != QException::none;
      expect(fails, tagged == on_surface,
             ix.str() + ", b=" + std::to_string(b) + ": exception tag");
      const bool is_c221 = ix.family == KFamily::C2 && ix.n == 2 && ix.s == 1;
      expect(fails, !plan.cond4 == (is_c221 && on_surface),
             ix.str() + ", b=" + std::to_string(b) + ": condition 4");
      if (tagged)
        expect(fails,
               plan.exception == (is_c221 ? QException::C2_2_1
                                          : QException::C2_2n_n),
               ix.str() + ", b=" + std::to_string(b) + ": exception kind");
    }
  }
}

void ac_spot_values(Fails& fails) {
  {
    const QGroup g{KIndex::E7(), default_arch(KIndex::E7())};
    const QIncidencePlan p1 = incident_qsubgroup(g, 1);
    expect(fails, p1.real_domains.size() == 1 &&
                      p1.real_domains[0].str() == "IV(10) x IV(1)",
           "E7-31, b=1: IV(10) x IV(1)");
    expect(fails, rational_boundary(g, 1).per_place_factor[0].dim_complex() == 10,
           "E7-31, b=1: boundary complex dimension 10");
    const QIncidencePlan p2 = incident_qsubgroup(g, 2);
    expect(fails, p2.real_domains.size() == 1 &&
                      p2.real_domains[0].str() == "IV(1) x IV(10)",
           "E7-31, b=2: IV(1) x IV(10)");
    expect(fails, rational_boundary(g, 2).per_place_factor[0].dim_complex() == 1,
           "E7-31, b=2: boundary complex dimension 1");
  }
  {
    const QGroup g{KIndex::E6(), default_arch(KIndex::E6())};
    const QIncidencePlan p1 = incident_qsubgroup(g, 1);
    expect(fails, p1.real_domains.size() == 1 &&
                      p1.real_domains[0].str() == "I(1,1) x I(5,1)",
           "E6-28, b=1: I(1,1) x I(5,1)");
    expect(fails, rational_boundary(g, 1).per_place_factor[0].dim_complex() == 5,
           "E6-28, b=1: boundary complex dimension 5");
  }
  {
    const json t3 = load_table("table3.json");
    bool found = false;
    for (const json& r : t3["rows"])
      if (r["index"].get<std::string>().rfind("2A", 0) == 0) {
        found = true;
        expect(fails, r["tabulated"]["Z_real"] == "SU(ds,ds)",
               "table 3, row 2A: tabulated centralizer descriptor");
      }
    expect(fails, found, "table 3: row 2A present");
    // A place with q > sd keeps the b = s boundary positive-dimensional, so
    // the row applies; ds = 4 here.
    QGroup g{KIndex::A2(2, 9, 2), {}};
    g.arch.places = {ArchPlace::sig(5, 5)};
    const QIncidencePlan plan = incident_qsubgroup(g, 2);
    expect(fails, plan.construction == QConstruction::Table3Row,
           "2A(2;9,2) at (5,5), b=2: table 3 construction");
    expect(fails, plan.z_real_points == "SU(4,4)",
           "2A(2;9,2) at (5,5), b=2: Z_G(L)(R) = SU(4,4)");
  }
}

void ac_round_trip(Fails& fails) {
  std::mt19937 rng(20250823u);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  auto random_domain = [&]() -> Domain {
    switch (pick(0, 5)) {
      case 0: {
        const int p = pick(1, 20);
        return Domain::TypeI(p, pick(1, p));
      }
      case 1: return Domain::TypeII(pick(2, 20));
      case 2: return Domain::TypeIII(pick(1, 20));
      case 3: return Domain::TypeIV(pick(1, 20));
      case 4: return Domain::TypeV();
      default: return Domain::TypeVI();
    }
  };
  auto random_index = [&]() -> KIndex {
    for (;;) {
      KIndex ix;
      switch (pick(0, 7)) {
        case 0: ix = KIndex::A2(pick(1, 5), pick(1, 14), pick(1, 5)); break;
        case 1: ix = KIndex::Asplit(pick(1, 14), pick(1, 6)); break;
        case 2: ix = KIndex::D2(pick(1, 2), pick(4, 14), pick(1, 5)); break;
        case 3: ix = KIndex::C2(pick(2, 14), pick(1, 6)); break;
        case 4: ix = KIndex::C1(pick(2, 14)); break;
        case 5: ix = KIndex::IVForm(pick(3, 14), pick(1, 2)); break;
        case 6: ix = KIndex::E6(); break;
        default: ix = KIndex::E7(); break;
      }
      if (validate_index(ix).empty()) return ix;
    }
  };

  int checked = 0;
  for (int i = 0; i < 400; ++i, ++checked) {
    const std::string s = random_domain().str();
    if (parse_domain(s).str() != s)
      fails.push_back("domain round-trip: " + s);
  }
  for (int i = 0; i < 300; ++i, ++checked) {
    DomainProduct p;
    const int k = pick(1, 4);
    for (int j = 0; j < k; ++j) p.factors.push_back(Factor::dom(random_domain()));
    const std::string s = p.str();
    if (parse_product(s).str() != s)
      fails.push_back("product round-trip: " + s);
  }
  for (int i = 0; i < 300; ++i, ++checked) {
    const std::string s = random_index().str();
    if (parse_index(s).str() != s)
      fails.push_back("index round-trip: " + s);
  }
  expect(fails, checked == 1000, "exactly 1000 strings checked");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no pinned budget
  void (*run)(Fails&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "table reproduction on the standard grid", 5.0, ac_tables},
      {2, "polydisc law at full rank", 1.0, ac_polydisc},
      {3, "dimension identities", 5.0, ac_dimensions},
      {4, "strongly orthogonal cascade", 10.0, ac_cascade},
      {5, "rank preservation (condition 1)", 0.0, ac_rank_preservation},
      {6, "zero-dimensional boundary predicates", 5.0, ac_zero_dimensional},
      {7, "exception surface", 0.0, ac_exceptions},
      {8, "catalog spot values", 0.0, ac_spot_values},
      {9, "parse/print round-trip", 0.0, ac_round_trip},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    Fails fails;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(fails);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_budget = c.budget_s == 0.0 || secs < c.budget_s;
    const bool ok = fails.empty() && in_budget;
    all_ok = all_ok && ok;
    if (ok && c.budget_s > 0.0)
      std::printf("acceptance %d: %s ... pass (%.2fs < %.0fs)\n", c.id, c.name,
                  secs, c.budget_s);
    else if (ok)
      std::printf("acceptance %d: %s ... pass (%.2fs)\n", c.id, c.name, secs);
    else {
      std::printf("acceptance %d: %s ... FAIL (%zu failure(s), %.2fs%s)\n",
                  c.id, c.name, fails.size(), secs,
                  in_budget ? "" : ", over budget");
      for (size_t i = 0; i < fails.size() && i < 5; ++i)
        std::printf("    %s\n", fails[i].c_str());
    }
  }
  return all_ok ? 0 : 1;
}
