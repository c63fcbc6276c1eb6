#include "hsd/incidence.hpp"

#include <stdexcept>

namespace hsd {

bool is_ED(const Domain& d) {
  switch (d.cls()) {
    case DomainClass::I:
      return d.p() == d.q();
    case DomainClass::II:
      return d.n() % 2 == 0;
    case DomainClass::III:
      return true;
    default:
      return false;
  }
}

std::string plan_kind_name(PlanKind k) {
  switch (k) {
    case PlanKind::Table1: return "table1";
    case PlanKind::Table2_maximal: return "table2_maximal";
    case PlanKind::Table2_tube: return "table2_tube";
    case PlanKind::Polydisc: return "polydisc";
    case PlanKind::Exception: return "exception";
  }
  return "?";
}

std::string h2_flag_name(H2Flag f) {
  switch (f) {
    case H2Flag::yes: return "yes";
    case H2Flag::no: return "no";
    case H2Flag::conditional_p_eq_q: return "conditional_p_eq_q";
  }
  return "?";
}

std::string cond_label(int which, CondVariant v) {
  std::string s = std::to_string(which);
  if (v == CondVariant::prime) s += "'";
  if (v == CondVariant::double_prime) s += "''";
  return s;
}

namespace {

SymmetricSubgroupPlan make_plan(std::vector<Factor> fs, PlanKind k, H2Flag h2,
                                std::string row) {
  SymmetricSubgroupPlan p;
  p.factors = DomainProduct::of(std::move(fs));
  p.kind = k;
  p.h2_flag = h2;
  p.source_row = std::move(row);
  return p;
}

/// IV(m) as a factor list; the bidisc IV(2) is emitted split.
std::vector<Factor> iv_factors(int m) {
  if (m == 2)
    return {Factor::dom(Domain::TypeI(1, 1)), Factor::dom(Domain::TypeI(1, 1))};
  return {Factor::dom(Domain::TypeIV(m))};
}

SymmetricSubgroupPlan table1_plan(const Domain& d, int b) {
  const Factor fb = boundary_component(d, b).factor;
  switch (d.cls()) {
    case DomainClass::I:
      return make_plan({fb, Factor::dom(Domain::TypeI(b, b))}, PlanKind::Table1,
                       H2Flag::conditional_p_eq_q, "Table 1, row I");
    case DomainClass::II:
      return make_plan({fb, Factor::dom(Domain::TypeII(2 * b))}, PlanKind::Table1,
                       H2Flag::yes, "Table 1, row II");
    case DomainClass::III:
      return make_plan({fb, Factor::dom(Domain::TypeIII(b))}, PlanKind::Table1,
                       H2Flag::yes, "Table 1, row III");
    case DomainClass::IV:
      return make_plan({fb, Factor::dom(Domain::TypeIV(1))}, PlanKind::Table1,
                       H2Flag::yes, "Table 1, row IV");
    case DomainClass::V:
      return make_plan({fb, Factor::dom(Domain::TypeI(1, 1))}, PlanKind::Table1,
                       H2Flag::yes, "Table 1, row V");
    case DomainClass::VI:
      if (b == 1)
        return make_plan({fb, Factor::dom(Domain::TypeIV(1))}, PlanKind::Table1,
                         H2Flag::yes, "Table 1, row VI");
      return make_plan({fb, Factor::dom(Domain::TypeIV(10))}, PlanKind::Table1,
                       H2Flag::yes, "Table 1, row VI");
  }
  throw std::logic_error("unknown domain class");
}

void append_table2(const Domain& d, std::vector<SymmetricSubgroupPlan>& out) {
  switch (d.cls()) {
    case DomainClass::I: {
      // p > q here (p = q is on the is_ED list).
      out.push_back(make_plan({Factor::dom(Domain::TypeI(d.p() - 1, d.q()))},
                              PlanKind::Table2_maximal, H2Flag::no,
                              "Table 2, row I (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeI(d.q(), d.q()))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row I (tube)"));
      return;
    }
    case DomainClass::II: {
      // n odd here.
      out.push_back(make_plan({Factor::dom(Domain::TypeII(d.n() - 1))},
                              PlanKind::Table2_maximal, H2Flag::yes,
                              "Table 2, row II (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeII(d.n() - 1))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row II (tube)"));
      return;
    }
    case DomainClass::IV: {
      out.push_back(make_plan(iv_factors(d.n() - 1), PlanKind::Table2_maximal,
                              H2Flag::yes, "Table 2, row IV (maximal)"));
      out.push_back(make_plan(iv_factors(d.n() - 1), PlanKind::Table2_tube,
                              H2Flag::yes, "Table 2, row IV (tube)"));
      return;
    }
    case DomainClass::V: {
      out.push_back(make_plan({Factor::dom(Domain::TypeI(4, 2))},
                              PlanKind::Table2_maximal, H2Flag::yes,
                              "Table 2, row V (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeII(5))},
                              PlanKind::Table2_maximal, H2Flag::no,
                              "Table 2, row V (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeIV(8))},
                              PlanKind::Table2_maximal, H2Flag::no,
                              "Table 2, row V (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeI(2, 2))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row V (tube)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeII(4))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row V (tube)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeIV(8))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row V (tube)"));
      return;
    }
    case DomainClass::VI: {
      out.push_back(make_plan({Factor::dom(Domain::TypeI(3, 3))},
                              PlanKind::Table2_maximal, H2Flag::yes,
                              "Table 2, row VI (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeII(6))},
                              PlanKind::Table2_maximal, H2Flag::yes,
                              "Table 2, row VI (maximal)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeI(3, 3))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row VI (tube)"));
      out.push_back(make_plan({Factor::dom(Domain::TypeII(6))},
                              PlanKind::Table2_tube, H2Flag::yes,
                              "Table 2, row VI (tube)"));
      return;
    }
    default:
      throw std::logic_error("is_ED class reached the Table 2 branch");
  }
}

}  // namespace

std::vector<SymmetricSubgroupPlan> incident_subdomain(const Domain& d, int b) {
  if (!d.irreducible())
    throw std::invalid_argument("incident_subdomain: reducible domain");
  const int t = d.real_rank();
  if (b < 1 || b > t) throw std::out_of_range("incident_subdomain: b out of range");

  std::vector<SymmetricSubgroupPlan> out;
  if (b < t) {
    out.push_back(table1_plan(d, b));
    return out;
  }
  if (is_ED(d)) {
    std::vector<Factor> fs(static_cast<size_t>(t), Factor::dom(Domain::TypeI(1, 1)));
    out.push_back(make_plan(std::move(fs), PlanKind::Polydisc, H2Flag::yes,
                            "maximal polydisc"));
    return out;
  }
  append_table2(d, out);
  return out;
}

IncidenceConditions verify_conditions(const Domain& d, int b,
                                      const SymmetricSubgroupPlan& plan) {
  if (plan.factors.factors.empty())
    throw std::invalid_argument("verify_conditions: plan has no factors");
  const int t = d.real_rank();
  if (b < 1 || b > t) throw std::out_of_range("verify_conditions: b out of range");

  IncidenceConditions c;
  c.variant = b < t ? CondVariant::plain
                    : (is_ED(d) ? CondVariant::double_prime : CondVariant::prime);
  c.c1 = plan.factors.rank() == t;
  c.c2 = plan.kind != PlanKind::Exception;

  const Factor& lead = plan.factors.factors.front();
  if (plan.kind == PlanKind::Table1) {
    c.c3 = same_factor(lead, boundary_component(d, b).factor);
  } else {
    // The distinguished factor must contain the zero-dimensional boundary
    // component as its own full-rank boundary point.
    c.c3 = !lead.is_point() && lead.domain().irreducible() &&
           boundary_component(lead.domain(), lead.rank()).factor.is_point();
  }
  return c;
}

}  // namespace hsd
