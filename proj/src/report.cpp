#include "hsd/report.hpp"

#include "json.hpp"

namespace hsd {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json base(const std::string& query) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["query"] = query;
  return j;
}

std::string holds(bool ok) { return ok ? "holds" : "fails"; }

std::string variant_token(CondVariant v) {
  switch (v) {
    case CondVariant::plain: return "plain";
    case CondVariant::prime: return "prime";
    case CondVariant::double_prime: return "double_prime";
  }
  return "?";
}

std::string conditions_line(const IncidenceConditions& c) {
  return "conditions: 1 " + holds(c.c1) + ", " + cond_label(2, c.variant) + " " +
         holds(c.c2) + ", " + cond_label(3, c.variant) + " " + holds(c.c3);
}

json conditions_json(const IncidenceConditions& c) {
  json j;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["c3"] = c.c3;
  j["variant"] = variant_token(c.variant);
  j["labels"] = {"1", cond_label(2, c.variant), cond_label(3, c.variant)};
  return j;
}

std::string h2_text(H2Flag f) {
  switch (f) {
    case H2Flag::yes: return "yes";
    case H2Flag::no: return "no";
    case H2Flag::conditional_p_eq_q: return "if p = q";
  }
  return "?";
}

json restricted_json(const RestrictedRootDatum& rr) {
  json j;
  j["system"] = (rr.bc ? "BC" : "C") + std::to_string(rr.t);
  j["bc"] = rr.bc;
  j["rank"] = rr.t;
  j["mult_short_pair"] = rr.mult_short_pair;
  j["mult_long"] = rr.mult_long;
  j["mult_very_short"] = rr.mult_very_short;
  return j;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

/// Shared header describing a rational group, as text lines + json fields.
void rational_header(const QGroup& g, std::vector<std::string>& text, json& j) {
  const KRootSystem ks = k_root_system(g.index);
  text.push_back("index: " + g.index.str());
  text.push_back("arch: " + g.arch.str() + " (f = " +
                 std::to_string(g.arch.degree_f()) + ")");
  std::string forms;
  json jforms = json::array();
  for (const ArchPlace& pl : g.arch.places) {
    const Domain d = real_form_at_place(g.index, pl);
    if (!forms.empty()) forms += ", ";
    forms += d.str();
    jforms.push_back(d.str());
  }
  text.push_back("real form per place: " + forms);
  const std::string ksname = (ks.bc ? "BC" : "C") + std::to_string(ks.rank);
  text.push_back("k-root system: " + ksname + " (k-rank " +
                 std::to_string(ks.rank) + ")");
  text.push_back(std::string("split over R: ") +
                 (is_split_over_R(g) ? "yes" : "no"));
  j["index"] = g.index.str();
  j["family"] = k_family_name(g.index.family);
  j["arch"] = g.arch.str();
  j["degree_f"] = g.arch.degree_f();
  j["real_forms"] = jforms;
  j["k_root_system"] = {{"system", ksname}, {"bc", ks.bc}, {"rank", ks.rank}};
  j["k_rank"] = g.index.s;
  j["split_over_R"] = is_split_over_R(g);
}

std::string boundary_line(const QGroup& g, int b, json& jout) {
  const RationalBoundary rb = rational_boundary(g, b);
  std::string per_place;
  json jper = json::array();
  for (const Factor& f : rb.per_place_factor) {
    if (!per_place.empty()) per_place += ", ";
    per_place += f.str();
    jper.push_back(f.str());
  }
  std::string line = "b = " + std::to_string(b) + ": c = " +
                     std::to_string(rb.per_place_c.front()) +
                     ", per place: " + per_place;
  if (rb.is_zero_dimensional) line += " (zero-dimensional)";
  jout["b"] = b;
  jout["c"] = rb.per_place_c.front();
  jout["per_place_factor"] = jper;
  jout["zero_dimensional"] = rb.is_zero_dimensional;
  jout["anisotropic_hermitian_levi"] = anisotropic_hermitian_levi(g, b);
  return line;
}

RenderedReport finish(std::vector<std::string> text, json j) {
  return RenderedReport{join_lines(text), j.dump(2)};
}

}  // namespace

RenderedReport report_domain_info(const Domain& d) {
  const RestrictedRootDatum rr = restricted_root_datum(d);
  const NoncompactRealization nr = noncompact_realization(d);
  const auto cascade = strongly_orthogonal_cascade(d);
  const char* source = "domain catalog";

  std::vector<std::string> text;
  text.push_back("domain: " + d.str());
  std::string params = "class " + class_name(d.cls());
  if (d.cls() == DomainClass::I)
    params += ", p = " + std::to_string(d.p()) + ", q = " + std::to_string(d.q());
  else if (d.cls() == DomainClass::II || d.cls() == DomainClass::III ||
           d.cls() == DomainClass::IV)
    params += ", n = " + std::to_string(d.n());
  text.push_back(params);
  text.push_back("rank: " + std::to_string(d.real_rank()) +
                 ", dim_R: " + std::to_string(d.dim_real()) +
                 ", dim_C: " + std::to_string(d.dim_complex()));
  text.push_back(std::string("tube type: ") + (d.tube_type() ? "yes" : "no") +
                 "; zero-dimensional-boundary special list: " +
                 (is_ED(d) ? "yes" : "no"));
  text.push_back("restricted root system: " + std::string(rr.bc ? "BC" : "C") +
                 std::to_string(rr.t) + "; multiplicities: short pair " +
                 std::to_string(rr.mult_short_pair) + ", long " +
                 std::to_string(rr.mult_long) + ", very short " +
                 std::to_string(rr.mult_very_short));
  text.push_back("noncompact positive roots: " +
                 std::to_string(nr.sigma_plus.size()) +
                 "; strongly orthogonal cascade length: " +
                 std::to_string(cascade.size()));
  text.push_back(std::string("  [") + source + "]");

  json j = base("domain_info");
  j["domain"] = d.str();
  j["class"] = class_name(d.cls());
  if (d.cls() == DomainClass::I) {
    j["p"] = d.p();
    j["q"] = d.q();
  } else if (d.cls() == DomainClass::II || d.cls() == DomainClass::III ||
             d.cls() == DomainClass::IV) {
    j["n"] = d.n();
  }
  j["rank"] = d.real_rank();
  j["dim_real"] = d.dim_real();
  j["dim_complex"] = d.dim_complex();
  j["tube_type"] = d.tube_type();
  j["is_ED"] = is_ED(d);
  j["irreducible"] = d.irreducible();
  j["restricted_root_system"] = restricted_json(rr);
  j["noncompact_positive_roots"] = nr.sigma_plus.size();
  j["cascade_length"] = cascade.size();
  j["source_row"] = source;
  return finish(std::move(text), std::move(j));
}

RenderedReport report_boundary(const Domain& d, int b) {
  const BoundaryComponent bc = boundary_component(d, b);
  const LeviDecomposition ld = levi_decomposition(d, b);
  const std::string source = "boundary catalog, class " + class_name(d.cls());

  std::vector<std::string> text;
  text.push_back("domain: " + d.str());
  text.push_back("b = " + std::to_string(b) + ": F_b = " + bc.factor.str() +
                 " (complex dimension " + std::to_string(bc.complex_dim) +
                 ")  [" + source + "]");
  std::string levi = "levi: hermitian factor " + ld.hermitian_factor.str() +
                     ", reductive factor rank " +
                     std::to_string(ld.reductive_factor_rank);
  if (ld.has_compact_factor_M)
    levi += ", compact factor " +
            (ld.m_descriptor.empty() ? std::string("present") : ld.m_descriptor);
  else
    levi += ", no compact factor";
  text.push_back(levi);
  text.push_back("unipotent radical: dim Z_b = " + std::to_string(ld.dim_Zb) +
                 ", dim V_b = " + std::to_string(ld.dim_Vb) + ", dim U_b = " +
                 std::to_string(ld.dim_Ub()) + ", cone rank " +
                 std::to_string(ld.cone_rank));

  json j = base("boundary");
  j["domain"] = d.str();
  j["b"] = b;
  j["factor"] = bc.factor.str();
  j["complex_dim"] = bc.complex_dim;
  j["levi"] = {{"hermitian_factor", ld.hermitian_factor.str()},
               {"reductive_factor_rank", ld.reductive_factor_rank},
               {"has_compact_factor_M", ld.has_compact_factor_M},
               {"m_descriptor", ld.m_descriptor},
               {"dim_Zb", ld.dim_Zb},
               {"dim_Vb", ld.dim_Vb},
               {"dim_Ub", ld.dim_Ub()},
               {"cone_rank", ld.cone_rank}};
  j["source_row"] = source;
  return finish(std::move(text), std::move(j));
}

RenderedReport report_boundary(const DomainProduct& p, const std::vector<int>& bs) {
  const DomainProduct f = boundary_component(p, bs);
  const char* source = "boundary catalog, factorwise";

  std::vector<std::string> text;
  text.push_back("product: " + p.str());
  std::string blist;
  for (size_t i = 0; i < bs.size(); ++i) {
    if (i) blist += ",";
    blist += std::to_string(bs[i]);
  }
  text.push_back("b-vector: " + blist);
  text.push_back("boundary: " + f.str() + "  [" + std::string(source) + "]");

  json j = base("boundary");
  j["product"] = p.str();
  j["bs"] = bs;
  j["boundary"] = f.str();
  j["source_row"] = source;
  return finish(std::move(text), std::move(j));
}

RenderedReport report_incident(const Domain& d, int b) {
  const BoundaryComponent bc = boundary_component(d, b);
  const auto plans = incident_subdomain(d, b);

  std::vector<std::string> text;
  text.push_back("domain: " + d.str() + ", b = " + std::to_string(b) +
                 ", boundary component " + bc.factor.str());
  json jplans = json::array();
  for (const SymmetricSubgroupPlan& plan : plans) {
    const IncidenceConditions c = verify_conditions(d, b, plan);
    text.push_back(plan.factors.str() + "  [" + plan.source_row + "]");
    text.push_back("  kind: " + plan_kind_name(plan.kind) + "; H2: " +
                   h2_text(plan.h2_flag) + "; " + conditions_line(c));
    json jp;
    jp["factors"] = plan.factors.str();
    jp["kind"] = plan_kind_name(plan.kind);
    jp["h2"] = h2_flag_name(plan.h2_flag);
    jp["source_row"] = plan.source_row;
    jp["conditions"] = conditions_json(c);
    jplans.push_back(std::move(jp));
  }

  json j = base("incident");
  j["domain"] = d.str();
  j["b"] = b;
  j["boundary"] = bc.factor.str();
  j["plans"] = jplans;
  return finish(std::move(text), std::move(j));
}

RenderedReport report_rational(const QGroup& g) {
  std::vector<std::string> text;
  json j = base("rational");
  rational_header(g, text, j);
  json jbounds = json::array();
  for (int b = 1; b <= g.index.s; ++b) {
    json jb;
    text.push_back(boundary_line(g, b, jb));
    jbounds.push_back(std::move(jb));
  }
  text.push_back("  [index catalog]");
  j["boundaries"] = jbounds;
  j["source_row"] = "index catalog";
  return finish(std::move(text), std::move(j));
}

RenderedReport report_rational(const QGroup& g, int b) {
  const QIncidencePlan plan = incident_qsubgroup(g, b);

  std::vector<std::string> text;
  json j = base("rational");
  rational_header(g, text, j);
  json jb;
  text.push_back(boundary_line(g, b, jb));
  j["boundary"] = jb;

  if (plan.exception != QException::none)
    text.push_back("exception: " + q_exception_name(plan.exception));
  text.push_back("construction: " + q_construction_name(plan.construction));
  std::string per_place;
  json jdoms = json::array();
  for (const DomainProduct& p : plan.real_domains) {
    if (!per_place.empty()) per_place += " | ";
    per_place += p.str();
    jdoms.push_back(p.str());
  }
  text.push_back("per place: " + per_place + "  [" + plan.source_row + "]");
  text.push_back("symbolic: " + plan.symbolic);
  if (!plan.z_real_points.empty())
    text.push_back("Z_G(L)(R) = " + plan.z_real_points);
  text.push_back(conditions_line(plan.conditions) + "; 4 " + holds(plan.cond4));

  json jp;
  jp["construction"] = q_construction_name(plan.construction);
  jp["symbolic"] = plan.symbolic;
  jp["z_real_points"] = plan.z_real_points;
  jp["real_domains"] = jdoms;
  jp["conditions"] = conditions_json(plan.conditions);
  jp["cond4"] = plan.cond4;
  jp["exception"] = q_exception_name(plan.exception);
  jp["source_row"] = plan.source_row;
  j["plan"] = std::move(jp);
  return finish(std::move(text), std::move(j));
}

RenderedReport report_diagram(const std::string& target,
                              const std::vector<std::string>& lines) {
  std::vector<std::string> text = lines;
  text.push_back("  [diagram conventions]");
  json j = base("diagram");
  j["target"] = target;
  j["lines"] = lines;
  j["source_row"] = "diagram conventions";
  return finish(std::move(text), std::move(j));
}

}  // namespace hsd
