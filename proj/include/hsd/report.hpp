#pragma once

#include <string>
#include <vector>

#include "hsd/domains.hpp"
#include "hsd/incidence.hpp"
#include "hsd/parabolic.hpp"
#include "hsd/rational.hpp"

namespace hsd {

/// One finished answer: human-readable text and the schema_version-1
/// structured form, both fully serialized.  Text carries the provenance
/// citation in brackets; the structured form carries it as source_row.
struct RenderedReport {
  std::string text;
  std::string json;
};

RenderedReport report_domain_info(const Domain& d);
RenderedReport report_boundary(const Domain& d, int b);
RenderedReport report_boundary(const DomainProduct& p, const std::vector<int>& bs);
RenderedReport report_incident(const Domain& d, int b);
RenderedReport report_rational(const QGroup& g);         // overview of all b
RenderedReport report_rational(const QGroup& g, int b);  // one incidence plan
RenderedReport report_diagram(const std::string& target,
                              const std::vector<std::string>& lines);

}  // namespace hsd
