#pragma once

#include <string>
#include <vector>

#include "hsd/domains.hpp"
#include "hsd/parabolic.hpp"

namespace hsd {

/// The short list I(q,q), II(n) with n even, III(n): the classes whose
/// zero-dimensional boundary components admit no incident maximal
/// irreducible subdomain, so the maximal polydisc is used instead.
bool is_ED(const Domain& d);

enum class PlanKind { Table1, Table2_maximal, Table2_tube, Polydisc, Exception };
enum class H2Flag { yes, no, conditional_p_eq_q };

std::string plan_kind_name(PlanKind k);
std::string h2_flag_name(H2Flag f);

/// One candidate incident symmetric subdomain: the factor product, the
/// catalog row that produced it, and that row's recorded H2 flag.
struct SymmetricSubgroupPlan {
  DomainProduct factors;
  PlanKind kind = PlanKind::Table1;
  H2Flag h2_flag = H2Flag::yes;
  std::string source_row;
};

/// b < t: the single Table 1 plan (boundary factor first).  b = t: either
/// the single polydisc plan (classes on the is_ED list) or the Table 2
/// maximal plans followed by the maximal-tube plans, in printed row order.
std::vector<SymmetricSubgroupPlan> incident_subdomain(const Domain& d, int b);

/// Which variant of the defining conditions applies: the plain pair {2,3}
/// for positive-dimensional boundary (b < t), the primed pair for
/// zero-dimensional boundary outside the is_ED list, the double-primed
/// (minimality/polydisc) pair on it.
enum class CondVariant { plain, prime, double_prime };

std::string cond_label(int which, CondVariant v);  // e.g. cond_label(2, prime) == "2'"

struct IncidenceConditions {
  bool c1 = false;                            // rank(N) = rank(G)
  CondVariant variant = CondVariant::plain;   // applies to both 2 and 3
  bool c2 = false;                            // maximality/minimality, by catalog provenance
  bool c3 = false;                            // boundary-component compatibility, structural
};

/// c1 is rank arithmetic; c2 holds by table provenance for every cataloged
/// plan kind (and never for Exception); c3 is checked structurally: Table 1
/// plans must lead with the boundary factor, zero-dimensional-case plans
/// must have a distinguished factor whose own full-rank boundary is a point.
IncidenceConditions verify_conditions(const Domain& d, int b,
                                      const SymmetricSubgroupPlan& plan);

}  // namespace hsd
