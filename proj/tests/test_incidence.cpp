#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hsd/incidence.hpp"

using namespace hsd;

namespace {

DomainProduct prod(std::vector<Domain> ds) {
  DomainProduct p;
  for (const Domain& d : ds) p.factors.push_back(Factor::dom(d));
  return p;
}

}  // namespace

TEST_CASE("is_ED membership is exact") {
  CHECK(is_ED(Domain::TypeI(4, 4)));
  CHECK_FALSE(is_ED(Domain::TypeI(5, 4)));
  CHECK(is_ED(Domain::TypeII(6)));
  CHECK_FALSE(is_ED(Domain::TypeII(7)));
  CHECK(is_ED(Domain::TypeIII(5)));
  CHECK_FALSE(is_ED(Domain::TypeIV(8)));
  CHECK_FALSE(is_ED(Domain::TypeV()));
  CHECK_FALSE(is_ED(Domain::TypeVI()));
}

TEST_CASE("positive-dimensional boundary: one plan, boundary factor first") {
  auto plans = incident_subdomain(Domain::TypeI(5, 3), 2);
  REQUIRE(plans.size() == 1);
  CHECK(plans[0].factors ==
        prod({Domain::TypeI(3, 1), Domain::TypeI(2, 2)}));
  CHECK(plans[0].factors.str() == "I(3,1) x I(2,2)");
  CHECK(plans[0].kind == PlanKind::Table1);
  CHECK(plans[0].h2_flag == H2Flag::conditional_p_eq_q);
  CHECK(plans[0].source_row == "Table 1, row I");

  plans = incident_subdomain(Domain::TypeII(7), 2);
  REQUIRE(plans.size() == 1);
  CHECK(plans[0].factors == prod({Domain::TypeII(3), Domain::TypeII(4)}));
  CHECK(plans[0].h2_flag == H2Flag::yes);

  plans = incident_subdomain(Domain::TypeIII(5), 3);
  CHECK(plans[0].factors == prod({Domain::TypeIII(2), Domain::TypeIII(3)}));

  plans = incident_subdomain(Domain::TypeIV(9), 1);
  CHECK(plans[0].factors == prod({Domain::TypeIV(1), Domain::TypeIV(1)}));

  plans = incident_subdomain(Domain::TypeV(), 1);
  CHECK(plans[0].factors == prod({Domain::TypeI(5, 1), Domain::TypeI(1, 1)}));

  plans = incident_subdomain(Domain::TypeVI(), 1);
  CHECK(plans[0].factors == prod({Domain::TypeIV(10), Domain::TypeIV(1)}));
  plans = incident_subdomain(Domain::TypeVI(), 2);
  CHECK(plans[0].factors == prod({Domain::TypeIV(1), Domain::TypeIV(10)}));
}

TEST_CASE("full-rank boundary on the special list yields the polydisc") {
  auto plans = incident_subdomain(Domain::TypeI(4, 4), 4);
  REQUIRE(plans.size() == 1);
  CHECK(plans[0].kind == PlanKind::Polydisc);
  CHECK(plans[0].factors == DomainProduct::power(Domain::TypeI(1, 1), 4));
  CHECK(plans[0].factors.str() == "I(1,1)^4");

  plans = incident_subdomain(Domain::TypeII(8), 4);
  CHECK(plans[0].kind == PlanKind::Polydisc);
  CHECK(plans[0].factors.rank() == 4);

  plans = incident_subdomain(Domain::TypeIII(3), 3);
  CHECK(plans[0].kind == PlanKind::Polydisc);
  CHECK(plans[0].factors == DomainProduct::power(Domain::TypeI(1, 1), 3));
}

TEST_CASE("full-rank boundary off the special list yields maximal and tube rows") {
  auto plans = incident_subdomain(Domain::TypeI(7, 3), 3);
  REQUIRE(plans.size() == 2);
  CHECK(plans[0].kind == PlanKind::Table2_maximal);
  CHECK(plans[0].factors == prod({Domain::TypeI(6, 3)}));
  CHECK(plans[0].h2_flag == H2Flag::no);
  CHECK(plans[1].kind == PlanKind::Table2_tube);
  CHECK(plans[1].factors == prod({Domain::TypeI(3, 3)}));
  CHECK(plans[1].h2_flag == H2Flag::yes);

  plans = incident_subdomain(Domain::TypeII(7), 3);
  REQUIRE(plans.size() == 2);
  CHECK(plans[0].factors == prod({Domain::TypeII(6)}));
  CHECK(plans[1].factors == prod({Domain::TypeII(6)}));
  CHECK(plans[0].h2_flag == H2Flag::yes);

  plans = incident_subdomain(Domain::TypeIV(9), 2);
  REQUIRE(plans.size() == 2);
  CHECK(plans[0].factors == prod({Domain::TypeIV(8)}));
  CHECK(plans[1].factors == prod({Domain::TypeIV(8)}));
}

TEST_CASE("IV(3) full-rank boundary produces the bidisc split") {
  const auto plans = incident_subdomain(Domain::TypeIV(3), 2);
  REQUIRE(plans.size() == 2);
  for (const auto& plan : plans) {
    CHECK(plan.factors ==
          prod({Domain::TypeI(1, 1), Domain::TypeI(1, 1)}));
    CHECK(plan.factors.str() == "I(1,1)^2");
  }
}

TEST_CASE("class V full-rank boundary lists three maximal candidates") {
  const auto plans = incident_subdomain(Domain::TypeV(), 2);
  REQUIRE(plans.size() == 6);
  CHECK(plans[0].factors == prod({Domain::TypeI(4, 2)}));
  CHECK(plans[0].h2_flag == H2Flag::yes);
  CHECK(plans[1].factors == prod({Domain::TypeII(5)}));
  CHECK(plans[1].h2_flag == H2Flag::no);
  CHECK(plans[2].factors == prod({Domain::TypeIV(8)}));
  CHECK(plans[2].h2_flag == H2Flag::no);
  for (int i = 0; i < 3; ++i) CHECK(plans[i].kind == PlanKind::Table2_maximal);
  CHECK(plans[3].factors == prod({Domain::TypeI(2, 2)}));
  CHECK(plans[4].factors == prod({Domain::TypeII(4)}));
  CHECK(plans[5].factors == prod({Domain::TypeIV(8)}));
  for (int i = 3; i < 6; ++i) {
    CHECK(plans[i].kind == PlanKind::Table2_tube);
    CHECK(plans[i].h2_flag == H2Flag::yes);
  }
}

TEST_CASE("class VI full-rank boundary lists the two shared rows") {
  const auto plans = incident_subdomain(Domain::TypeVI(), 3);
  REQUIRE(plans.size() == 4);
  CHECK(plans[0].factors == prod({Domain::TypeI(3, 3)}));
  CHECK(plans[1].factors == prod({Domain::TypeII(6)}));
  CHECK(plans[2].factors == prod({Domain::TypeI(3, 3)}));
  CHECK(plans[3].factors == prod({Domain::TypeII(6)}));
  for (const auto& plan : plans) CHECK(plan.h2_flag == H2Flag::yes);
}

TEST_CASE("conditions: variants, labels, and structural checks") {
  const Domain d = Domain::TypeI(5, 3);
  auto plans = incident_subdomain(d, 2);
  IncidenceConditions c = verify_conditions(d, 2, plans[0]);
  CHECK(c.c1);
  CHECK(c.c2);
  CHECK(c.c3);
  CHECK(c.variant == CondVariant::plain);
  CHECK(cond_label(2, c.variant) == "2");

  plans = incident_subdomain(d, 3);  // b = t, not on the special list
  c = verify_conditions(d, 3, plans[0]);
  CHECK(c.variant == CondVariant::prime);
  CHECK(cond_label(2, c.variant) == "2'");
  CHECK(cond_label(3, c.variant) == "3'");
  CHECK(c.c1);
  CHECK(c.c3);

  const Domain ed = Domain::TypeIII(4);
  c = verify_conditions(ed, 4, incident_subdomain(ed, 4)[0]);
  CHECK(c.variant == CondVariant::double_prime);
  CHECK(cond_label(2, c.variant) == "2''");

  // A wrong-lead plan fails the structural condition 3.
  SymmetricSubgroupPlan bad;
  bad.factors = prod({Domain::TypeI(2, 2), Domain::TypeI(3, 1)});
  bad.kind = PlanKind::Table1;
  c = verify_conditions(d, 2, bad);
  CHECK_FALSE(c.c3);

  SymmetricSubgroupPlan tagged = plans[0];
  tagged.kind = PlanKind::Exception;
  c = verify_conditions(d, 3, tagged);
  CHECK_FALSE(c.c2);
}

TEST_CASE("every plan preserves the real rank and lowers the dimension") {
  for (const Domain& d : {Domain::TypeI(6, 3), Domain::TypeII(8),
                          Domain::TypeIII(5), Domain::TypeIV(7),
                          Domain::TypeV(), Domain::TypeVI()}) {
    for (int b = 1; b <= d.real_rank(); ++b) {
      for (const auto& plan : incident_subdomain(d, b)) {
        CAPTURE(d.str());
        CAPTURE(b);
        CAPTURE(plan.factors.str());
        CHECK(plan.factors.rank() == d.real_rank());
        CHECK(plan.factors.dim_real() < d.dim_real());
      }
    }
  }
}

TEST_CASE("incident rejects reducible domains and bad steps") {
  CHECK_THROWS_AS(incident_subdomain(Domain::TypeIV(2), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(incident_subdomain(Domain::TypeIII(3), 0), std::out_of_range);
  CHECK_THROWS_AS(incident_subdomain(Domain::TypeIII(3), 4), std::out_of_range);
}
