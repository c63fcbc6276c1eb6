#include <stdexcept>
#include "doctest.h"
#include "hsd/diagram.hpp"

using namespace hsd;

TEST_CASE("restricted diagram of a tube domain ends in a long-root edge") {
  const auto lines = restricted_diagram_lines(Domain::TypeIII(3));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "domain: III(3)");
  CHECK(lines[1] == "restricted root system: C3 (real rank 3)");
  CHECK(lines[2] == "multiplicities: short pair 1, long 1, very short 0");
  CHECK(lines[3] == "o---o=<=o");
  CHECK(lines[4] == "η1  η2  η3");
}

TEST_CASE("restricted diagram of a non-tube domain ends in an arrow to the short root") {
  const auto lines = restricted_diagram_lines(Domain::TypeI(5, 3));
  CHECK(lines[1] == "restricted root system: BC3 (real rank 3)");
  CHECK(lines[3] == "o---o=>=o");
}

TEST_CASE("rank-one and reducible special cases") {
  auto lines = restricted_diagram_lines(Domain::TypeI(1, 1));
  CHECK(lines[1] == "restricted root system: C1 (real rank 1)");
  CHECK(lines[3] == "o");
  CHECK(lines[4] == "η1");

  lines = restricted_diagram_lines(Domain::TypeIV(2));
  CHECK(lines[1] == "restricted root system: A1 x A1 (reducible, real rank 2)");
  CHECK(lines[3] == "o   o");
}

TEST_CASE("index diagram of an outer A form alternates open and filled") {
  const auto lines = index_diagram_lines(KIndex::A2(3, 11, 2));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "index: 2A(3;11,2)");
  CHECK(lines[1] ==
        "absolute type A11; open (isotropic) at positions 3, 6, 9; folded by "
        "i <-> 12-i");
  CHECK(lines[2] == "x---x---o---x---x---o---x---x---o---x---x");
  CHECK(lines[3] == "k-root system: C2 (k-rank 2)");
  CHECK(lines[4] == "o=<=o");
  CHECK(lines[5] == "η1  η2");
}

TEST_CASE("index diagrams of the remaining families") {
  auto lines = index_diagram_lines(KIndex::C2(4, 2));
  CHECK(lines[1] == "absolute type C4; open (isotropic) at positions 2, 4");
  CHECK(lines[2] == "x---o---x=<=o");
  CHECK(lines[3] == "k-root system: C2 (k-rank 2)");

  lines = index_diagram_lines(KIndex::C2(6, 2));
  CHECK(lines[3] == "k-root system: BC2 (k-rank 2)");
  CHECK(lines[4] == "o=>=o");

  lines = index_diagram_lines(KIndex::C1(3));
  CHECK(lines[1] == "absolute type C3; split: every vertex isotropic");
  CHECK(lines[2] == "o---o=<=o");

  lines = index_diagram_lines(KIndex::D2(1, 6, 2));
  CHECK(lines[1] ==
        "absolute type D6; open (isotropic) at positions 2, 4; fork vertices "
        "anisotropic");
  CHECK(lines[2] == "x---o---x---o---x");
  CHECK(lines[3] == "            |");
  CHECK(lines[4] == "            x");

  lines = index_diagram_lines(KIndex::D2(2, 7, 2));
  CHECK(lines[1] ==
        "absolute type D7; open (isotropic) at positions 2, 4; fork vertices "
        "anisotropic, swapped by the outer involution");

  lines = index_diagram_lines(KIndex::IVForm(9, 1));
  CHECK(lines[1] == "absolute type B5; open (isotropic) at positions 1");
  CHECK(lines[2] == "o---x---x---x=>=x");

  lines = index_diagram_lines(KIndex::IVForm(8, 2));
  CHECK(lines[1] == "absolute type D5; open (isotropic) at positions 1, 2");
  CHECK(lines[2] == "o---o---x---x");
  CHECK(lines[3] == "        |");
  CHECK(lines[4] == "        x");

  lines = index_diagram_lines(KIndex::E6());
  CHECK(lines[1] ==
        "absolute type E6; open (isotropic) at a2; folded by a1 <-> a6, a3 "
        "<-> a5");
  CHECK(lines[2] == "x---x---x---x---x");
  CHECK(lines[3] == "        |");
  CHECK(lines[4] == "        o");
  CHECK(lines[5] == "k-root system: BC1 (k-rank 1)");
  CHECK(lines[6] == "o");

  lines = index_diagram_lines(KIndex::E7());
  CHECK(lines[1] ==
        "absolute type E7; open (isotropic) at chain positions 2 and 6, "
        "branch vertex anisotropic");
  CHECK(lines[2] == "x---o---x---x---x---o");
  CHECK(lines[3] == "            |");
  CHECK(lines[4] == "            x");
  CHECK(lines[5] == "k-root system: BC2 (k-rank 2)");
  CHECK(lines[6] == "o=>=o");
}

TEST_CASE("diagram rejects invalid inputs") {
  CHECK_THROWS_AS(index_diagram_lines(KIndex::C2(5, 2)), std::invalid_argument);
}
