#pragma once

#include <string>
#include <vector>

#include "hsd/domains.hpp"
#include "hsd/rational.hpp"

namespace hsd {

/// ASCII restricted Dynkin diagram of an irreducible domain (or IV(2)):
/// header lines naming the system and multiplicities, then the node row
/// (last edge doubled, arrow at the short root) and the eta-label row.
std::vector<std::string> restricted_diagram_lines(const Domain& d);

/// ASCII Satake-style index diagram: absolute diagram with open
/// (isotropic) and filled (anisotropic) vertices, fold/fork notes where
/// the index has an outer twist, then the k-root system mini-diagram.
std::vector<std::string> index_diagram_lines(const KIndex& ix);

}  // namespace hsd
