#pragma once

#include <stdexcept>
#include <string>

#include "hsd/domains.hpp"
#include "hsd/rational.hpp"

namespace hsd {

/// Malformed input string (as opposed to a well-formed string naming an
/// object that fails validation).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Strict parsers for the string grammar used by the CLI and golden files.
/// Each consumes the whole string and throws ParseError on any leftover;
/// parse(obj.str()) == obj holds for every representable object.
Domain parse_domain(const std::string& s);    // "I(3,1)", "IV(10)", "V", ...
Factor parse_factor(const std::string& s);    // a domain or "pt"
DomainProduct parse_product(const std::string& s);  // "I(1,1)^3 x IV(10)"
KIndex parse_index(const std::string& s);     // "2A(2;5,1)", "E7-31", ...
ArchimedeanData parse_arch(const std::string& s);   // "(6,6),(8,4)", "def,split"

}  // namespace hsd
