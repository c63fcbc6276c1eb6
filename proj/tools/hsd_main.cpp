#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsd/checks.hpp"
#include "hsd/diagram.hpp"
#include "hsd/grammar.hpp"
#include "hsd/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;

void emit(const hsd::RenderedReport& rep, const std::string& format) {
  std::cout << (format == "json" ? rep.json : rep.text) << "\n";
}

/// Comma-separated integers; malformed input is a parse error.
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    const std::string tok = s.substr(i, j - i);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw hsd::ParseError("expected an integer, got \"" + tok + "\"");
    }
    if (used != tok.size())
      throw hsd::ParseError("expected an integer, got \"" + tok + "\"");
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

int run_domain_info(const std::string& target, const std::string& format) {
  const hsd::Domain d = hsd::parse_domain(target);
  if (!d.valid_primary()) {
    std::cerr << "validation failure: " << d.str()
              << " is not a primary query input\n";
    return kExitValidation;
  }
  emit(hsd::report_domain_info(d), format);
  return kExitOk;
}

int run_boundary(const std::string& target, const std::string& barg,
                 const std::string& format) {
  const hsd::DomainProduct p = hsd::parse_product(target);
  const std::vector<int> bs = parse_int_list(barg);
  if (p.factors.size() == 1 && !p.factors.front().is_point() && bs.size() == 1) {
    const hsd::Domain d = p.factors.front().domain();
    if (!d.valid_primary()) {
      std::cerr << "validation failure: " << d.str()
                << " is not a primary query input\n";
      return kExitValidation;
    }
    emit(hsd::report_boundary(d, bs.front()), format);
  } else {
    emit(hsd::report_boundary(p, bs), format);
  }
  return kExitOk;
}

int run_incident(const std::string& target, int b, const std::string& format) {
  const hsd::Domain d = hsd::parse_domain(target);
  if (!d.valid_primary()) {
    std::cerr << "validation failure: " << d.str()
              << " is not a primary query input\n";
    return kExitValidation;
  }
  emit(hsd::report_incident(d, b), format);
  return kExitOk;
}

int run_rational(const std::string& target, const std::string& arch, int b,
                 const std::string& format) {
  const hsd::KIndex ix = hsd::parse_index(target);
  hsd::QGroup g{ix, arch.empty() ? hsd::default_arch(ix) : hsd::parse_arch(arch)};
  const std::vector<std::string> violations = hsd::validate_qgroup(g);
  if (!violations.empty()) {
    if (format == "json") {
      std::string list;
      for (const std::string& v : violations) {
        if (!list.empty()) list += ", ";
        list += "\"" + v + "\"";
      }
      std::cout << "{\n  \"schema_version\": 1,\n  \"query\": \"rational\",\n"
                << "  \"violations\": [" << list << "]\n}\n";
    } else {
      for (const std::string& v : violations)
        std::cerr << "validation failure: " << v << "\n";
    }
    return kExitValidation;
  }
  emit(b >= 0 ? hsd::report_rational(g, b) : hsd::report_rational(g), format);
  return kExitOk;
}

int run_diagram(const std::string& target, const std::string& format) {
  std::vector<std::string> lines;
  try {
    lines = hsd::restricted_diagram_lines(hsd::parse_domain(target));
  } catch (const hsd::ParseError&) {
    lines = hsd::index_diagram_lines(hsd::parse_index(target));
  }
  emit(hsd::report_diagram(target, lines), format);
  return kExitOk;
}

int run_check(const std::string& grid, const std::string& format) {
  const hsd::CheckReport rep = hsd::run_invariant_suite(grid == "full");
  if (format == "json") {
    std::string list;
    for (const std::string& f : rep.failures) {
      if (!list.empty()) list += ", ";
      list += "\"" + f + "\"";
    }
    std::cout << "{\n  \"schema_version\": 1,\n  \"query\": \"check\",\n"
              << "  \"grid\": \"" << grid << "\",\n  \"passed\": " << rep.passed
              << ",\n  \"failed\": " << rep.failed << ",\n  \"failures\": ["
              << list << "]\n}\n";
  } else {
    std::cout << "invariant suite (" << grid << " grid): " << rep.passed
              << " passed, " << rep.failed << " failed\n";
    for (const std::string& f : rep.failures) std::cout << "  FAIL " << f << "\n";
  }
  return rep.ok() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic classification engine for hermitian symmetric domains"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string target, barg, arch;
  int b = -1;
  std::string grid = "small";

  CLI::App* sc_info = app.add_subcommand("domain_info", "domain invariants");
  sc_info->add_option("domain", target)->required();
  sc_info->fallthrough();

  CLI::App* sc_boundary =
      app.add_subcommand("boundary", "boundary component and parabolic data");
  sc_boundary->add_option("domain", target)->required();
  sc_boundary->add_option("b", barg)->required();
  sc_boundary->fallthrough();

  CLI::App* sc_incident =
      app.add_subcommand("incident", "incident symmetric subdomains");
  sc_incident->add_option("domain", target)->required();
  sc_incident->add_option("b", b)->required();
  sc_incident->fallthrough();

  CLI::App* sc_rational =
      app.add_subcommand("rational", "rational boundary and incident k-subgroup");
  sc_rational->add_option("index", target)->required();
  sc_rational->add_option("--arch", arch, "archimedean place list");
  sc_rational->add_option("b", b);
  sc_rational->fallthrough();

  CLI::App* sc_diagram = app.add_subcommand("diagram", "ASCII diagrams");
  sc_diagram->add_option("target", target)->required();
  sc_diagram->fallthrough();

  CLI::App* sc_check = app.add_subcommand("check", "run the invariant suite");
  sc_check->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));
  sc_check->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (sc_info->parsed()) return run_domain_info(target, format);
    if (sc_boundary->parsed()) return run_boundary(target, barg, format);
    if (sc_incident->parsed()) return run_incident(target, b, format);
    if (sc_rational->parsed()) return run_rational(target, arch, b, format);
    if (sc_diagram->parsed()) return run_diagram(target, format);
    if (sc_check->parsed()) return run_check(grid, format);
  } catch (const hsd::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitParse;
}
