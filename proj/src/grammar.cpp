#include "hsd/grammar.hpp"

#include <cctype>

namespace hsd {
namespace {

/// Character cursor with one-token-lookahead helpers; every failure throws
/// ParseError naming the offset.
struct Cursor {
  const std::string& s;
  size_t i = 0;

  explicit Cursor(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(i) + " in \"" + s +
                     "\": " + what);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  void skip_ws() {
    while (!done() && s[i] == ' ') ++i;
  }
  bool try_lit(const std::string& lit) {
    if (s.compare(i, lit.size(), lit) != 0) return false;
    i += lit.size();
    return true;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) fail("number too large");
      ++i;
    }
    return static_cast<int>(v);
  }
  void end() {
    skip_ws();
    if (!done()) fail("trailing input");
  }
};

/// "(" a sep b ")" with sep ',' or ';'.
std::pair<int, int> int_pair(Cursor& c, char sep) {
  c.expect('(');
  int a = c.number();
  c.expect(sep);
  int b = c.number();
  c.expect(')');
  return {a, b};
}

int paren_int(Cursor& c) {
  int n = c.number();
  c.expect(')');
  return n;
}

Domain domain_term(Cursor& c) {
  // Longest class token first: "III(" before "II(" before "I(", "VI"
  // before "V"; the open paren is part of the match so "II(" cannot eat
  // the prefix of "III(".
  if (c.try_lit("III(")) return Domain::TypeIII(paren_int(c));
  if (c.try_lit("IV(")) return Domain::TypeIV(paren_int(c));
  if (c.try_lit("II(")) return Domain::TypeII(paren_int(c));
  if (c.try_lit("I(")) {
    int p = c.number();
    c.expect(',');
    int q = paren_int(c);
    if (p < q) c.fail("type I signature must satisfy p >= q");
    return Domain::TypeI(p, q);
  }
  if (c.try_lit("VI")) return Domain::TypeVI();
  if (c.try_lit("V")) return Domain::TypeV();
  c.fail("expected a domain (I/II/III/IV/V/VI)");
}

Factor factor_term(Cursor& c) {
  if (c.try_lit("pt")) return Factor::point();
  return Factor::dom(domain_term(c));
}

}  // namespace

Domain parse_domain(const std::string& s) {
  Cursor c(s);
  c.skip_ws();
  Domain d = domain_term(c);
  c.end();
  return d;
}

Factor parse_factor(const std::string& s) {
  Cursor c(s);
  c.skip_ws();
  Factor f = factor_term(c);
  c.end();
  return f;
}

DomainProduct parse_product(const std::string& s) {
  Cursor c(s);
  DomainProduct prod;
  for (;;) {
    c.skip_ws();
    Factor f = factor_term(c);
    int k = 1;
    if (c.peek() == '^') {
      ++c.i;
      k = c.number();
      if (k < 1) c.fail("power must be >= 1");
    }
    for (int j = 0; j < k; ++j) prod.factors.push_back(f);
    c.skip_ws();
    if (c.done()) break;
    c.expect('x');
  }
  return prod;
}

KIndex parse_index(const std::string& s) {
  Cursor c(s);
  c.skip_ws();
  KIndex ix;
  if (c.try_lit("E6-28")) {
    ix = KIndex::E6();
  } else if (c.try_lit("E7-31")) {
    ix = KIndex::E7();
  } else if (c.try_lit("2A")) {
    c.expect('(');
    int d = c.number();
    c.expect(';');
    int n = c.number();
    c.expect(',');
    int sv = c.number();
    c.expect(')');
    ix = KIndex::A2(d, n, sv);
  } else if (c.try_lit("Asplit")) {
    auto [n, q] = int_pair(c, ';');
    ix = KIndex::Asplit(n, q);
  } else if (c.try_lit("1D2")) {
    auto [n, sv] = int_pair(c, ',');
    ix = KIndex::D2(1, n, sv);
  } else if (c.try_lit("2D2")) {
    auto [n, sv] = int_pair(c, ',');
    ix = KIndex::D2(2, n, sv);
  } else if (c.try_lit("C2")) {
    auto [n, sv] = int_pair(c, ',');
    ix = KIndex::C2(n, sv);
  } else if (c.try_lit("C1")) {
    c.expect('(');
    int n = c.number();
    c.expect(')');
    ix = KIndex::C1(n);
  } else if (c.try_lit("IV")) {
    auto [n, sv] = int_pair(c, ';');
    ix = KIndex::IVForm(n, sv);
  } else {
    c.fail("expected an index (2A/Asplit/1D2/2D2/C2/C1/IV/E6-28/E7-31)");
  }
  c.end();
  return ix;
}

ArchimedeanData parse_arch(const std::string& s) {
  Cursor c(s);
  ArchimedeanData a;
  for (;;) {
    c.skip_ws();
    if (c.try_lit("def")) {
      a.places.push_back(ArchPlace::def());
    } else if (c.try_lit("split")) {
      a.places.push_back(ArchPlace::spl());
    } else if (c.peek() == '(') {
      auto [p, q] = int_pair(c, ',');
      a.places.push_back(ArchPlace::sig(p, q));
    } else {
      c.fail("expected a place: (p,q), def, or split");
    }
    c.skip_ws();
    if (c.done()) break;
    c.expect(',');
  }
  if (a.places.empty()) c.fail("empty place list");
  return a;
}

}  // namespace hsd
