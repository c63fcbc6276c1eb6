#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

/// Evaluator for the {expr} placeholders in the data tables.  An expr is a
/// signed sum of terms; each term is an optional integer coefficient
/// followed by variable letters that multiply, e.g. {b}, {n-2b}, {2ds-1}.
namespace table_eval {

inline long eval_expr(const std::string& e, const std::map<char, long>& vars) {
  auto fail = [&](const std::string& m) {
    throw std::runtime_error("template expr \"" + e + "\": " + m);
  };
  size_t i = 0;
  long total = 0;
  bool first = true;
  while (i < e.size()) {
    int sign = 1;
    if (e[i] == '+' || e[i] == '-') {
      sign = e[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    long term = 1;
    bool any = false;
    if (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i]))) {
      long v = 0;
      while (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i])))
        v = v * 10 + (e[i++] - '0');
      term = v;
      any = true;
    }
    while (i < e.size() && std::islower(static_cast<unsigned char>(e[i]))) {
      auto it = vars.find(e[i]);
      if (it == vars.end()) fail(std::string("unknown variable '") + e[i] + "'");
      term *= it->second;
      any = true;
      ++i;
    }
    if (!any) fail("empty term");
    total += sign * term;
    first = false;
  }
  if (first) fail("empty expression");
  return total;
}

/// Replaces each {expr} in the template with its evaluated integer.
inline std::string instantiate(const std::string& tpl,
                               const std::map<char, long>& vars) {
  std::string out;
  size_t i = 0;
  while (i < tpl.size()) {
    if (tpl[i] == '{') {
      const size_t j = tpl.find('}', i);
      if (j == std::string::npos)
        throw std::runtime_error("template \"" + tpl + "\": unmatched '{'");
      out += std::to_string(eval_expr(tpl.substr(i + 1, j - i - 1), vars));
      i = j + 1;
    } else {
      out += tpl[i++];
    }
  }
  return out;
}

}  // namespace table_eval
