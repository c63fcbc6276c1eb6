#include "hsd/roots.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hsd {

Root Root::operator-() const {
  std::vector<int> v(c_);
  for (auto& x : v) x = -x;
  return Root(std::move(v));
}

Root Root::operator+(const Root& o) const {
  std::vector<int> v(c_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
  return Root(std::move(v));
}

Root Root::operator-(const Root& o) const {
  std::vector<int> v(c_);
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
  return Root(std::move(v));
}

bool Root::is_zero() const {
  for (int x : c_)
    if (x != 0) return false;
  return true;
}

bool Root::lex_positive() const {
  for (int x : c_) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

long Root::dot(const Root& o) const {
  long s = 0;
  for (size_t i = 0; i < c_.size(); ++i) s += static_cast<long>(c_[i]) * o.c_[i];
  return s;
}

std::string Root::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

std::string Root::str_xi() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    int v = c_[i];
    if (v == 0) continue;
    if (!s.empty()) s += (v > 0) ? "+" : "-";
    else if (v < 0) s += "-";
    int a = v > 0 ? v : -v;
    if (a != 1) s += std::to_string(a);
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
    case RootFamily::BC: return "BC";
    case RootFamily::E6: return "E6";
    case RootFamily::E7: return "E7";
  }
  return "?";
}

namespace {

Root unit(int dim, int i, int v) {
  std::vector<int> c(static_cast<size_t>(dim), 0);
  c[static_cast<size_t>(i)] = v;
  return Root(std::move(c));
}

Root pair_root(int dim, int i, int vi, int j, int vj) {
  std::vector<int> c(static_cast<size_t>(dim), 0);
  c[static_cast<size_t>(i)] = vi;
  c[static_cast<size_t>(j)] = vj;
  return Root(std::move(c));
}

void add_pairs(std::vector<Root>& out, int dim, int n, int scale) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          out.push_back(pair_root(dim, i, si * scale, j, sj * scale));
}

// E7 in 8 coordinates, doubled: +-2e_i +- 2e_j (i<j<=6), +-(2e7-2e8), and
// sum_{i<=6} eps_i e_i + eps7 (e7 - e8) with an odd number of eps_i = -1.
std::vector<Root> build_e7() {
  std::vector<Root> out;
  add_pairs(out, 8, 6, 2);
  out.push_back(pair_root(8, 6, 2, 7, -2));
  out.push_back(pair_root(8, 6, -2, 7, 2));
  for (int mask = 0; mask < 64; ++mask) {
    int minus = 0;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) ++minus;
    if (minus % 2 == 0) continue;
    for (int s7 : {1, -1}) {
      std::vector<int> c(8, 0);
      for (int i = 0; i < 6; ++i) c[static_cast<size_t>(i)] = (mask & (1 << i)) ? -1 : 1;
      c[6] = s7;
      c[7] = -s7;
      out.push_back(Root(std::move(c)));
    }
  }
  return out;
}

// E6 in 8 coordinates, doubled: +-2e_i +- 2e_j (i<j<=5), and
// +-(e8 - e7 - e6 + sum_{i<=5} eps_i e_i) with an even number of eps_i = -1.
std::vector<Root> build_e6() {
  std::vector<Root> out;
  add_pairs(out, 8, 5, 2);
  for (int mask = 0; mask < 32; ++mask) {
    int minus = 0;
    for (int i = 0; i < 5; ++i)
      if (mask & (1 << i)) ++minus;
    if (minus % 2 != 0) continue;
    for (int sgn : {1, -1}) {
      std::vector<int> c(8, 0);
      for (int i = 0; i < 5; ++i)
        c[static_cast<size_t>(i)] = sgn * ((mask & (1 << i)) ? -1 : 1);
      c[5] = -sgn;
      c[6] = -sgn;
      c[7] = sgn;
      out.push_back(Root(std::move(c)));
    }
  }
  return out;
}

constexpr int kMaxClassicalRank = 25;

}  // namespace

RootSystem::RootSystem(RootFamily f, int rank, int ambient, std::vector<Root> roots)
    : family_(f), rank_(rank), ambient_(ambient), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  // Simple roots: indecomposable positive roots, cached descending.
  std::vector<Root> pos = positive_roots();
  for (const Root& p : pos) {
    bool decomposable = false;
    for (const Root& q : pos) {
      if (q == p) continue;
      Root r = p - q;
      if (r.lex_positive() && contains(r)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples_.push_back(p);
  }
  std::sort(simples_.begin(), simples_.end(), [](const Root& a, const Root& b) { return b < a; });
}

RootSystem RootSystem::build(RootFamily f, int rank) {
  if (f == RootFamily::E6 || f == RootFamily::E7) {
    int expect = (f == RootFamily::E6) ? 6 : 7;
    if (rank != expect) throw std::invalid_argument("exceptional family has fixed rank");
    return RootSystem(f, expect, 8, f == RootFamily::E6 ? build_e6() : build_e7());
  }
  if (rank < 1 || rank > kMaxClassicalRank)
    throw std::invalid_argument("unsupported rank for classical family");
  std::vector<Root> out;
  switch (f) {
    case RootFamily::A: {
      int dim = rank + 1;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) out.push_back(pair_root(dim, i, 1, j, -1));
      return RootSystem(f, rank, dim, std::move(out));
    }
    case RootFamily::B:
      add_pairs(out, rank, rank, 1);
      for (int i = 0; i < rank; ++i)
        for (int s : {1, -1}) out.push_back(unit(rank, i, s));
      return RootSystem(f, rank, rank, std::move(out));
    case RootFamily::C:
      add_pairs(out, rank, rank, 1);
      for (int i = 0; i < rank; ++i)
        for (int s : {2, -2}) out.push_back(unit(rank, i, s));
      return RootSystem(f, rank, rank, std::move(out));
    case RootFamily::D:
      if (rank < 2) throw std::invalid_argument("D needs rank >= 2");
      add_pairs(out, rank, rank, 1);
      return RootSystem(f, rank, rank, std::move(out));
    case RootFamily::BC:
      add_pairs(out, rank, rank, 1);
      for (int i = 0; i < rank; ++i)
        for (int s : {1, -1, 2, -2}) out.push_back(unit(rank, i, s));
      return RootSystem(f, rank, rank, std::move(out));
    default:
      throw std::invalid_argument("unsupported family");
  }
}

bool RootSystem::contains(const Root& r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  out.reserve(roots_.size() / 2);
  for (const Root& r : roots_)
    if (r.lex_positive()) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::simple_roots() const { return simples_; }

bool RootSystem::strongly_orthogonal(const Root& a, const Root& b) const {
  if (!contains(a) || !contains(b)) throw std::invalid_argument("root not in system");
  if (a == b || a == -b) return false;
  return !contains(a + b) && !contains(a - b);
}

Root RootSystem::highest_root() const {
  for (const Root& r : roots_) {
    if (!r.lex_positive()) continue;
    bool top = true;
    for (const Root& s : simples_) {
      if (contains(r + s)) {
        top = false;
        break;
      }
    }
    if (top) return r;
  }
  throw std::logic_error("no highest root");
}

std::vector<int> RootSystem::simple_coefficients(const Root& positive) const {
  if (!positive.lex_positive() || !contains(positive))
    throw std::invalid_argument("expected a positive root");
  std::map<Root, std::vector<int>> memo;
  // Peel simple roots off: every positive non-simple root r has a simple s
  // with r - s again a positive root.
  std::vector<int> zero(simples_.size(), 0);
  std::vector<Root> chain{positive};
  while (true) {
    const Root& cur = chain.back();
    auto it = memo.find(cur);
    if (it != memo.end()) {
      chain.pop_back();
      if (chain.empty()) return it->second;
      continue;
    }
    bool simple = false;
    for (size_t k = 0; k < simples_.size(); ++k) {
      if (cur == simples_[k]) {
        std::vector<int> c = zero;
        c[k] = 1;
        memo.emplace(cur, std::move(c));
        simple = true;
        break;
      }
    }
    if (simple) continue;
    bool descended = false;
    for (size_t k = 0; k < simples_.size(); ++k) {
      Root down = cur - simples_[k];
      if (down.lex_positive() && contains(down)) {
        auto dit = memo.find(down);
        if (dit == memo.end()) {
          chain.push_back(down);
          descended = true;
          break;
        }
        std::vector<int> c = dit->second;
        c[k] += 1;
        memo.emplace(cur, std::move(c));
        descended = true;
        break;
      }
    }
    if (!descended) throw std::logic_error("positive root does not descend to the simple basis");
  }
}

}  // namespace hsd
