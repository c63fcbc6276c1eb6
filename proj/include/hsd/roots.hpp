#pragma once

#include <string>
#include <vector>

namespace hsd {

/// A root as an exact integer vector in a fixed ambient coordinate realization.
/// All arithmetic is integral; no floating point enters the engine.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coords) : c_(std::move(coords)) {}

  int dim() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<int>& coords() const { return c_; }

  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  bool operator==(const Root& o) const { return c_ == o.c_; }
  bool operator!=(const Root& o) const { return c_ != o.c_; }
  /// Ascending lexicographic order on coordinate vectors.
  bool operator<(const Root& o) const { return c_ < o.c_; }

  bool is_zero() const;
  /// True when the first nonzero coordinate is positive.
  bool lex_positive() const;
  long dot(const Root& o) const;

  /// Coordinate form, e.g. "(1,-1,0)".
  std::string str() const;
  /// xi-basis form, e.g. "x1-x2", "2x3", "x2".
  std::string str_xi() const;

 private:
  std::vector<int> c_;
};

enum class RootFamily { A, B, C, D, BC, E6, E7 };

std::string family_name(RootFamily f);

/// Finite reduced or non-reduced (BC) root system with an exact integer
/// realization.  Positivity is lexicographic in the fixed coordinate order;
/// E6/E7 are realized in 8 coordinates with every root scaled by 2 so that
/// all entries stay integral.
class RootSystem {
 public:
  static RootSystem build(RootFamily f, int rank);

  RootFamily family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }

  /// All roots, sorted ascending lexicographically.
  const std::vector<Root>& roots() const { return roots_; }
  bool contains(const Root& r) const;

  /// Roots whose first nonzero coordinate is positive, ascending.
  std::vector<Root> positive_roots() const;

  /// Indecomposable positive roots in descending lexicographic order,
  /// which reproduces the classical numbering (e.g. C_t: x1-x2, ..., 2xt).
  std::vector<Root> simple_roots() const;

  /// a and b are strongly orthogonal when a != +-b and neither a+b nor a-b
  /// is a root.  Throws std::invalid_argument when a or b is not a member.
  bool strongly_orthogonal(const Root& a, const Root& b) const;

  /// The unique positive root theta with theta + s not a root for every
  /// simple s.  Requires an irreducible system.
  Root highest_root() const;

  /// Expansion of a positive root in the simple basis (nonnegative integers).
  std::vector<int> simple_coefficients(const Root& positive) const;

 private:
  RootSystem(RootFamily f, int rank, int ambient, std::vector<Root> roots);

  RootFamily family_;
  int rank_;
  int ambient_;
  std::vector<Root> roots_;         // sorted ascending
  std::vector<Root> simples_;       // cached, descending lex
};

}  // namespace hsd
