#include "hsd/domains.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace hsd {

std::string class_name(DomainClass c) {
  switch (c) {
    case DomainClass::I: return "I";
    case DomainClass::II: return "II";
    case DomainClass::III: return "III";
    case DomainClass::IV: return "IV";
    case DomainClass::V: return "V";
    case DomainClass::VI: return "VI";
  }
  return "?";
}

Domain Domain::TypeI(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("I(p,q) needs p,q >= 1");
  if (p < q) std::swap(p, q);  // I(p,q) and I(q,p) are the same domain
  return Domain(DomainClass::I, p, q);
}
Domain Domain::TypeII(int n) {
  if (n < 2) throw std::invalid_argument("II(n) needs n >= 2");
  return Domain(DomainClass::II, n, 0);
}
Domain Domain::TypeIII(int n) {
  if (n < 1) throw std::invalid_argument("III(n) needs n >= 1");
  return Domain(DomainClass::III, n, 0);
}
Domain Domain::TypeIV(int n) {
  if (n < 1) throw std::invalid_argument("IV(n) needs n >= 1");
  return Domain(DomainClass::IV, n, 0);
}
Domain Domain::TypeV() { return Domain(DomainClass::V, 0, 0); }
Domain Domain::TypeVI() { return Domain(DomainClass::VI, 0, 0); }

bool Domain::operator<(const Domain& o) const {
  return std::tie(cls_, p_, q_) < std::tie(o.cls_, o.p_, o.q_);
}

int Domain::real_rank() const {
  switch (cls_) {
    case DomainClass::I: return q_;
    case DomainClass::II: return p_ / 2;
    case DomainClass::III: return p_;
    case DomainClass::IV: return p_ == 1 ? 1 : 2;
    case DomainClass::V: return 2;
    case DomainClass::VI: return 3;
  }
  return 0;
}

int Domain::dim_real() const {
  switch (cls_) {
    case DomainClass::I: return 2 * p_ * q_;
    case DomainClass::II: return p_ * (p_ - 1);
    case DomainClass::III: return p_ * (p_ + 1);
    case DomainClass::IV: return 2 * p_;
    case DomainClass::V: return 32;
    case DomainClass::VI: return 54;
  }
  return 0;
}

bool Domain::tube_type() const { return restricted_root_datum(*this).mult_very_short == 0; }

bool Domain::valid_primary() const {
  if (!irreducible()) return false;
  switch (cls_) {
    case DomainClass::I: return !(p_ == 1 && q_ == 1);
    case DomainClass::II: return p_ >= 4;
    case DomainClass::III: return p_ >= 2;
    case DomainClass::IV: return p_ >= 3;
    default: return true;
  }
}

bool Domain::valid_factor() const { return true; }

std::string Domain::str() const {
  switch (cls_) {
    case DomainClass::I:
      return "I(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    case DomainClass::II: return "II(" + std::to_string(p_) + ")";
    case DomainClass::III: return "III(" + std::to_string(p_) + ")";
    case DomainClass::IV: return "IV(" + std::to_string(p_) + ")";
    case DomainClass::V: return "V";
    case DomainClass::VI: return "VI";
  }
  return "?";
}

const Domain& Factor::domain() const {
  if (point_) throw std::logic_error("point factor has no domain");
  return d_;
}
int Factor::rank() const { return point_ ? 0 : d_.real_rank(); }
int Factor::dim_real() const { return point_ ? 0 : d_.dim_real(); }
bool Factor::operator==(const Factor& o) const {
  if (point_ != o.point_) return false;
  return point_ || d_ == o.d_;
}
std::string Factor::str() const { return point_ ? "pt" : d_.str(); }

int DomainProduct::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank();
  return r;
}
int DomainProduct::dim_real() const {
  int r = 0;
  for (const auto& f : factors) r += f.dim_real();
  return r;
}
std::string DomainProduct::str() const {
  std::string out;
  size_t i = 0;
  while (i < factors.size()) {
    size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += " x ";
    out += factors[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}
DomainProduct DomainProduct::power(const Domain& d, int k) {
  DomainProduct p;
  for (int i = 0; i < k; ++i) p.factors.push_back(Factor::dom(d));
  return p;
}

int RestrictedRootDatum::dim_real() const {
  return t + t * (t - 1) * mult_short_pair + t * mult_long + t * mult_very_short;
}

RestrictedRootDatum restricted_root_datum(const Domain& d) {
  RestrictedRootDatum r;
  r.t = d.real_rank();
  switch (d.cls()) {
    case DomainClass::I:
      r.mult_short_pair = 2;
      r.mult_long = 1;
      r.mult_very_short = 2 * (d.p() - d.q());
      break;
    case DomainClass::II:
      r.mult_short_pair = 4;
      r.mult_long = 1;
      r.mult_very_short = 4 * (d.n() % 2);
      break;
    case DomainClass::III:
      r.mult_short_pair = 1;
      r.mult_long = 1;
      r.mult_very_short = 0;
      break;
    case DomainClass::IV:
      // IV(1) is the disc: rank 1, a single long root.
      r.mult_short_pair = d.n() >= 2 ? d.n() - 2 : 0;
      r.mult_long = 1;
      r.mult_very_short = 0;
      break;
    case DomainClass::V:
      r.mult_short_pair = 6;
      r.mult_long = 1;
      r.mult_very_short = 8;
      break;
    case DomainClass::VI:
      r.mult_short_pair = 8;
      r.mult_long = 1;
      r.mult_very_short = 0;
      break;
  }
  r.bc = r.mult_very_short > 0;
  return r;
}

int real_rank(const Domain& d) { return d.real_rank(); }
int dim_real(const Domain& d) { return d.dim_real(); }
bool is_tube_type(const Domain& d) { return d.tube_type(); }

Domain normalize(const Domain& d) {
  switch (d.cls()) {
    case DomainClass::II:
      if (d.n() == 2) return Domain::TypeI(1, 1);
      if (d.n() == 3) return Domain::TypeI(3, 1);
      return d;
    case DomainClass::III:
      if (d.n() == 1) return Domain::TypeI(1, 1);
      return d;
    case DomainClass::IV:
      if (d.n() == 1) return Domain::TypeI(1, 1);
      if (d.n() == 3) return Domain::TypeIII(2);
      if (d.n() == 4) return Domain::TypeI(2, 2);
      if (d.n() == 6) return Domain::TypeII(4);
      return d;  // IV(2) is reducible; left untouched
    default:
      return d;
  }
}

bool same_domain(const Domain& a, const Domain& b) { return normalize(a) == normalize(b); }

bool same_factor(const Factor& a, const Factor& b) {
  if (a.is_point() || b.is_point()) return a.is_point() == b.is_point();
  return same_domain(a.domain(), b.domain());
}

namespace {

// Distinguished simple root for the exceptional noncompact realizations:
// coefficient 1 in the highest root, complement of the expected size
// (D5 has 40 roots under E6, E6 has 72 under E7).
size_t distinguished_node(const RootSystem& sys, int complement_roots) {
  std::vector<Root> simples = sys.simple_roots();
  std::vector<int> top = sys.simple_coefficients(sys.highest_root());
  std::vector<Root> pos = sys.positive_roots();
  for (size_t k = 0; k < simples.size(); ++k) {
    if (top[k] != 1) continue;
    int count = 0;
    for (const Root& r : pos)
      if (sys.simple_coefficients(r)[k] == 0) count += 2;  // r and -r
    if (count == complement_roots) return k;
  }
  throw std::logic_error("no distinguished node");
}

std::vector<Root> exceptional_sigma_plus(const RootSystem& sys, int complement_roots) {
  size_t k = distinguished_node(sys, complement_roots);
  std::vector<Root> out;
  for (const Root& r : sys.positive_roots())
    if (sys.simple_coefficients(r)[k] == 1) out.push_back(r);
  return out;
}

}  // namespace

NoncompactRealization noncompact_realization(const Domain& d) {
  switch (d.cls()) {
    case DomainClass::I: {
      int p = d.p(), q = d.q();
      RootSystem sys = RootSystem::build(RootFamily::A, p + q - 1);
      std::vector<Root> sp;
      for (int i = 0; i < p; ++i)
        for (int j = p; j < p + q; ++j) {
          std::vector<int> c(static_cast<size_t>(p + q), 0);
          c[static_cast<size_t>(i)] = 1;
          c[static_cast<size_t>(j)] = -1;
          sp.push_back(Root(std::move(c)));
        }
      std::sort(sp.begin(), sp.end());
      return {std::move(sys), std::move(sp)};
    }
    case DomainClass::II: {
      int n = d.n();
      RootSystem sys = RootSystem::build(RootFamily::D, n);
      std::vector<Root> sp;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<int> c(static_cast<size_t>(n), 0);
          c[static_cast<size_t>(i)] = 1;
          c[static_cast<size_t>(j)] = 1;
          sp.push_back(Root(std::move(c)));
        }
      std::sort(sp.begin(), sp.end());
      return {std::move(sys), std::move(sp)};
    }
    case DomainClass::III: {
      int n = d.n();
      RootSystem sys = RootSystem::build(RootFamily::C, n);
      std::vector<Root> sp;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          std::vector<int> c(static_cast<size_t>(n), 0);
          c[static_cast<size_t>(i)] = 1;
          c[static_cast<size_t>(j)] = 1;
          sp.push_back(Root(std::move(c)));
        }
        std::vector<int> c(static_cast<size_t>(n), 0);
        c[static_cast<size_t>(i)] = 2;
        sp.push_back(Root(std::move(c)));
      }
      std::sort(sp.begin(), sp.end());
      return {std::move(sys), std::move(sp)};
    }
    case DomainClass::IV: {
      int n = d.n();
      bool even = (n % 2 == 0);
      int m = even ? (n + 2) / 2 : (n + 1) / 2;
      RootSystem sys = RootSystem::build(even ? RootFamily::D : RootFamily::B, m);
      std::vector<Root> sp;
      for (int j = 1; j < m; ++j) {
        for (int s : {1, -1}) {
          std::vector<int> c(static_cast<size_t>(m), 0);
          c[0] = 1;
          c[static_cast<size_t>(j)] = s;
          sp.push_back(Root(std::move(c)));
        }
      }
      if (!even) {
        std::vector<int> c(static_cast<size_t>(m), 0);
        c[0] = 1;
        sp.push_back(Root(std::move(c)));
      }
      std::sort(sp.begin(), sp.end());
      return {std::move(sys), std::move(sp)};
    }
    case DomainClass::V: {
      RootSystem sys = RootSystem::build(RootFamily::E6, 6);
      std::vector<Root> sp = exceptional_sigma_plus(sys, 40);
      std::sort(sp.begin(), sp.end());
      return {std::move(sys), std::move(sp)};
    }
    case DomainClass::VI: {
      RootSystem sys = RootSystem::build(RootFamily::E7, 7);
      std::vector<Root> sp = exceptional_sigma_plus(sys, 72);
      std::sort(sp.begin(), sp.end());
      return {std::move(sys), std::move(sp)};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Root> strongly_orthogonal_cascade(const Domain& d) {
  NoncompactRealization nc = noncompact_realization(d);
  std::vector<Root> out;
  for (const Root& r : nc.sigma_plus) {
    bool ok = true;
    for (const Root& c : out) {
      if (!nc.system.strongly_orthogonal(r, c)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

}  // namespace hsd
