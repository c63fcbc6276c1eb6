#include "hsd/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsd {
namespace {

constexpr const char* kEdgePlain = "---";
constexpr const char* kEdgeNone = "   ";
constexpr const char* kEdgeLong = "=<=";   // right-hand root long (C ending)
constexpr const char* kEdgeShort = "=>=";  // right-hand root short (B/BC ending)

/// Node row at a 4-column pitch: glyph, then a 3-character edge.
std::string node_row(const std::vector<char>& glyphs,
                     const std::vector<std::string>& edges) {
  std::string row;
  for (size_t i = 0; i < glyphs.size(); ++i) {
    row += glyphs[i];
    if (i + 1 < glyphs.size()) row += edges[i];
  }
  return row;
}

/// Label row matching the pitch; eta is one display column wide.
std::string eta_row(int t) {
  std::string row;
  for (int i = 1; i <= t; ++i) {
    std::string label = "η" + std::to_string(i);
    row += label;
    if (i < t) row += std::string(4 - 1 - std::to_string(i).size(), ' ');
  }
  return row;
}

/// Two-row chain picture of the rank-t restricted system: C ends with
/// =<=, BC with =>=; a vanishing pair multiplicity disconnects the nodes.
void append_restricted_chain(std::vector<std::string>& out, int t, bool bc,
                             bool disconnected) {
  std::vector<char> glyphs(t, 'o');
  std::vector<std::string> edges;
  for (int i = 0; i + 1 < t; ++i) {
    if (disconnected)
      edges.push_back(kEdgeNone);
    else
      edges.push_back(i + 2 == t ? (bc ? kEdgeShort : kEdgeLong) : kEdgePlain);
  }
  out.push_back(node_row(glyphs, edges));
  out.push_back(eta_row(t));
}

std::string system_name(bool bc, int t) {
  return (bc ? "BC" : "C") + std::to_string(t);
}

std::string position_list(const std::vector<int>& ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ps[i]);
  }
  return out;
}

/// Chain of n nodes with the given open positions (1-based) and ending.
void append_abs_chain(std::vector<std::string>& out, int n,
                      const std::vector<int>& open, const char* last_edge) {
  std::vector<char> glyphs(n, 'x');
  for (int p : open) glyphs[p - 1] = 'o';
  std::vector<std::string> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back(i + 2 == n ? last_edge : kEdgePlain);
  out.push_back(node_row(glyphs, edges));
}

/// Chain with one node hanging below chain position `at` (1-based).
void append_branched(std::vector<std::string>& out, int chain_len,
                     const std::vector<int>& open_chain, int at,
                     char branch_glyph) {
  std::vector<char> glyphs(chain_len, 'x');
  for (int p : open_chain) glyphs[p - 1] = 'o';
  std::vector<std::string> edges(chain_len > 0 ? chain_len - 1 : 0, kEdgePlain);
  out.push_back(node_row(glyphs, edges));
  const size_t col = 4 * (at - 1);
  out.push_back(std::string(col, ' ') + "|");
  out.push_back(std::string(col, ' ') + branch_glyph);
}

std::vector<int> iota_scaled(int count, int step) {
  std::vector<int> v;
  for (int k = 1; k <= count; ++k) v.push_back(k * step);
  return v;
}

}  // namespace

std::vector<std::string> restricted_diagram_lines(const Domain& d) {
  if (!d.valid_factor())
    throw std::invalid_argument("restricted_diagram_lines: not a representable domain");
  const RestrictedRootDatum rr = restricted_root_datum(d);
  const bool disconnected = rr.t >= 2 && rr.mult_short_pair == 0;
  std::vector<std::string> out;
  out.push_back("domain: " + d.str());
  if (disconnected) {
    out.push_back("restricted root system: A1 x A1 (reducible, real rank " +
                  std::to_string(rr.t) + ")");
  } else {
    out.push_back("restricted root system: " + system_name(rr.bc, rr.t) +
                  " (real rank " + std::to_string(rr.t) + ")");
  }
  out.push_back("multiplicities: short pair " + std::to_string(rr.mult_short_pair) +
                ", long " + std::to_string(rr.mult_long) + ", very short " +
                std::to_string(rr.mult_very_short));
  append_restricted_chain(out, rr.t, rr.bc, disconnected);
  return out;
}

std::vector<std::string> index_diagram_lines(const KIndex& ix) {
  {
    const std::vector<std::string> v = validate_index(ix);
    if (!v.empty()) throw std::invalid_argument("index_diagram_lines: " + v.front());
  }
  std::vector<std::string> out;
  out.push_back("index: " + ix.str());
  switch (ix.family) {
    case KFamily::A2:
    case KFamily::Asplit: {
      std::vector<int> open = iota_scaled(ix.s, ix.d);
      for (int k = 1; k <= ix.s; ++k) {
        const int mirror = ix.n + 1 - k * ix.d;
        if (std::find(open.begin(), open.end(), mirror) == open.end())
          open.push_back(mirror);
      }
      std::sort(open.begin(), open.end());
      out.push_back("absolute type A" + std::to_string(ix.n) +
                    "; open (isotropic) at positions " + position_list(open) +
                    "; folded by i <-> " + std::to_string(ix.n + 1) + "-i");
      append_abs_chain(out, ix.n, open, kEdgePlain);
      break;
    }
    case KFamily::D2_1:
    case KFamily::D2_2: {
      const std::vector<int> open = iota_scaled(ix.s, 2);
      std::string note = "absolute type D" + std::to_string(ix.n) +
                         "; open (isotropic) at positions " + position_list(open) +
                         "; fork vertices anisotropic";
      if (ix.family == KFamily::D2_2) note += ", swapped by the outer involution";
      out.push_back(note);
      // Flattened D_n: positions 1..n-1 in the row, node n below node n-2.
      append_branched(out, ix.n - 1, open, ix.n - 2, 'x');
      break;
    }
    case KFamily::C2: {
      const std::vector<int> open = iota_scaled(ix.s, 2);
      out.push_back("absolute type C" + std::to_string(ix.n) +
                    "; open (isotropic) at positions " + position_list(open));
      append_abs_chain(out, ix.n, open, kEdgeLong);
      break;
    }
    case KFamily::C1: {
      const std::vector<int> open = iota_scaled(ix.n, 1);
      out.push_back("absolute type C" + std::to_string(ix.n) +
                    "; split: every vertex isotropic");
      append_abs_chain(out, ix.n, open, kEdgeLong);
      break;
    }
    case KFamily::IVForm: {
      const std::vector<int> open = iota_scaled(ix.s, 1);
      if (ix.n % 2 == 1) {
        const int m = (ix.n + 1) / 2;
        out.push_back("absolute type B" + std::to_string(m) +
                      "; open (isotropic) at positions " + position_list(open));
        append_abs_chain(out, m, open, kEdgeShort);
      } else {
        const int m = (ix.n + 2) / 2;
        out.push_back("absolute type D" + std::to_string(m) +
                      "; open (isotropic) at positions " + position_list(open));
        append_branched(out, m - 1, open, m - 2, 'x');
      }
      break;
    }
    case KFamily::E6_28:
      // Bourbaki layout: chain a1-a3-a4-a5-a6, a2 below a4.
      out.push_back(
          "absolute type E6; open (isotropic) at a2; folded by a1 <-> a6, "
          "a3 <-> a5");
      append_branched(out, 5, {}, 3, 'o');
      break;
    case KFamily::E7_31:
      out.push_back(
          "absolute type E7; open (isotropic) at chain positions 2 and 6, "
          "branch vertex anisotropic");
      append_branched(out, 6, {2, 6}, 4, 'x');
      break;
  }
  const KRootSystem ks = k_root_system(ix);
  out.push_back("k-root system: " + system_name(ks.bc, ks.rank) + " (k-rank " +
                std::to_string(ks.rank) + ")");
  append_restricted_chain(out, ks.rank, ks.bc, false);
  return out;
}

}  // namespace hsd
