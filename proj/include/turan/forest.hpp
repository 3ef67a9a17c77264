#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

enum class TreeKind { Path, Star };

// One component of the forbidden forest.
// Path{v}: path on v >= 2 vertices.  Star{d}: star with d >= 1 leaves
// (d+1 vertices).  P3 and S2 are the same tree; it is always stored as
// Star{2}.  Likewise P2 = S1 is stored as Path{2}.
struct TreeComponent {
  TreeKind kind;
  int size;  // v for Path, d for Star

  int vertex_count() const { return kind == TreeKind::Path ? size : size + 1; }
  int edge_count() const { return vertex_count() - 1; }

  friend bool operator==(const TreeComponent&, const TreeComponent&) = default;
};

enum class ForestClass {
  LinearGeneral,  // all paths, at least one component != P3
  AllP3,          // every component is P3 = S2
  StarForest,     // all stars, not all S2
  Order4Mixed,    // a*P4 + b*S3, a >= 1, b >= 1
  Unsupported,
};

// Forbidden forest as a sorted multiset of components: paths by
// descending order first, then stars by descending leaf count.
class ForestSpec {
 public:
  explicit ForestSpec(std::vector<TreeComponent> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw DomainError("forest spec must have at least one component");
    for (auto& c : comps_) {
      if (c.kind == TreeKind::Path && c.size < 2)
        throw DomainError("path order below 2");
      if (c.kind == TreeKind::Star && c.size < 1)
        throw DomainError("star must have at least one leaf");
      // canonical tree identities: P3 = S2, S1 = P2
      if (c.kind == TreeKind::Path && c.size == 3) c = {TreeKind::Star, 2};
      if (c.kind == TreeKind::Star && c.size == 1) c = {TreeKind::Path, 2};
    }
    std::sort(comps_.begin(), comps_.end(), [](const TreeComponent& a, const TreeComponent& b) {
      if (a.kind != b.kind) return a.kind == TreeKind::Path;
      return a.size > b.size;
    });
  }

  const std::vector<TreeComponent>& components() const { return comps_; }
  int component_count() const { return static_cast<int>(comps_.size()); }

  int total_vertices() const {
    int s = 0;
    for (const auto& c : comps_) s += c.vertex_count();
    return s;
  }
  int total_edges() const { return total_vertices() - component_count(); }

  friend bool operator==(const ForestSpec&, const ForestSpec&) = default;

 private:
  std::vector<TreeComponent> comps_;
};

inline ForestClass classify(const ForestSpec& spec) {
  int paths = 0, p2 = 0, stars = 0, p4 = 0, s3 = 0, s2 = 0;
  for (const auto& c : spec.components()) {
    if (c.kind == TreeKind::Path) {
      ++paths;
      if (c.size == 4) ++p4;
      if (c.size == 2) ++p2;
    } else {
      ++stars;
      if (c.size == 3) ++s3;
      if (c.size == 2) ++s2;
    }
  }
  const int k = spec.component_count();
  if (s2 == k) return ForestClass::AllP3;
  if (paths == k) return ForestClass::LinearGeneral;    // all-P3 caught above
  if (stars + p2 == k) return ForestClass::StarForest;  // P2 doubles as S1
  if (stars == s2) return ForestClass::LinearGeneral;   // S2 doubles as P3
  if (p4 == paths && s3 == stars && paths >= 1 && stars >= 1)
    return ForestClass::Order4Mixed;
  return ForestClass::Unsupported;
}

// Star degrees d_1 >= d_2 >= ... >= d_k for a spec in a star class,
// counting each P2 component as S1.
inline std::vector<int> star_degrees(const ForestSpec& spec) {
  std::vector<int> ds;
  for (const auto& c : spec.components()) {
    if (c.kind == TreeKind::Star)
      ds.push_back(c.size);
    else if (c.size == 2)
      ds.push_back(1);
    else
      throw DomainError("star_degrees: component is neither a star nor P2");
  }
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

// Grammar: term ("+" term)*, term = [count "*"] ("P"|"S") size.
inline ForestSpec parse_forest(std::string_view text) {
  std::vector<TreeComponent> comps;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw ParseError(std::string("expected ") + what + " at position " + std::to_string(start) +
                       " in \"" + std::string(text) + "\"");
    long v = std::stol(std::string(text.substr(start, pos - start)));
    return static_cast<int>(v);
  };
  while (true) {
    skip_ws();
    std::size_t term_start = pos;
    int count = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      count = read_int("multiplicity");
      skip_ws();
      if (pos >= text.size() || text[pos] != '*')
        throw ParseError("expected '*' after multiplicity in \"" + std::string(text) + "\"");
      ++pos;
      if (count < 1) throw ParseError("multiplicity must be at least 1");
    }
    skip_ws();
    if (pos >= text.size() || (text[pos] != 'P' && text[pos] != 'S'))
      throw ParseError("expected 'P' or 'S' at position " + std::to_string(pos) + " in \"" +
                       std::string(text) + "\"");
    TreeKind kind = text[pos] == 'P' ? TreeKind::Path : TreeKind::Star;
    ++pos;
    int size = read_int("size");
    std::string term(text.substr(term_start, pos - term_start));
    if (kind == TreeKind::Path && size < 2)
      throw ParseError("path order below 2 in term \"" + term + "\"");
    if (kind == TreeKind::Star && size < 1)
      throw ParseError("star needs at least one leaf in term \"" + term + "\"");
    for (int i = 0; i < count; ++i) comps.push_back({kind, size});
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+')
      throw ParseError("expected '+' at position " + std::to_string(pos) + " in \"" +
                       std::string(text) + "\"");
    ++pos;
  }
  return ForestSpec(std::move(comps));
}

// Inverse of parse_forest on canonical specs.
inline std::string render_forest(const ForestSpec& spec) {
  std::string out;
  const auto& cs = spec.components();
  for (std::size_t i = 0; i < cs.size();) {
    std::size_t j = i;
    while (j < cs.size() && cs[j] == cs[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i) + "*";
    out += (cs[i].kind == TreeKind::Path ? 'P' : 'S');
    out += std::to_string(cs[i].size);
    i = j;
  }
  return out;
}

}  // namespace turan
