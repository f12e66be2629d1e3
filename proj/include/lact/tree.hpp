#pragma once

#include <string>
#include <vector>

namespace lact {

// Vertex of the d-regular edge-colored tree, identified with a reduced word
// over the colors (adjacent letters distinct; the empty word is the root).
// With that identification the tree is the Cayley graph of the rank-d free
// Coxeter group, and stepping along the edge colored `a` toggles the letter a.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> word);  // validates reducedness
  static Vertex root() { return Vertex(); }
  // Accepts the digit form "012" (colors < 10) or the comma form "0,1,2";
  // the empty string is the root.
  static Vertex parse(const std::string& text, int degree);

  int length() const { return static_cast<int>(word_.size()); }
  bool is_root() const { return word_.empty(); }
  const std::vector<int>& word() const { return word_; }
  int letter(int i) const { return word_[i]; }
  int last() const { return word_.back(); }
  Vertex prefix(int len) const;
  Vertex parent() const;  // requires non-root

  // Step along the edge colored a: drop the last letter if it equals a,
  // append a otherwise.
  Vertex neighbor(int a) const;

  std::string str() const;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  // Plain lexicographic; use length_lex_less for the canonical output order.
  friend bool operator<(const Vertex& a, const Vertex& b) { return a.word_ < b.word_; }

 private:
  std::vector<int> word_;
};

bool length_lex_less(const Vertex& a, const Vertex& b);

// Colors of the unique geodesic from v to w (the free reduction of
// rev(v) * w); its length is the tree distance.
std::vector<int> geodesic_colors(const Vertex& v, const Vertex& w);
int distance(const Vertex& v, const Vertex& w);

Vertex walk(const Vertex& v, const std::vector<int>& colors);

// All vertices at distance <= radius from center, in (length, lex) order.
std::vector<Vertex> ball(const Vertex& center, int radius, int degree);

// One side of the oriented edge (base, neighbor(base, dir)): the vertices
// whose geodesic from base starts with the edge colored dir. Equivalently the
// boundary cylinder of the ends through that edge.
struct HalfTree {
  Vertex base;
  int dir = 0;

  friend bool operator==(const HalfTree& a, const HalfTree& b) {
    return a.base == b.base && a.dir == b.dir;
  }
  friend bool operator!=(const HalfTree& a, const HalfTree& b) { return !(a == b); }

  std::string str() const;                                   // "base:dir"
  static HalfTree parse(const std::string& text, int degree);
};

bool halftree_member(const HalfTree& h, const Vertex& v);
HalfTree halftree_complement(const HalfTree& h);
// Exact subset test: h1 is contained in h2 iff neighbor(h1.base, h1.dir) lies
// in h2 and h2.base does not lie in h1.
bool halftree_subset(const HalfTree& h1, const HalfTree& h2);
bool halftree_disjoint(const HalfTree& h1, const HalfTree& h2);

// The half-tree of vertices extending the nonempty reduced word w (the
// boundary cylinder of w).
HalfTree cylinder(const Vertex& w);

// Eventually periodic end of the tree, stored in canonical form: the prefix
// is shortest possible and the period is primitive.
class RationalEnd {
 public:
  RationalEnd(std::vector<int> prefix, std::vector<int> period);

  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& period() const { return period_; }

  std::vector<int> expand(int n) const;  // first n letters of the ray from the root

  friend bool operator==(const RationalEnd& a, const RationalEnd& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
  }
  friend bool operator!=(const RationalEnd& a, const RationalEnd& b) { return !(a == b); }

 private:
  std::vector<int> prefix_;
  std::vector<int> period_;
};

// Whether the end lies in the boundary cylinder of h.
bool end_member(const HalfTree& h, const RationalEnd& e);

}  // namespace lact
