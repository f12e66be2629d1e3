#include "lact/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lact/error.hpp"

namespace lact {

Vertex::Vertex(std::vector<int> word) : word_(std::move(word)) {
  for (size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] < 0) fail(Error::Kind::validation, "negative color in vertex word");
    if (i + 1 < word_.size() && word_[i] == word_[i + 1])
      fail(Error::Kind::validation, "vertex word not reduced at position " + std::to_string(i));
  }
}

Vertex Vertex::parse(const std::string& text, int degree) {
  std::vector<int> word;
  if (text.empty()) return Vertex();
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (token.empty()) fail(Error::Kind::parse, "empty color in vertex \"" + text + "\"");
      for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          fail(Error::Kind::parse, "bad color \"" + token + "\" in vertex \"" + text + "\"");
      word.push_back(std::stoi(token));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(Error::Kind::parse, std::string("bad character '") + c + "' in vertex \"" + text +
                                     "\"");
      word.push_back(c - '0');
    }
  }
  for (int a : word)
    if (a >= degree)
      fail(Error::Kind::parse,
           "color " + std::to_string(a) + " exceeds degree in vertex \"" + text + "\"");
  return Vertex(std::move(word));
}

Vertex Vertex::prefix(int len) const {
  return Vertex(std::vector<int>(word_.begin(), word_.begin() + len));
}

Vertex Vertex::parent() const {
  if (is_root()) fail(Error::Kind::precondition, "the root has no parent");
  return prefix(length() - 1);
}

Vertex Vertex::neighbor(int a) const {
  if (a < 0) fail(Error::Kind::validation, "negative color");
  std::vector<int> w = word_;
  if (!w.empty() && w.back() == a)
    w.pop_back();
  else
    w.push_back(a);
  return Vertex(std::move(w));
}

std::string Vertex::str() const {
  bool digits = true;
  for (int a : word_)
    if (a > 9) digits = false;
  std::ostringstream out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (!digits && i) out << ',';
    out << word_[i];
  }
  return out.str();
}

bool length_lex_less(const Vertex& a, const Vertex& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

std::vector<int> geodesic_colors(const Vertex& v, const Vertex& w) {
  // rev(v) * w reduces exactly at the junction: the shared prefix cancels.
  size_t common = 0;
  while (common < v.word().size() && common < w.word().size() &&
         v.word()[common] == w.word()[common])
    ++common;
  std::vector<int> colors;
  for (size_t i = v.word().size(); i-- > common;) colors.push_back(v.word()[i]);
  for (size_t i = common; i < w.word().size(); ++i) colors.push_back(w.word()[i]);
  return colors;
}

int distance(const Vertex& v, const Vertex& w) {
  return static_cast<int>(geodesic_colors(v, w).size());
}

Vertex walk(const Vertex& v, const std::vector<int>& colors) {
  Vertex cur = v;
  for (int a : colors) cur = cur.neighbor(a);
  return cur;
}

std::vector<Vertex> ball(const Vertex& center, int radius, int degree) {
  if (radius < 0) fail(Error::Kind::precondition, "negative radius");
  std::vector<Vertex> result{center};
  std::vector<std::pair<Vertex, int>> frontier{{center, -1}};  // vertex, inbound color
  for (int step = 0; step < radius; ++step) {
    std::vector<std::pair<Vertex, int>> next;
    for (const auto& [v, inbound] : frontier)
      for (int a = 0; a < degree; ++a) {
        if (a == inbound) continue;
        Vertex u = v.neighbor(a);
        // the inbound color of u is the color of the edge just crossed
        next.emplace_back(std::move(u), a);
      }
    for (const auto& [v, inbound] : next) result.push_back(v);
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(), length_lex_less);
  return result;
}

std::string HalfTree::str() const { return base.str() + ":" + std::to_string(dir); }

HalfTree HalfTree::parse(const std::string& text, int degree) {
  auto pos = text.rfind(':');
  if (pos == std::string::npos)
    fail(Error::Kind::parse, "half-tree \"" + text + "\" must have the form base:dir");
  HalfTree h;
  h.base = Vertex::parse(text.substr(0, pos), degree);
  const std::string dir = text.substr(pos + 1);
  if (dir.empty()) fail(Error::Kind::parse, "missing direction in half-tree \"" + text + "\"");
  for (char c : dir)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(Error::Kind::parse, "bad direction in half-tree \"" + text + "\"");
  h.dir = std::stoi(dir);
  if (h.dir >= degree)
    fail(Error::Kind::parse, "direction exceeds degree in half-tree \"" + text + "\"");
  return h;
}

bool halftree_member(const HalfTree& h, const Vertex& v) {
  auto colors = geodesic_colors(h.base, v);
  return !colors.empty() && colors.front() == h.dir;
}

HalfTree halftree_complement(const HalfTree& h) {
  return HalfTree{h.base.neighbor(h.dir), h.dir};
}

bool halftree_subset(const HalfTree& h1, const HalfTree& h2) {
  return halftree_member(h2, h1.base.neighbor(h1.dir)) && !halftree_member(h1, h2.base);
}

bool halftree_disjoint(const HalfTree& h1, const HalfTree& h2) {
  return halftree_subset(h1, halftree_complement(h2));
}

HalfTree cylinder(const Vertex& w) {
  if (w.is_root()) fail(Error::Kind::precondition, "cylinder requires a nonempty word");
  return HalfTree{w.parent(), w.last()};
}

RationalEnd::RationalEnd(std::vector<int> prefix, std::vector<int> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) fail(Error::Kind::validation, "end period must be nonempty");
  auto check_reduced = [&](const std::vector<int>& w, const char* what) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == w[i + 1]) fail(Error::Kind::validation, std::string(what) + " not reduced");
  };
  check_reduced(prefix_, "end prefix");
  check_reduced(period_, "end period");
  if (!prefix_.empty() && prefix_.back() == period_.front())
    fail(Error::Kind::validation, "end not reduced at the prefix/period junction");
  if (period_.back() == period_.front())
    fail(Error::Kind::validation, "end period not reduced at its wrap-around");

  // primitive root of the period
  for (size_t len = 1; len < period_.size(); ++len) {
    if (period_.size() % len) continue;
    bool repeats = true;
    for (size_t i = len; i < period_.size() && repeats; ++i)
      repeats = (period_[i] == period_[i % len]);
    if (repeats) {
      period_.resize(len);
      break;
    }
  }
  // shortest prefix: fold prefix letters that already continue the period
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    prefix_.pop_back();
  }
}

std::vector<int> RationalEnd::expand(int n) const {
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < static_cast<int>(prefix_.size()))
      out.push_back(prefix_[i]);
    else
      out.push_back(period_[(i - prefix_.size()) % period_.size()]);
  }
  return out;
}

bool end_member(const HalfTree& h, const RationalEnd& e) {
  // Beyond the branch point the ray stays on one side of the edge; this depth
  // is past every branch point.
  int n = h.base.length() + static_cast<int>(e.prefix().size() + e.period().size()) + 2;
  return halftree_member(h, Vertex(e.expand(n)));
}

}  // namespace lact
