#include "lact/dynamics.hpp"

#include <algorithm>
#include <functional>

#include "lact/error.hpp"

namespace lact {

HalfTree image_halftree(const TreeAut& g, const HalfTree& h) {
  return HalfTree{g.apply(h.base), g.tail_sigma(h.base)(h.dir)};
}

namespace {

bool image_inside(const TreeAut& g, const HalfTree& from, const HalfTree& target) {
  return halftree_subset(image_halftree(g, from), target);
}

}  // namespace

PingPongOutcome pingpong_certify(const TreeAut& a, const TreeAut& b, const HalfTree& u_minus,
                                 const HalfTree& u_plus, const HalfTree& v_minus,
                                 const HalfTree& v_plus) {
  PingPongOutcome out;
  const HalfTree sets[4] = {u_minus, u_plus, v_minus, v_plus};
  const char* names[4] = {"U-", "U+", "V-", "V+"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!halftree_disjoint(sets[i], sets[j])) {
        out.failure = std::string(names[i]) + " and " + names[j] + " are not disjoint";
        return out;
      }
  struct Condition {
    const TreeAut* g;
    HalfTree from;
    HalfTree into;
    const char* name;
  };
  const TreeAut a_inv = a.inverse();
  const TreeAut b_inv = b.inverse();
  const Condition conditions[4] = {
      {&a, halftree_complement(u_minus), u_plus, "a(complement(U-)) inside U+"},
      {&a_inv, halftree_complement(u_plus), u_minus, "a^-1(complement(U+)) inside U-"},
      {&b, halftree_complement(v_minus), v_plus, "b(complement(V-)) inside V+"},
      {&b_inv, halftree_complement(v_plus), v_minus, "b^-1(complement(V+)) inside V-"},
  };
  for (const Condition& c : conditions)
    if (!image_inside(*c.g, c.from, c.into)) {
      out.failure = c.name;
      return out;
    }
  out.certificate = PingPongCertificate{a, b, u_minus, u_plus, v_minus, v_plus};
  return out;
}

namespace {

// Reduced words over the letters a, a^-1, b, b^-1 (indices 0..3); letter i
// may not follow its inverse i^1.
void reduced_words(int max_len, const std::vector<TreeAut>& letters,
                   const std::vector<int>& word, const TreeAut& value,
                   const std::function<bool(const std::vector<int>&, const TreeAut&)>& visit) {
  if (!word.empty() && !visit(word, value)) return;
  if (static_cast<int>(word.size()) == max_len) return;
  for (int i = 0; i < 4; ++i) {
    if (!word.empty() && (word.back() ^ 1) == i) continue;
    std::vector<int> next = word;
    next.push_back(i);
    reduced_words(max_len, letters, next, compose(value, letters[i]), visit);
  }
}

}  // namespace

NoRelationResult free_no_relation_check(const PingPongCertificate& cert, int max_len,
                                        int ball_radius) {
  NoRelationResult result;
  const std::vector<TreeAut> letters = {cert.a, cert.a.inverse(), cert.b, cert.b.inverse()};
  const auto probe = ball(Vertex::root(), ball_radius, cert.a.pair()->degree());
  auto visit = [&](const std::vector<int>& word, const TreeAut& value) {
    bool moves = false;
    for (const Vertex& v : probe)
      if (value.apply(v) != v) {
        moves = true;
        break;
      }
    if (!moves) {
      result.ok = false;
      result.witness_word = word;
    }
    return result.ok;
  };
  reduced_words(max_len, letters, {}, TreeAut::identity(cert.a.pair()), visit);
  return result;
}

WanderingOutcome wandering_certify(const PingPongCertificate& cert, const HalfTree& omega) {
  WanderingOutcome out;
  const HalfTree sets[4] = {cert.u_minus, cert.u_plus, cert.v_minus, cert.v_plus};
  const char* names[4] = {"U-", "U+", "V-", "V+"};
  for (int i = 0; i < 4; ++i)
    if (!halftree_disjoint(omega, sets[i])) {
      out.failure = std::string("omega is not disjoint from ") + names[i];
      return out;
    }
  struct Condition {
    TreeAut g;
    HalfTree into;
    const char* name;
  };
  const Condition conditions[4] = {
      {cert.a, cert.u_plus, "a(omega) inside U+"},
      {cert.a.inverse(), cert.u_minus, "a^-1(omega) inside U-"},
      {cert.b, cert.v_plus, "b(omega) inside V+"},
      {cert.b.inverse(), cert.v_minus, "b^-1(omega) inside V-"},
  };
  for (const Condition& c : conditions)
    if (!halftree_subset(image_halftree(c.g, omega), c.into)) {
      out.failure = c.name;
      return out;
    }
  out.certificate = WanderingCertificate{cert, omega};
  return out;
}

bool wandering_brute_check(const PingPongCertificate& cert, const HalfTree& omega,
                           int max_len) {
  const std::vector<TreeAut> letters = {cert.a, cert.a.inverse(), cert.b, cert.b.inverse()};
  std::vector<HalfTree> images{omega};  // translate of omega per reduced word (incl. empty)
  std::vector<std::pair<std::vector<int>, TreeAut>> level{
      {{}, TreeAut::identity(cert.a.pair())}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, TreeAut>> next;
    for (const auto& [word, value] : level)
      for (int i = 0; i < 4; ++i) {
        if (!word.empty() && (word.back() ^ 1) == i) continue;
        std::vector<int> w = word;
        w.push_back(i);
        TreeAut g = compose(value, letters[i]);
        images.push_back(image_halftree(g, omega));
        next.emplace_back(std::move(w), std::move(g));
      }
    level = std::move(next);
  }
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (!halftree_disjoint(images[i], images[j])) return false;
  return true;
}

std::optional<std::vector<int>> compress_search(const std::vector<TreeAut>& gens,
                                                const std::vector<HalfTree>& cover,
                                                const HalfTree& target, int max_len) {
  if (gens.empty()) fail(Error::Kind::precondition, "compress search requires generators");
  const int d = gens.front().pair()->degree();
  // The cover must miss some half-tree; otherwise nothing can be compressed.
  {
    int depth_bound = 1;
    for (const HalfTree& c : cover) depth_bound = std::max(depth_bound, c.base.length() + 2);
    bool found_gap = false;
    for (const Vertex& v : ball(Vertex::root(), depth_bound, d)) {
      for (int a = 0; a < d && !found_gap; ++a) {
        HalfTree candidate{v, a};
        bool disjoint_from_all = true;
        for (const HalfTree& c : cover)
          if (!halftree_disjoint(candidate, c)) {
            disjoint_from_all = false;
            break;
          }
        found_gap = disjoint_from_all;
      }
      if (found_gap) break;
    }
    if (!found_gap)
      fail(Error::Kind::precondition,
           "the cover leaves no half-tree free; nothing to compress into");
  }

  auto satisfied = [&](const TreeAut& g) {
    for (const HalfTree& c : cover)
      if (!halftree_subset(image_halftree(g, c), target)) return false;
    return true;
  };
  std::vector<std::pair<std::vector<int>, TreeAut>> level{
      {{}, TreeAut::identity(gens.front().pair())}};
  if (satisfied(level.front().second)) return level.front().first;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, TreeAut>> next;
    for (const auto& [word, value] : level)
      for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<int> w = word;
        w.push_back(static_cast<int>(i));
        TreeAut g = compose(gens[i], value);  // letters act left-to-right along the word
        if (satisfied(g)) return w;
        next.emplace_back(std::move(w), std::move(g));
      }
    level = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::vector<int>> hyperbolic_endpoint_in(const std::vector<TreeAut>& gens,
                                                       const HalfTree& cyl, int max_len) {
  if (gens.empty()) return std::nullopt;
  std::vector<std::pair<std::vector<int>, TreeAut>> level{
      {{}, TreeAut::identity(gens.front().pair())}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, TreeAut>> next;
    for (const auto& [word, value] : level)
      for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<int> w = word;
        w.push_back(static_cast<int>(i));
        TreeAut g = compose(gens[i], value);
        IsometryClass cls = g.classify_isometry();
        if (cls.type == IsometryClass::Type::hyperbolic && end_member(cyl, *cls.attracting))
          return w;
        next.emplace_back(std::move(w), std::move(g));
      }
    level = std::move(next);
  }
  return std::nullopt;
}

bool check_commutator_identity(const TreeAut& g, const TreeAut& h, const TreeAut& s) {
  TreeAut lhs = commutator(g, h);
  TreeAut rhs = compose(compose(conjugate(commutator(h, s), g), commutator(g, conjugate(h, s))),
                        commutator(s, h));
  return lhs.equals(rhs);
}

bool check_wandering_commutator(const TreeAut& g, const TreeAut& h, const TreeAut& lam, int n,
                                const HalfTree& omega) {
  const HalfTree complement = halftree_complement(omega);
  if (!g.fixes_halftree(complement))
    fail(Error::Kind::precondition, "g is not supported in omega");
  if (!h.fixes_halftree(complement))
    fail(Error::Kind::precondition, "h is not supported in omega");
  TreeAut lam_n = power(lam, n);
  if (!halftree_disjoint(image_halftree(lam_n, omega), omega))
    fail(Error::Kind::precondition, "omega meets its translate under lam^n");
  return commutator(commutator(g, lam_n), h).equals(commutator(g, h));
}

bool check_wreath_relations(const std::vector<TreeAut>& deltas, const TreeAut& g,
                            const TreeAut& h) {
  for (size_t i = 0; i < deltas.size(); ++i)
    for (size_t j = 0; j < deltas.size(); ++j) {
      if (i == j) continue;
      TreeAut cg = conjugate(g, deltas[i]);
      TreeAut ch = conjugate(h, deltas[j]);
      if (!compose(cg, ch).equals(compose(ch, cg))) return false;
    }
  return true;
}

}  // namespace lact
