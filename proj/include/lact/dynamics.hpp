#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lact/tree_aut.hpp"

namespace lact {

// Transport of a half-tree: the image side of the image edge.
HalfTree image_halftree(const TreeAut& g, const HalfTree& h);

// Ping-pong data for two generators: four pairwise disjoint half-trees with
// a(complement(U-)) inside U+, a^-1(complement(U+)) inside U-, and likewise
// for b with V-, V+. A valid certificate makes <a, b> free.
struct PingPongCertificate {
  TreeAut a;
  TreeAut b;
  HalfTree u_minus, u_plus, v_minus, v_plus;
};

struct PingPongOutcome {
  std::optional<PingPongCertificate> certificate;
  std::string failure;  // the violated condition, when empty()==false
  bool ok() const { return certificate.has_value(); }
};

PingPongOutcome pingpong_certify(const TreeAut& a, const TreeAut& b, const HalfTree& u_minus,
                                 const HalfTree& u_plus, const HalfTree& v_minus,
                                 const HalfTree& v_plus);

// Exhaustive check that every nontrivial reduced word in a, a^-1, b, b^-1 of
// length <= max_len moves some vertex of the ball of the given radius.
// Letters of the witness: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1.
struct NoRelationResult {
  bool ok = true;
  std::vector<int> witness_word;
};
NoRelationResult free_no_relation_check(const PingPongCertificate& cert, int max_len,
                                        int ball_radius);

// Wandering data: a half-tree omega disjoint from the four certificate
// half-trees, with a(omega) in U+, a^-1(omega) in U-, b(omega) in V+,
// b^-1(omega) in V-. Then the translates of omega under distinct reduced
// words are pairwise disjoint.
struct WanderingCertificate {
  PingPongCertificate certificate;
  HalfTree omega;
};

struct WanderingOutcome {
  std::optional<WanderingCertificate> certificate;
  std::string failure;
  bool ok() const { return certificate.has_value(); }
};

WanderingOutcome wandering_certify(const PingPongCertificate& cert, const HalfTree& omega);

// Brute verification: gamma(omega) and gamma'(omega) are disjoint for all
// distinct reduced words gamma, gamma' of length <= max_len.
bool wandering_brute_check(const PingPongCertificate& cert, const HalfTree& omega,
                           int max_len);

// Breadth-first search, in length-lex order over generator indices, for a
// word w with image_halftree(w, c) inside target for every c in cover.
// Requires that some half-tree avoids every element of cover (the cover does
// not exhaust the boundary). nullopt = bounded search miss, not a disproof.
std::optional<std::vector<int>> compress_search(const std::vector<TreeAut>& gens,
                                                const std::vector<HalfTree>& cover,
                                                const HalfTree& target, int max_len);

// Breadth-first search for a word whose isometry type is hyperbolic with
// attracting end inside cyl.
std::optional<std::vector<int>> hyperbolic_endpoint_in(const std::vector<TreeAut>& gens,
                                                       const HalfTree& cyl, int max_len);

// The identity [g,h] = [h,s]^g [g,h^s] [s,h] with [x,y] = x y x^-1 y^-1 and
// x^y = y x y^-1. Holds for every triple; a failure indicates an arithmetic
// bug, not a mathematical event.
bool check_commutator_identity(const TreeAut& g, const TreeAut& h, const TreeAut& s);

// For g, h supported in omega (fixing its complement pointwise) and
// omega disjoint from lam^n(omega): [[g, lam^n], h] = [g, h].
// Throws a precondition error when the support or disjointness hypotheses
// fail, in which case no claim is made.
bool check_wandering_commutator(const TreeAut& g, const TreeAut& h, const TreeAut& lam, int n,
                                const HalfTree& omega);

// For distinct delta elements with pairwise disjoint translates of the
// support, the conjugates of supported elements commute:
// [d1 g d1^-1, d2 h d2^-1] = 1 for all distinct d1, d2.
bool check_wreath_relations(const std::vector<TreeAut>& deltas, const TreeAut& g,
                            const TreeAut& h);

}  // namespace lact
