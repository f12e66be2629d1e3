#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "lact/dynamics.hpp"
#include "lact/error.hpp"
#include "lact/rng.hpp"

using namespace lact;
using namespace lact::testing;

namespace {

Vertex V(const std::string& s) { return Vertex::parse(s, 3); }
HalfTree cyl(const std::string& s) { return cylinder(V(s)); }

// the worked d = 3 certificate: squares of the two translations
struct Setup {
  PairPtr pair = pair_a3_s3();
  TreeAut a = compose(L(pair, "01"), L(pair, "01"));
  TreeAut b = compose(L(pair, "12"), L(pair, "12"));
  HalfTree um = cyl("10"), up = cyl("01"), vm = cyl("21"), vp = cyl("12");
};

PingPongCertificate certified(const Setup& s) {
  auto outcome = pingpong_certify(s.a, s.b, s.um, s.up, s.vm, s.vp);
  REQUIRE(outcome.ok());
  return *outcome.certificate;
}

}  // namespace

TEST_CASE("half-tree transport") {
  Setup s;
  TreeAut id = TreeAut::identity(s.pair);
  for (const char* base : {"", "0", "21"})
    for (int dir = 0; dir < 3; ++dir) {
      HalfTree h{V(base), dir};
      if (!h.base.is_root() && h.base.last() == dir) continue;
      CHECK(image_halftree(id, h) == h);
    }
  CHECK(image_halftree(L(s.pair, "01"), HalfTree{Vertex::root(), 0}) ==
        HalfTree{V("01"), 0});

  // equivariance on sampled vertices
  Rng rng(21);
  auto vertices = ball(Vertex::root(), 5, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TreeAut g = TreeAut::random_element(s.pair, 2, 7700 + seed);
    HalfTree h{V("10"), 2};
    HalfTree gh = image_halftree(g, h);
    for (int t = 0; t < 50; ++t) {
      const Vertex& v = vertices[rng.below(static_cast<int>(vertices.size()))];
      CHECK(halftree_member(h, v) == halftree_member(gh, g.apply(v)));
    }
  }
}

TEST_CASE("ping-pong certification") {
  Setup s;
  CHECK(pingpong_certify(s.a, s.b, s.um, s.up, s.vm, s.vp).ok());

  // identities satisfy nothing
  TreeAut id = TreeAut::identity(s.pair);
  auto bad = pingpong_certify(id, id, s.um, s.up, s.vm, s.vp);
  CHECK(!bad.ok());
  CHECK(!bad.failure.empty());

  // unsquared translations fail with a named condition
  auto unsquared =
      pingpong_certify(L(s.pair, "01"), L(s.pair, "12"), s.um, s.up, s.vm, s.vp);
  CHECK(!unsquared.ok());
  CHECK(unsquared.failure == "a(complement(U-)) inside U+");

  // overlapping half-trees are rejected before any transport
  auto overlap = pingpong_certify(s.a, s.b, s.um, cyl("100"), s.vm, s.vp);
  CHECK(!overlap.ok());
  CHECK(overlap.failure.find("not disjoint") != std::string::npos);
}

TEST_CASE("no nontrivial short relation in the certified pair") {
  Setup s;
  auto cert = certified(s);
  auto result = free_no_relation_check(cert, 6, 10);
  CHECK(result.ok);

  // degenerate pair a = b has the relation a b^-1
  PingPongCertificate degenerate{s.a, s.a, s.um, s.up, s.vm, s.vp};
  auto broken = free_no_relation_check(degenerate, 2, 6);
  CHECK(!broken.ok);
  CHECK(broken.witness_word == std::vector<int>{0, 3});  // a then b^-1

  // length 1: generators are nontrivial
  CHECK(free_no_relation_check(cert, 1, 4).ok);
}

TEST_CASE("wandering certification and brute check") {
  Setup s;
  auto cert = certified(s);
  auto wander = wandering_certify(cert, cyl("20"));
  CHECK(wander.ok());

  auto not_disjoint = wandering_certify(cert, s.up);
  CHECK(!not_disjoint.ok());
  CHECK(not_disjoint.failure.find("not disjoint") != std::string::npos);

  CHECK(wandering_brute_check(cert, cyl("20"), 4));
}

TEST_CASE("compression search") {
  Setup s;
  std::vector<TreeAut> gens{L(s.pair, "01")};
  std::vector<HalfTree> cover{halftree_complement(cyl("10"))};
  auto word = compress_search(gens, cover, cyl("01"), 8);
  REQUIRE(word.has_value());
  CHECK(*word == std::vector<int>{0, 0});

  // the found word actually compresses, re-verified independently
  TreeAut w = compose(gens[0], gens[0]);
  for (const HalfTree& c : cover) CHECK(halftree_subset(image_halftree(w, c), cyl("01")));

  // a cover already inside the target needs the empty word, given any generator
  std::vector<TreeAut> with_id{TreeAut::identity(s.pair)};
  auto trivial = compress_search(with_id, {cyl("01")}, cyl("01"), 3);
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());

  // nothing moves: bounded miss
  auto miss = compress_search(with_id, {cyl("10")}, cyl("01"), 3);
  CHECK(!miss.has_value());

  // a cover exhausting the boundary is rejected up front
  std::vector<HalfTree> everything{HalfTree{Vertex::root(), 0}, HalfTree{Vertex::root(), 1},
                                   HalfTree{Vertex::root(), 2}, HalfTree{V("0"), 0}};
  CHECK_THROWS_AS(compress_search(with_id, everything, cyl("01"), 2), Error);
}

TEST_CASE("hyperbolic endpoint search") {
  Setup s;
  std::vector<TreeAut> gens{L(s.pair, "01"), L(s.pair, "12")};
  auto w1 = hyperbolic_endpoint_in(gens, cyl("01"), 3);
  REQUIRE(w1.has_value());
  CHECK(*w1 == std::vector<int>{0});
  auto w2 = hyperbolic_endpoint_in(gens, cyl("12"), 3);
  REQUIRE(w2.has_value());
  CHECK(*w2 == std::vector<int>{1});

  // elliptic generators admit no hyperbolic word
  Portrait rot;
  rot.emplace(Vertex::root(), P("(1 2)", 3));
  std::vector<TreeAut> elliptic{TreeAut(s.pair, Vertex::root(), 0, rot)};
  CHECK(!hyperbolic_endpoint_in(elliptic, cyl("01"), 3).has_value());
}

TEST_CASE("universal commutator identity") {
  auto pair = pair_a3_s3();
  TreeAut id = TreeAut::identity(pair);
  CHECK(check_commutator_identity(id, id, id));
  CHECK(check_commutator_identity(L(pair, "0"), L(pair, "1"), L(pair, "2")));
  CHECK(check_commutator_identity(L(pair, "01"), L(pair, "12"), L(pair, "20")));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    TreeAut g = TreeAut::random_element(pair, 2, 3 * seed);
    TreeAut h = TreeAut::random_element(pair, 2, 3 * seed + 1);
    TreeAut s = TreeAut::random_element(pair, 2, 3 * seed + 2);
    CHECK(check_commutator_identity(g, h, s));
  }
}

TEST_CASE("wandering commutator identity") {
  Setup s;
  HalfTree omega = cyl("20");
  TreeAut g = TreeAut::fixator_sample(s.pair, halftree_complement(omega), 4, 11);
  TreeAut h = TreeAut::fixator_sample(s.pair, halftree_complement(omega), 4, 23);
  REQUIRE(!g.is_identity());
  REQUIRE(!h.is_identity());
  for (int n = 1; n <= 3; ++n) CHECK(check_wandering_commutator(g, h, s.a, n, omega));

  // violated support precondition is detected, not silently believed
  TreeAut bad = L(s.pair, "01");
  CHECK_THROWS_AS(check_wandering_commutator(bad, h, s.a, 1, omega), Error);
  // lam fixing omega violates the disjointness precondition
  TreeAut id = TreeAut::identity(s.pair);
  CHECK_THROWS_AS(check_wandering_commutator(g, h, id, 1, omega), Error);
}

TEST_CASE("wreath-style commutation of conjugated supports") {
  Setup s;
  HalfTree omega = cyl("20");
  TreeAut g = TreeAut::fixator_sample(s.pair, halftree_complement(omega), 4, 11);
  TreeAut h = TreeAut::fixator_sample(s.pair, halftree_complement(omega), 4, 23);
  std::vector<TreeAut> deltas{compose(s.a, s.a), compose(s.b, s.b), compose(s.a, s.b)};
  CHECK(check_wreath_relations(deltas, g, h));

  // deliberately broken: two deltas sending omega to the same place need not
  // commute after conjugation
  Portrait keep;
  keep.emplace(Vertex::root(), P("(0 1)", 3));  // fixes color 2: preserves cyl("2...")
  TreeAut rot(s.pair, Vertex::root(), 0, keep);
  std::vector<TreeAut> clashing{TreeAut::identity(s.pair), rot};
  bool commutes = check_wreath_relations(clashing, g, h);
  CHECK(!commutes);
}

TEST_CASE("certificate soundness across the searches") {
  Setup s;
  auto cert = certified(s);
  // a found compression word is re-verified exactly
  std::vector<TreeAut> gens{cert.a, cert.b};
  auto word = compress_search(gens, {halftree_complement(s.um)}, s.up, 3);
  REQUIRE(word.has_value());
  TreeAut w = TreeAut::identity(s.pair);
  for (int i : *word) w = compose(gens[i], w);
  CHECK(halftree_subset(image_halftree(w, halftree_complement(s.um)), s.up));
}
