#include <doctest.h>

#include <cstdint>

#include "helpers.hpp"
#include "lact/error.hpp"
#include "lact/rng.hpp"
#include "lact/tree.hpp"

using namespace lact;

namespace {

Vertex V(const std::string& s, int d = 3) { return Vertex::parse(s, d); }

}  // namespace

TEST_CASE("vertex words are reduced") {
  CHECK_NOTHROW(Vertex({0, 1, 0}));
  CHECK_THROWS_AS(Vertex({0, 0}), Error);
  CHECK(Vertex::root().is_root());
  CHECK(V("0,1,2", 3) == V("012", 3));
  CHECK_THROWS_AS(Vertex::parse("03", 3), Error);
}

TEST_CASE("neighbor toggles the last letter") {
  CHECK(V("01").neighbor(1) == V("0"));
  CHECK(V("01").neighbor(2) == V("012"));
  CHECK(Vertex::root().neighbor(0) == V("0"));
  // involution
  for (const char* w : {"", "0", "01", "210"})
    for (int a = 0; a < 3; ++a) CHECK(V(w).neighbor(a).neighbor(a) == V(w));
}

TEST_CASE("geodesic colors") {
  CHECK(geodesic_colors(V("0"), V("01")) == std::vector<int>{1});
  CHECK(geodesic_colors(V("010"), V("212")) == std::vector<int>{0, 1, 0, 2, 1, 2});
  CHECK(distance(V("010"), V("212")) == 6);
  CHECK(geodesic_colors(V("01"), V("01")).empty());
  CHECK(distance(V("01"), V("01")) == 0);
}

TEST_CASE("distance is a metric on sampled triples") {
  auto vertices = ball(Vertex::root(), 6, 3);
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex& u = vertices[rng.below(static_cast<int>(vertices.size()))];
    const Vertex& v = vertices[rng.below(static_cast<int>(vertices.size()))];
    const Vertex& w = vertices[rng.below(static_cast<int>(vertices.size()))];
    CHECK(distance(u, v) == distance(v, u));
    CHECK(distance(u, w) <= distance(u, v) + distance(v, w));
    CHECK((distance(u, v) == 0) == (u == v));
    // walking the geodesic arrives
    CHECK(walk(u, geodesic_colors(u, v)) == v);
  }
}

TEST_CASE("balls") {
  auto b1 = ball(Vertex::root(), 1, 3);
  CHECK(b1 == std::vector<Vertex>{Vertex::root(), V("0"), V("1"), V("2")});
  CHECK(ball(Vertex::root(), 2, 3).size() == 10);  // 1 + 3 + 6
  CHECK(ball(Vertex::root(), 0, 3) == std::vector<Vertex>{Vertex::root()});
  // size formula 1 + d((d-1)^n - 1)/(d-2)
  CHECK(ball(Vertex::root(), 3, 4).size() == 1 + 4 * (27 - 1) / 2);
  // ordering is (length, lex)
  auto b = ball(V("01"), 2, 3);
  for (size_t i = 1; i < b.size(); ++i) CHECK(length_lex_less(b[i - 1], b[i]));
}

TEST_CASE("half-tree membership") {
  HalfTree h{Vertex::root(), 0};
  CHECK(halftree_member(h, V("01")));
  CHECK(!halftree_member(h, V("12")));
  CHECK(!halftree_member(h, Vertex::root()));
  // the complement side of (root, 0) contains the root
  CHECK(halftree_member(HalfTree{V("0"), 0}, Vertex::root()));
}

TEST_CASE("half-tree complement and subset") {
  HalfTree h{Vertex::root(), 0};
  CHECK(halftree_complement(h) == HalfTree{V("0"), 0});
  CHECK(halftree_subset(HalfTree{V("0"), 1}, h));
  CHECK(!halftree_subset(h, HalfTree{Vertex::root(), 1}));
  CHECK(halftree_disjoint(h, HalfTree{Vertex::root(), 1}));
  CHECK(cylinder(V("10")) == HalfTree{V("1"), 0});
  CHECK(HalfTree::parse("10:2", 3) == HalfTree{V("10"), 2});
  CHECK(HalfTree::parse(":1", 3) == HalfTree{Vertex::root(), 1});
  CHECK(HalfTree::parse("10:2", 3).str() == "10:2");
}

TEST_CASE("subset agrees with exhaustive membership and sides partition") {
  // all half-trees with |base| <= 4 over d = 3, compared on a ball large
  // enough to separate any two of them
  const int d = 3;
  std::vector<HalfTree> halftrees;
  for (const Vertex& v : ball(Vertex::root(), 4, d))
    for (int a = 0; a < d; ++a) halftrees.push_back(HalfTree{v, a});
  auto probe = ball(Vertex::root(), 11, d);

  std::vector<std::vector<std::uint64_t>> bits(
      halftrees.size(), std::vector<std::uint64_t>((probe.size() + 63) / 64, 0));
  for (size_t i = 0; i < halftrees.size(); ++i)
    for (size_t k = 0; k < probe.size(); ++k)
      if (halftree_member(halftrees[i], probe[k])) bits[i][k / 64] |= 1ULL << (k % 64);

  // exactly one of h, complement(h) contains each vertex
  for (size_t i = 0; i < halftrees.size(); ++i) {
    HalfTree c = halftree_complement(halftrees[i]);
    for (size_t k = 0; k < probe.size(); ++k) {
      bool in_h = (bits[i][k / 64] >> (k % 64)) & 1;
      CHECK(in_h != halftree_member(c, probe[k]));
    }
  }

  long long checked = 0;
  for (size_t i = 0; i < halftrees.size(); ++i)
    for (size_t j = 0; j < halftrees.size(); ++j) {
      bool brute = true;
      for (size_t w = 0; w < bits[i].size(); ++w)
        if (bits[i][w] & ~bits[j][w]) {
          brute = false;
          break;
        }
      if (halftree_subset(halftrees[i], halftrees[j]) != brute) {
        CHECK_MESSAGE(false, "subset mismatch for ", halftrees[i].str(), " vs ",
                      halftrees[j].str());
      }
      ++checked;
    }
  CHECK(checked == static_cast<long long>(halftrees.size() * halftrees.size()));
}

TEST_CASE("rational ends canonicalize") {
  RationalEnd e({0, 1}, {0, 1});        // 010101... = (01)^inf
  RationalEnd f({}, {0, 1});
  CHECK(e == f);
  CHECK(e.prefix().empty());
  CHECK(e.period() == std::vector<int>{0, 1});
  // primitive root
  CHECK(RationalEnd({}, {0, 1, 0, 1}) == f);
  // distinct ends stay distinct
  CHECK(RationalEnd({}, {0, 2}) != f);
  CHECK(RationalEnd({2}, {0, 1}) != f);

  CHECK_THROWS_AS(RationalEnd({}, {0, 0}), Error);   // period not reduced
  CHECK_THROWS_AS(RationalEnd({}, {0}), Error);      // wrap-around
  CHECK_THROWS_AS(RationalEnd({0}, {0, 1}), Error);  // junction
  CHECK(RationalEnd({}, {0, 1}).expand(5) == std::vector<int>{0, 1, 0, 1, 0});
}

TEST_CASE("end membership in cylinders") {
  RationalEnd e({}, {0, 1});  // (01)^inf
  CHECK(end_member(cylinder(V("01")), e));
  CHECK(end_member(cylinder(V("0")), e));
  CHECK(!end_member(cylinder(V("1")), e));
  CHECK(!end_member(cylinder(V("02")), e));
  RationalEnd deep({2, 0}, {1, 2});
  CHECK(end_member(cylinder(V("20")), deep));
  CHECK(!end_member(cylinder(V("21")), deep));
}
