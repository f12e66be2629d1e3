#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lact/perm.hpp"

namespace lact {

// Finite permutation group with a deterministic stabilizer chain.
//
// The base is a fixed ordering of the points (0, 1, ..., d-1 unless a custom
// base prefix is requested), transversals are filled in ascending point
// order, and strong generators are accumulated in discovery order, so order,
// membership and element enumeration are reproducible for a given generator
// list.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }

  // Every element, enumerated from the chain; deterministic order. Throws a
  // bound error beyond `cap` elements.
  std::vector<Perm> elements(std::uint64_t cap = 200000) const;

  // Orbit partition; blocks sorted by least element, block contents ascending.
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int x) const;

  // The full stabilizer of x (from a chain rebuilt with x first in the base),
  // not merely the generators fixing x.
  PermGroup point_stabilizer(int x) const;

  // Subgroup generated by all point stabilizers.
  PermGroup point_stabilizer_closure() const;

  struct Predicates {
    bool transitive;
    bool semiregular;  // every non-identity element is fixed-point-free
    bool regular;
    bool primitive;
  };
  Predicates predicates() const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool same_group_as(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& ambient) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;                      // strong generators fixing earlier base points
    std::vector<std::optional<Perm>> transversal;  // u with u(base_point) = x, per point x
    std::vector<int> orbit;                      // ascending
  };

  PermGroup(int degree, std::vector<Perm> generators, const std::vector<int>& base_prefix);
  void build(const std::vector<int>& base_prefix);
  // Reduces p through the chain; returns the residue and the level reached.
  std::pair<Perm, size_t> sift(const Perm& p) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Brute-force closure of a generating set under products, independent of the
// stabilizer chain. Throws a bound error if the closure exceeds `cap`.
std::vector<Perm> closure_elements(int degree, const std::vector<Perm>& gens,
                                   std::uint64_t cap = 2000000);

// A small generating set extracted greedily from an element list.
std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements);

// The action of fp on the orbit set of fp_plus (which must be a subgroup of
// fp whose orbits fp permutes, as is always the case for the subgroup
// generated by point stabilizers).
struct OrbitQuotient {
  std::vector<std::vector<int>> blocks;         // fp_plus-orbits
  PermGroup action = PermGroup::trivial(1);     // induced group on block indices
  std::uint64_t index = 1;                      // [fp : fp_plus]
  bool faithful = true;                         // action order == index
};
OrbitQuotient quotient_on_orbits(const PermGroup& fp, const PermGroup& fp_plus);

}  // namespace lact
