#pragma once

#include <set>
#include <string>
#include <vector>

#include "lact/local_action_pair.hpp"
#include "lact/perm.hpp"
#include "lact/perm_group.hpp"
#include "lact/tree_aut.hpp"

namespace lact::testing {

inline Perm P(const std::string& cycles, int d) { return Perm::parse_cycles(cycles, d); }

inline PermGroup G(int d, const std::vector<std::string>& cycles) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(P(c, d));
  return PermGroup(d, gens);
}

// d=3, F = <(0 1 2)>, F' = Sym(3); r = 1.
inline PairPtr pair_a3_s3() {
  return make_pair_ptr(G(3, {"(0 1 2)"}), G(3, {"(0 1)", "(0 1 2)"}));
}

// d=4, F = <(0 1)(2 3)>, F' = <(0 1),(2 3)>; r = 2, F' intransitive.
inline PairPtr pair_r2_intransitive() {
  return make_pair_ptr(G(4, {"(0 1)(2 3)"}), G(4, {"(0 1)", "(2 3)"}));
}

// d=4, F = Klein four-group (regular), F' = dihedral of order 8; r = 2,
// F' transitive.
inline PairPtr pair_r2_transitive() {
  return make_pair_ptr(G(4, {"(0 1)(2 3)", "(0 2)(1 3)"}),
                       G(4, {"(0 1)", "(2 3)", "(0 2)(1 3)"}));
}

// d=6, r = 3.
inline PairPtr pair_r3() {
  return make_pair_ptr(G(6, {"(0 1)(2 3)(4 5)"}), G(6, {"(0 1)", "(2 3)", "(4 5)"}));
}

// Brute-force closure order, independent of the stabilizer chain.
inline std::uint64_t closure_order(int d, const std::vector<Perm>& gens,
                                   std::uint64_t cap = 2000000) {
  return closure_elements(d, gens, cap).size();
}

inline TreeAut L(const PairPtr& pair, const std::string& word) {
  return TreeAut::translation(pair, Vertex::parse(word, pair->degree()));
}

}  // namespace lact::testing
