#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lact/tree_aut.hpp"

namespace lact {

// Coloring of the colors {0,...,d-1} by the orbits of F'^+ (the subgroup of
// F' generated by its point stabilizers); orbit indices by least element.
struct OrbitColoring {
  int r = 0;
  std::vector<int> orbit_of_color;       // color -> orbit index (0-based)
  std::vector<std::vector<int>> blocks;  // orbit -> its colors, ascending
};

OrbitColoring orbit_coloring(const LocalActionPair& pair);

// Word over the orbit indices {0,...,r-1}; not necessarily reduced.
using OrbitWord = std::vector<int>;

// Cancel adjacent equal letters until none remain (confluent).
OrbitWord free_reduce(const OrbitWord& w);

// Whether w splits into consecutive palindromes of even length (dynamic
// program over prefixes). A sufficient but not necessary condition for
// free_reduce(w) to be empty; see the audit in the tests.
bool is_even_palindrome_concat(const OrbitWord& w);

// Image of a vertex under the projection onto the rank-r quotient tree:
// the free reduction of the orbit word of its letters.
OrbitWord project_vertex(const Vertex& v, const OrbitColoring& coloring);
bool same_fiber(const Vertex& v, const Vertex& w, const OrbitColoring& coloring);

// The image of sigma(g, root) in the action on the orbit set. By constancy
// this represents g's class in D = F'/F'^+.
Perm sigma_bar(const TreeAut& g, const OrbitColoring& coloring);
// Verifies the induced orbit permutation of tail_sigma(g, v) equals
// sigma_bar(g) for every v in the given ball.
bool sigma_bar_constancy_check(const TreeAut& g, const OrbitColoring& coloring, int radius);

// Length-lex-least vertex of the tree projecting onto x.
Vertex least_lift(const OrbitWord& x, const OrbitColoring& coloring);

// The induced action on the quotient tree: p(g(lift of x)); independent of
// the choice of lift.
OrbitWord phi_apply(const TreeAut& g, const OrbitWord& x, const OrbitColoring& coloring);

// Kernel membership: the induced quotient-tree action of g is trivial, i.e.
// sigma_bar(g) is the identity and g preserves the fiber of the root.
bool in_gplus(const TreeAut& g, const OrbitColoring& coloring);

// All reduced words over {0,...,r-1} of length <= radius (the quotient-tree
// ball), in (length, lex) order. For r = 1 the tree is a single edge.
std::vector<OrbitWord> quotient_ball(int r, int radius);

enum class QClass { trivial, infinite_cyclic, infinite_dihedral, virtually_free };
enum class GammaModEnv { c2, d_infinity, d_infinity_by_c2, non_amenable };

std::string to_string(QClass c);
std::string to_string(GammaModEnv c);

// The verdict table for a local action pair.
struct ClassificationReport {
  int degree = 0;
  int r = 0;
  std::uint64_t d_order = 1;        // order of the induced action of D on the orbits
  std::uint64_t index = 1;          // [F' : F'^+]
  bool d_faithful = true;           // d_order == index
  std::vector<std::string> d_generators;  // induced generators, cycle notation
  QClass q_class = QClass::trivial;
  GammaModEnv gamma_mod_env = GammaModEnv::c2;
  bool boundary_indivisible = false;  // r <= 2
  bool virtually_simple = false;      // F transitive and F'^+ = F'
  bool discrete = false;              // F semi-regular
  bool prereq_f_semiregular = false;
  bool prereq_f_neq_fprime = false;
};

ClassificationReport classify(const PermGroup& f, const PermGroup& f_prime);

}  // namespace lact
