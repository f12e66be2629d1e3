#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lact/local_action_pair.hpp"
#include "lact/tree.hpp"

namespace lact {

struct VertexHash {
  size_t operator()(const Vertex& v) const {
    size_t h = 1469598103934665603ULL;
    for (int a : v.word()) {
      h ^= static_cast<size_t>(a) + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

using Portrait = std::unordered_map<Vertex, Perm, VertexHash>;

// Isometry type of a tree automorphism: a fixed vertex, an inverted edge, or
// a translation along an axis with attracting and repelling ends.
struct IsometryClass {
  enum class Type { elliptic, inversion, hyperbolic };
  Type type = Type::elliptic;
  Vertex vertex;  // fixed vertex / inverted-edge endpoint / axis vertex
  int edge_color = -1;  // inversion: the inverted edge is (vertex, vertex.neighbor(edge_color))
  int translation_length = 0;
  std::optional<RationalEnd> attracting;
  std::optional<RationalEnd> repelling;
};

// Finitary automorphism of the colored d-regular tree: the image of the root,
// plus the local permutations sigma(g, v) on a finite ball, every value in
// F'. Outside the ball each local permutation is the unique element of F
// matching the inward edge constraint, so the whole automorphism is
// determined; this requires F semi-regular. Values are immutable and all
// operations are pure.
class TreeAut {
 public:
  // Validates edge compatibility (adjacent portrait values agree on the color
  // of the joining edge), membership of every value in F', and feasibility of
  // the F-tail beyond the sphere; then shrinks the radius to canonical form.
  TreeAut(PairPtr pair, Vertex root_image, int radius, Portrait portrait);

  static TreeAut identity(PairPtr pair);
  // Left translation by the vertex word t: v -> t * v in the free Coxeter
  // group; trivial portrait.
  static TreeAut translation(PairPtr pair, Vertex t);
  // Deterministic pseudorandom element: root image of length <= radius,
  // portrait filled outward with compatible values uniformly drawn from F'.
  static TreeAut random_element(PairPtr pair, int radius, std::uint64_t seed);
  // Deterministic pseudorandom element fixing the half-tree h pointwise (its
  // support lies on the complement side). May be the identity when the
  // constraints admit nothing else at this radius.
  static TreeAut fixator_sample(PairPtr pair, const HalfTree& h, int radius,
                                std::uint64_t seed);

  const PairPtr& pair() const { return pair_; }
  const Vertex& root_image() const { return root_image_; }
  int radius() const { return radius_; }
  const Portrait& portrait() const { return portrait_; }

  // sigma(g, v) for arbitrary v: stored inside the ball, the canonical F-tail
  // outside.
  Perm tail_sigma(const Vertex& v) const;

  Vertex apply(const Vertex& v) const;
  Vertex apply_inverse(const Vertex& v) const;

  // compose(g, h) acts as v -> g(h(v)).
  friend TreeAut compose(const TreeAut& g, const TreeAut& h);
  TreeAut inverse() const;

  bool equals(const TreeAut& other) const;
  bool is_identity() const;

  IsometryClass classify_isometry() const;

  // Exact test that g fixes the half-tree pointwise.
  bool fixes_halftree(const HalfTree& h) const;

  // Vertices whose local permutation lies outside F; empty iff g lies in the
  // universal group U(F).
  std::vector<Vertex> exceptional_set() const;
  bool in_UF() const { return exceptional_set().empty(); }

  // For g fixing both endpoints of an edge: the unique factors (g1, g2) with
  // g1 fixing the half-tree (v, a) pointwise, g2 fixing the other side, and
  // compose(g1, g2) = g. Throws a precondition error when no edge is fixed.
  std::pair<TreeAut, TreeAut> split_at_edge() const;

 private:
  struct unchecked_tag {};
  TreeAut(unchecked_tag, PairPtr pair, Vertex root_image, int radius,
          Portrait portrait);
  void validate() const;
  void canonicalize();
  // The fixed edge (v, v.neighbor(color)) of an elliptic element, if any.
  std::optional<std::pair<Vertex, int>> fixed_edge() const;
  RationalEnd attracting_end(const Vertex& axis_vertex) const;

  PairPtr pair_;
  Vertex root_image_;
  int radius_ = 0;
  Portrait portrait_;
};

// [x, y] = x y x^-1 y^-1 and x^y = y x y^-1, with composition v -> x(y(v)).
TreeAut commutator(const TreeAut& x, const TreeAut& y);
TreeAut conjugate(const TreeAut& x, const TreeAut& y);
TreeAut power(const TreeAut& g, int n);

}  // namespace lact
