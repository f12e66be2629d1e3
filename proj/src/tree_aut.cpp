#include "lact/tree_aut.hpp"

#include <algorithm>
#include <cassert>

#include "lact/error.hpp"
#include "lact/rng.hpp"

namespace lact {

TreeAut::TreeAut(PairPtr pair, Vertex root_image, int radius, Portrait portrait)
    : pair_(std::move(pair)),
      root_image_(std::move(root_image)),
      radius_(radius),
      portrait_(std::move(portrait)) {
  if (!pair_) fail(Error::Kind::validation, "automorphism requires a local action pair");
  if (!pair_->f_semiregular())
    fail(Error::Kind::validation,
         "the tree engine requires a semi-regular F (unique tails)");
  validate();
  canonicalize();
}

TreeAut::TreeAut(unchecked_tag, PairPtr pair, Vertex root_image, int radius,
                 Portrait portrait)
    : pair_(std::move(pair)),
      root_image_(std::move(root_image)),
      radius_(radius),
      portrait_(std::move(portrait)) {
  validate();
  canonicalize();
}

void TreeAut::validate() const {
  const int d = pair_->degree();
  if (radius_ < 0) fail(Error::Kind::validation, "negative portrait radius");
  auto expected = ball(Vertex::root(), radius_, d);
  if (portrait_.size() != expected.size())
    fail(Error::Kind::validation, "portrait must cover the ball of its radius exactly");
  for (const Vertex& v : expected) {
    auto it = portrait_.find(v);
    if (it == portrait_.end())
      fail(Error::Kind::validation, "portrait missing vertex \"" + v.str() + "\"");
    const Perm& sigma = it->second;
    if (sigma.degree() != d)
      fail(Error::Kind::validation, "portrait value degree mismatch at \"" + v.str() + "\"");
    if (!pair_->f_prime().contains(sigma))
      fail(Error::Kind::validation,
           "portrait value " + sigma.cycles() + " at \"" + v.str() + "\" lies outside F'");
    if (!v.is_root()) {
      const int a = v.last();
      const Perm& parent_sigma = portrait_.at(v.parent());
      if (sigma(a) != parent_sigma(a))
        fail(Error::Kind::validation,
             "edge compatibility violated on the edge (\"" + v.parent().str() + "\", \"" +
                 v.str() + "\") of color " + std::to_string(a));
    }
    if (v.length() == radius_) {
      for (int b = 0; b < d; ++b) {
        if (!v.is_root() && b == v.last()) continue;  // inward color
        if (!pair_->has_tail(b, sigma(b)))
          fail(Error::Kind::validation,
               "no F-tail below \"" + v.str() + "\" in direction " + std::to_string(b));
      }
    }
  }
}

void TreeAut::canonicalize() {
  // A sphere layer whose values all lie in F equals the canonical F-extension
  // of the layer inside it, so it can be dropped.
  while (radius_ >= 1) {
    bool droppable = true;
    for (const auto& [v, sigma] : portrait_)
      if (v.length() == radius_ && !pair_->f().contains(sigma)) {
        droppable = false;
        break;
      }
    if (!droppable) break;
    for (auto it = portrait_.begin(); it != portrait_.end();)
      it = (it->first.length() == radius_) ? portrait_.erase(it) : std::next(it);
    --radius_;
  }
}

TreeAut TreeAut::identity(PairPtr pair) { return translation(std::move(pair), Vertex::root()); }

TreeAut TreeAut::translation(PairPtr pair, Vertex t) {
  Portrait portrait;
  int d = pair->degree();
  portrait.emplace(Vertex::root(), Perm(d));
  return TreeAut(std::move(pair), std::move(t), 0, std::move(portrait));
}

Perm TreeAut::tail_sigma(const Vertex& v) const {
  if (v.length() <= radius_) return portrait_.at(v);
  // Below the sphere the tail is constant along each branch.
  const Vertex u = v.prefix(radius_);
  const int b = v.letter(radius_);
  return pair_->unique_tail(b, portrait_.at(u)(b));
}

Vertex TreeAut::apply(const Vertex& v) const {
  Vertex image = root_image_;
  Perm deep_tail;  // constant below the sphere
  for (int i = 0; i < v.length(); ++i) {
    Perm sigma;
    if (i <= radius_) {
      sigma = portrait_.at(v.prefix(i));
    } else {
      if (i == radius_ + 1 || deep_tail.degree() == 0) {
        const int b = v.letter(radius_);
        deep_tail = pair_->unique_tail(b, portrait_.at(v.prefix(radius_))(b));
      }
      sigma = deep_tail;
    }
    image = image.neighbor(sigma(v.letter(i)));
  }
  return image;
}

Vertex TreeAut::apply_inverse(const Vertex& v) const {
  // Solve g(x) = v by transporting the geodesic from g(root) to v backwards.
  std::vector<int> colors = geodesic_colors(root_image_, v);
  Vertex x = Vertex::root();
  for (int c : colors) x = x.neighbor(tail_sigma(x).inverse()(c));
  return x;
}

TreeAut compose(const TreeAut& g, const TreeAut& h) {
  if (!g.pair_->same_pair_as(*h.pair_))
    fail(Error::Kind::precondition, "composition requires automorphisms over one pair");
  // The composite's local permutation at v is sigma(g, hv) * sigma(h, v), so
  // its exceptional set lies inside E_h union h^-1(E_g). Evaluating the
  // candidates pointwise gives the canonical radius before any ball is
  // materialized; the worst-case bound radius(g) + radius(h) + |roots| would
  // blow up under nested commutators.
  std::vector<Vertex> candidates = h.exceptional_set();
  for (const Vertex& v : g.exceptional_set()) candidates.push_back(h.apply_inverse(v));
  int n = 0;
  for (const Vertex& v : candidates)
    if (!g.pair_->f().contains(g.tail_sigma(h.apply(v)) * h.tail_sigma(v)))
      n = std::max(n, v.length());
  // Fill the ball breadth-first, carrying h's image of each vertex along so
  // nothing is re-walked from the root.
  const int d = g.pair_->degree();
  Portrait portrait;
  struct Node {
    Vertex v;
    Vertex h_image;
    int inbound;
  };
  std::vector<Node> frontier{{Vertex::root(), h.root_image_, -1}};
  portrait.emplace(Vertex::root(),
                   g.tail_sigma(h.root_image_) * h.tail_sigma(Vertex::root()));
  for (int depth = 0; depth < n; ++depth) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      const Perm sigma_h = h.tail_sigma(node.v);
      for (int a = 0; a < d; ++a) {
        if (a == node.inbound) continue;
        Vertex child = node.v.neighbor(a);
        Vertex child_image = node.h_image.neighbor(sigma_h(a));
        portrait.emplace(child, g.tail_sigma(child_image) * h.tail_sigma(child));
        next.push_back(Node{std::move(child), std::move(child_image), a});
      }
    }
    frontier = std::move(next);
  }
  return TreeAut(TreeAut::unchecked_tag{}, g.pair_, g.apply(h.root_image_), n,
                 std::move(portrait));
}

TreeAut TreeAut::inverse() const {
  // sigma(g^-1, g(v)) = sigma(g, v)^-1, so the exceptional set of the inverse
  // is exactly the g-image of the exceptional set.
  int n = 0;
  for (const Vertex& v : exceptional_set()) n = std::max(n, apply(v).length());
  Portrait portrait;
  for (const Vertex& v : ball(Vertex::root(), n, pair_->degree()))
    portrait.emplace(v, tail_sigma(apply_inverse(v)).inverse());
  return TreeAut(unchecked_tag{}, pair_, apply_inverse(Vertex::root()), n, std::move(portrait));
}

bool TreeAut::equals(const TreeAut& other) const {
  if (!pair_->same_pair_as(*other.pair_))
    fail(Error::Kind::precondition, "comparison requires automorphisms over one pair");
  if (root_image_ != other.root_image_) return false;
  // Beyond the larger ball both tails are the unique F-extensions of equal
  // sphere data.
  const int n = std::max(radius_, other.radius_);
  for (const Vertex& v : ball(Vertex::root(), n, pair_->degree()))
    if (tail_sigma(v) != other.tail_sigma(v)) return false;
  return true;
}

bool TreeAut::is_identity() const {
  if (!root_image_.is_root()) return false;
  for (const auto& [v, sigma] : portrait_)
    if (!sigma.is_identity()) return false;
  return true;
}

std::optional<std::pair<Vertex, int>> TreeAut::fixed_edge() const {
  // Displacement descent: the displacement function is convex on the tree, so
  // moving to any strictly better neighbor reaches the global minimum.
  Vertex v = Vertex::root();
  int disp = distance(v, apply(v));
  bool improved = true;
  while (improved && disp > 0) {
    improved = false;
    for (int a = 0; a < pair_->degree(); ++a) {
      Vertex u = v.neighbor(a);
      int du = distance(u, apply(u));
      if (du < disp) {
        v = std::move(u);
        disp = du;
        improved = true;
        break;
      }
    }
  }
  if (disp != 0) return std::nullopt;
  const Perm sigma = tail_sigma(v);
  for (int a = 0; a < pair_->degree(); ++a)
    if (sigma(a) == a) return std::make_pair(v, a);
  return std::nullopt;
}

IsometryClass TreeAut::classify_isometry() const {
  IsometryClass result;
  Vertex v = Vertex::root();
  int disp = distance(v, apply(v));
  bool improved = true;
  while (improved && disp > 0) {
    improved = false;
    for (int a = 0; a < pair_->degree(); ++a) {
      Vertex u = v.neighbor(a);
      int du = distance(u, apply(u));
      if (du < disp) {
        v = std::move(u);
        disp = du;
        improved = true;
        break;
      }
    }
  }
  if (disp == 0) {
    result.type = IsometryClass::Type::elliptic;
    result.vertex = v;
    return result;
  }
  if (disp == 1) {
    Vertex w = apply(v);
    if (apply(w) == v) {
      result.type = IsometryClass::Type::inversion;
      if (length_lex_less(w, v)) std::swap(v, w);
      result.vertex = v;
      result.edge_color = geodesic_colors(v, w).front();
      return result;
    }
  }
  result.type = IsometryClass::Type::hyperbolic;
  result.vertex = v;
  result.translation_length = disp;
  result.attracting = attracting_end(v);
  // g and its inverse displace every vertex equally, so v lies on the shared
  // axis and works as the starting vertex for the repelling end too.
  result.repelling = inverse().attracting_end(v);
  return result;
}

RationalEnd TreeAut::attracting_end(const Vertex& axis_vertex) const {
  // Push the axis vertex forward until one whole translation step descends
  // away from the root beyond the portrait ball; from there the local
  // permutations along the ray are one fixed element f of F, so the color
  // word repeats with period (translation length) * order(f).
  Vertex v = axis_vertex;
  const int guard_limit = 64 * (radius_ + root_image_.length() + 4);
  for (int guard = 0;; ++guard) {
    if (guard > guard_limit)
      fail(Error::Kind::bound, "attracting end did not stabilize (not hyperbolic?)");
    Vertex w = apply(v);
    bool descending = v.length() > radius_ && w.length() - v.length() == distance(v, w);
    if (descending) {
      const Perm f = tail_sigma(v);
      const int m = f.order();
      std::vector<int> period;
      Vertex cur = v;
      for (int k = 0; k < m; ++k) {
        Vertex nxt = apply(cur);
        for (int c : geodesic_colors(cur, nxt)) period.push_back(c);
        cur = std::move(nxt);
      }
      return RationalEnd(v.word(), std::move(period));
    }
    v = std::move(w);
  }
}

bool TreeAut::fixes_halftree(const HalfTree& h) const {
  const Vertex nb = h.base.neighbor(h.dir);
  // Past this distance from nb, the geodesic from nb has passed its closest
  // point to the root and every remaining vertex is a descendant beyond the
  // portrait ball, where an identity tail propagates.
  const int reach = nb.length() + radius_ + 1;
  std::vector<std::pair<Vertex, int>> frontier{{nb, h.dir}};
  if (apply(nb) != nb) return false;
  for (int depth = 1; depth <= reach; ++depth) {
    std::vector<std::pair<Vertex, int>> next;
    for (const auto& [v, inbound] : frontier)
      for (int a = 0; a < pair_->degree(); ++a) {
        if (a == inbound) continue;
        Vertex u = v.neighbor(a);
        if (apply(u) != u) return false;
        if (depth == reach && !tail_sigma(u).is_identity()) return false;
        next.emplace_back(std::move(u), a);
      }
    frontier = std::move(next);
  }
  return true;
}

std::vector<Vertex> TreeAut::exceptional_set() const {
  std::vector<Vertex> result;
  for (const auto& [v, sigma] : portrait_)
    if (!pair_->f().contains(sigma)) result.push_back(v);
  std::sort(result.begin(), result.end(), length_lex_less);
  return result;
}

std::pair<TreeAut, TreeAut> TreeAut::split_at_edge() const {
  auto edge = fixed_edge();
  if (!edge)
    fail(Error::Kind::precondition,
         "splitting requires an automorphism fixing both endpoints of an edge");
  const auto& [u, color] = *edge;
  const Vertex w = u.neighbor(color);
  const HalfTree side_w{u, color};  // contains w
  const HalfTree side_u{w, color};  // contains u

  const int n = std::max({radius_, u.length() + 1, w.length() + 1});
  // The two sides partition the vertices; the factor keeps the original local
  // permutations on its moving side and is the identity elsewhere. Across the
  // frontier edge both values fix the edge color, so compatibility holds.
  auto restrict_to = [&](const HalfTree& moving_side) {
    Portrait portrait;
    for (const Vertex& v : ball(Vertex::root(), n, pair_->degree()))
      portrait.emplace(v, halftree_member(moving_side, v) ? tail_sigma(v)
                                                          : Perm(pair_->degree()));
    Vertex root = halftree_member(moving_side, Vertex::root()) ? root_image_ : Vertex::root();
    return TreeAut(unchecked_tag{}, pair_, std::move(root), n, std::move(portrait));
  };
  return {restrict_to(side_u), restrict_to(side_w)};
}

TreeAut TreeAut::random_element(PairPtr pair, int radius, std::uint64_t seed) {
  Rng rng(seed);
  const int d = pair->degree();
  const int len = rng.below(radius + 1);
  std::vector<int> word;
  for (int i = 0; i < len; ++i) {
    int a = rng.below(word.empty() ? d : d - 1);
    if (!word.empty() && a >= word.back()) ++a;  // skip the inverse step
    word.push_back(a);
  }
  Portrait portrait;
  for (const Vertex& v : ball(Vertex::root(), radius, d)) {
    if (v.is_root()) {
      const auto& elems = pair->f_prime_elements();
      portrait.emplace(v, elems[rng.below(static_cast<int>(elems.size()))]);
    } else {
      const int a = v.last();
      const auto& candidates = pair->local_candidates(a, portrait.at(v.parent())(a));
      portrait.emplace(v, candidates[rng.below(static_cast<int>(candidates.size()))]);
    }
  }
  return TreeAut(std::move(pair), Vertex(std::move(word)), radius, std::move(portrait));
}

TreeAut TreeAut::fixator_sample(PairPtr pair, const HalfTree& h, int radius,
                                std::uint64_t seed) {
  Rng rng(seed);
  const int d = pair->degree();
  const Vertex& base = h.base;
  const Vertex nb = base.neighbor(h.dir);
  const int n = std::max(radius, base.length() + 1);

  Portrait portrait;
  // Fixed side and the frontier vertex first: identity on h, a dir-stabilizing
  // value at the base, then ancestors of the base, then everything else.
  auto in_fixed_side = [&](const Vertex& v) { return halftree_member(h, v) || v == nb; };

  auto pick = [&](const std::vector<Perm>& candidates) -> const Perm& {
    return candidates[rng.below(static_cast<int>(candidates.size()))];
  };

  // base: fix the color toward nb, respect nothing else yet
  {
    std::vector<Perm> candidates;
    for (const Perm& p : pair->f_prime_elements())
      if (p(h.dir) == h.dir) candidates.push_back(p);
    portrait.emplace(base, pick(candidates));
  }
  // ancestors of base, walking toward the root, constrained by the child edge
  // (an ancestor inside the fixed side must carry the identity, which always
  // satisfies its child constraint there)
  for (Vertex v = base; !v.is_root();) {
    const int a = v.last();
    const Perm& child_sigma = portrait.at(v);
    v = v.parent();
    if (portrait.count(v)) break;
    if (in_fixed_side(v))
      portrait.emplace(v, Perm(d));
    else
      portrait.emplace(v, pick(pair->local_candidates(a, child_sigma(a))));
  }
  // remaining ball vertices in (length, lex) order: parents come first
  for (const Vertex& v : ball(Vertex::root(), n, d)) {
    if (portrait.count(v)) continue;
    if (in_fixed_side(v)) {
      portrait.emplace(v, Perm(d));
      continue;
    }
    const int a = v.last();
    portrait.emplace(v, pick(pair->local_candidates(a, portrait.at(v.parent())(a))));
  }

  // Root image: the element fixes base, so transport the path base -> root.
  Vertex x = base;
  Vertex image = base;
  while (!x.is_root()) {
    const int c = x.last();
    image = image.neighbor(portrait.at(x)(c));
    x = x.parent();
  }
  return TreeAut(std::move(pair), std::move(image), n, std::move(portrait));
}

TreeAut commutator(const TreeAut& x, const TreeAut& y) {
  return compose(compose(x, y), compose(x.inverse(), y.inverse()));
}

TreeAut conjugate(const TreeAut& x, const TreeAut& y) {
  return compose(compose(y, x), y.inverse());
}

TreeAut power(const TreeAut& g, int n) {
  TreeAut base = n < 0 ? g.inverse() : g;
  TreeAut result = TreeAut::identity(g.pair());
  for (int i = 0; i < std::abs(n); ++i) result = compose(base, result);
  return result;
}

}  // namespace lact
