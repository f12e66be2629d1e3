#include "lact/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lact/error.hpp"

namespace lact {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     const std::vector<int>& base_prefix)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ <= 0) fail(Error::Kind::validation, "group degree must be positive");
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      fail(Error::Kind::validation, "generator degree mismatch: " + g.cycles());
  build(base_prefix);
}

void PermGroup::build(const std::vector<int>& base_prefix) {
  std::vector<int> base = base_prefix;
  for (int x = 0; x < degree_; ++x)
    if (std::find(base.begin(), base.end(), x) == base.end()) base.push_back(x);

  std::vector<Perm> strong;
  for (const Perm& g : gens_)
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);

  auto rebuild_levels = [&] {
    levels_.assign(base.size(), Level{});
    for (size_t i = 0; i < base.size(); ++i) {
      Level& lv = levels_[i];
      lv.base_point = base[i];
      for (const Perm& g : strong) {
        bool fixes_earlier = true;
        for (size_t j = 0; j < i && fixes_earlier; ++j)
          fixes_earlier = (g(base[j]) == base[j]);
        if (fixes_earlier) lv.gens.push_back(g);
      }
      lv.transversal.assign(degree_, std::nullopt);
      lv.transversal[lv.base_point] = Perm(degree_);
      bool changed = true;
      while (changed) {
        changed = false;
        for (int x = 0; x < degree_; ++x) {
          if (!lv.transversal[x]) continue;
          for (const Perm& s : lv.gens) {
            int y = s(x);
            if (!lv.transversal[y]) {
              lv.transversal[y] = s * (*lv.transversal[x]);
              changed = true;
            }
          }
        }
      }
      lv.orbit.clear();
      for (int x = 0; x < degree_; ++x)
        if (lv.transversal[x]) lv.orbit.push_back(x);
    }
  };

  rebuild_levels();
  // Close under Schreier generators until every one sifts to the identity.
  bool closed = false;
  while (!closed) {
    closed = true;
    for (size_t i = 0; i < levels_.size() && closed; ++i) {
      const Level& lv = levels_[i];
      for (int x : lv.orbit) {
        for (const Perm& s : lv.gens) {
          Perm schreier = lv.transversal[s(x)]->inverse() * s * (*lv.transversal[x]);
          auto [residue, level] = sift(schreier);
          if (!residue.is_identity()) {
            strong.push_back(residue);
            rebuild_levels();
            closed = false;
            break;
          }
          (void)level;
        }
        if (!closed) break;
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::sift(const Perm& p) const {
  Perm residue = p;
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int x = residue(lv.base_point);
    if (!lv.transversal[x]) return {residue, i};
    residue = lv.transversal[x]->inverse() * residue;
  }
  return {residue, levels_.size()};
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p);
  (void)level;
  return residue.is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    fail(Error::Kind::bound, "group order " + std::to_string(order()) +
                                 " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Perm> result{Perm(degree_)};
  for (size_t i = levels_.size(); i-- > 0;) {
    const Level& lv = levels_[i];
    if (lv.orbit.size() == 1) continue;
    std::vector<Perm> next;
    next.reserve(result.size() * lv.orbit.size());
    for (int x : lv.orbit)
      for (const Perm& e : result) next.push_back(*lv.transversal[x] * e);
    result = std::move(next);
  }
  return result;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> root(degree_);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Perm& g : gens_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> blocks;
  for (int x = 0; x < degree_; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<int>> result;
  for (auto& [lead, block] : blocks) result.push_back(std::move(block));
  return result;
}

std::vector<int> PermGroup::orbit_of(int x) const {
  for (const auto& block : orbits())
    if (std::find(block.begin(), block.end(), x) != block.end()) return block;
  fail(Error::Kind::validation, "point out of range");
}

PermGroup PermGroup::point_stabilizer(int x) const {
  if (x < 0 || x >= degree_)
    fail(Error::Kind::validation, "stabilizer point " + std::to_string(x) + " out of range");
  PermGroup rebased(degree_, gens_, std::vector<int>{x});
  std::vector<Perm> stab_gens;
  for (size_t i = 1; i < rebased.levels_.size(); ++i)
    for (const Perm& g : rebased.levels_[i].gens)
      if (g(x) == x && std::find(stab_gens.begin(), stab_gens.end(), g) == stab_gens.end())
        stab_gens.push_back(g);
  return PermGroup(degree_, std::move(stab_gens));
}

PermGroup PermGroup::point_stabilizer_closure() const {
  std::vector<Perm> gens;
  for (int x = 0; x < degree_; ++x) {
    const PermGroup stab = point_stabilizer(x);
    for (const Perm& g : stab.generators())
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  return PermGroup(degree_, std::move(gens));
}

PermGroup::Predicates PermGroup::predicates() const {
  Predicates p{};
  auto blocks = orbits();
  p.transitive = blocks.size() == 1;
  const std::uint64_t n = order();
  p.semiregular = true;
  for (const auto& block : blocks)
    if (block.size() != n) p.semiregular = false;
  p.regular = p.transitive && p.semiregular;

  p.primitive = false;
  if (p.transitive && degree_ >= 2) {
    p.primitive = true;
    for (int x = 1; x < degree_ && p.primitive; ++x) {
      // minimal block system with 0 and x in one block
      std::vector<int> root(degree_);
      std::iota(root.begin(), root.end(), 0);
      auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
      };
      std::vector<std::pair<int, int>> queue{{0, x}};
      root[find(x)] = find(0);
      while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        for (const Perm& g : gens_) {
          int u = find(g(a)), v = find(g(b));
          if (u != v) {
            root[std::max(u, v)] = std::min(u, v);
            queue.emplace_back(g(a), g(b));
          }
        }
      }
      int block_size = 0;
      for (int v = 0; v < degree_; ++v)
        if (find(v) == find(0)) ++block_size;
      if (block_size != degree_) p.primitive = false;
    }
  }
  return p;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const Perm& s : gens_)
    if (!g.contains(s)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& g) const {
  return order() == g.order() && is_subgroup_of(g);
}

bool PermGroup::is_normal_in(const PermGroup& ambient) const {
  if (!is_subgroup_of(ambient)) return false;
  for (const Perm& a : ambient.generators())
    for (const Perm& s : gens_)
      if (!contains(a * s * a.inverse())) return false;
  return true;
}

std::vector<Perm> closure_elements(int degree, const std::vector<Perm>& gens,
                                   std::uint64_t cap) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > cap)
          fail(Error::Kind::bound, "closure exceeds cap " + std::to_string(cap));
        queue.push_back(q);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  PermGroup current = PermGroup::trivial(degree);
  std::vector<Perm> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  for (const Perm& e : sorted) {
    if (!current.contains(e)) {
      gens.push_back(e);
      current = PermGroup(degree, gens);
    }
  }
  return gens;
}

OrbitQuotient quotient_on_orbits(const PermGroup& fp, const PermGroup& fp_plus) {
  if (!fp_plus.is_subgroup_of(fp))
    fail(Error::Kind::validation, "orbit quotient requires a subgroup");
  OrbitQuotient q;
  q.blocks = fp_plus.orbits();
  const int r = static_cast<int>(q.blocks.size());
  std::vector<int> block_of(fp.degree(), -1);
  for (int i = 0; i < r; ++i)
    for (int x : q.blocks[i]) block_of[x] = i;

  std::vector<Perm> induced;
  for (const Perm& g : fp.generators()) {
    std::vector<int> images(r, -1);
    for (int i = 0; i < r; ++i) {
      int target = block_of[g(q.blocks[i][0])];
      for (int x : q.blocks[i])
        if (block_of[g(x)] != target)
          fail(Error::Kind::validation,
               "generator " + g.cycles() + " does not permute the orbit blocks");
      images[i] = target;
    }
    induced.emplace_back(std::move(images));
  }
  q.action = PermGroup(std::max(r, 1), std::move(induced));
  q.index = fp.order() / fp_plus.order();
  q.faithful = (q.action.order() == q.index);
  return q;
}

}  // namespace lact
