#include "lact/ursfin.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lact/error.hpp"

namespace lact {

namespace {

using ElementSet = std::vector<Perm>;  // sorted

ElementSet sorted_elements(const PermGroup& g) {
  ElementSet e = g.elements();
  std::sort(e.begin(), e.end());
  return e;
}

ElementSet close_under_products(int degree, ElementSet seed) {
  std::set<Perm> seen(seed.begin(), seed.end());
  seen.insert(Perm(degree));
  std::vector<Perm> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& q : seed) {
      Perm r = q * p;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

PermGroup group_from_elements(int degree, const ElementSet& elements) {
  return PermGroup(degree, greedy_generators(degree, elements));
}

ElementSet conjugate_set(const ElementSet& s, const Perm& by) {
  ElementSet out;
  out.reserve(s.size());
  const Perm inv = by.inverse();
  for (const Perm& p : s) out.push_back(by * p * inv);
  std::sort(out.begin(), out.end());
  return out;
}

bool set_contains_subset(const ElementSet& sub, const ElementSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::uint64_t cap) {
  if (g.order() > cap)
    fail(Error::Kind::bound, "group order " + std::to_string(g.order()) +
                                 " exceeds the subgroup enumeration bound " +
                                 std::to_string(cap));
  const int d = g.degree();
  const ElementSet all = sorted_elements(g);
  std::set<ElementSet> known;
  known.insert(ElementSet{Perm(d)});
  std::vector<ElementSet> queue(known.begin(), known.end());
  while (!queue.empty()) {
    ElementSet h = queue.back();
    queue.pop_back();
    for (const Perm& x : all) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      ElementSet seed = h;
      seed.push_back(x);
      ElementSet k = close_under_products(d, std::move(seed));
      if (known.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<ElementSet> ordered(known.begin(), known.end());
  std::sort(ordered.begin(), ordered.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<PermGroup> result;
  result.reserve(ordered.size());
  for (const ElementSet& e : ordered) result.push_back(group_from_elements(d, e));
  return result;
}

std::vector<SubgroupClass> conjugacy_classes(const PermGroup& ambient,
                                             const std::vector<PermGroup>& subgroups) {
  const int d = ambient.degree();
  std::vector<ElementSet> sets;
  sets.reserve(subgroups.size());
  for (const PermGroup& h : subgroups) sets.push_back(sorted_elements(h));

  std::vector<char> assigned(sets.size(), 0);
  std::vector<SubgroupClass> classes;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (assigned[i]) continue;
    // orbit of sets[i] under conjugation by ambient generators
    std::set<ElementSet> orbit{sets[i]};
    std::vector<ElementSet> queue{sets[i]};
    while (!queue.empty()) {
      ElementSet s = queue.back();
      queue.pop_back();
      for (const Perm& a : ambient.generators()) {
        ElementSet t = conjugate_set(s, a);
        if (orbit.insert(t).second) queue.push_back(std::move(t));
      }
    }
    SubgroupClass cls;
    for (const ElementSet& s : orbit) {
      cls.members.push_back(group_from_elements(d, s));
      for (size_t j = 0; j < sets.size(); ++j)
        if (!assigned[j] && sets[j] == s) assigned[j] = 1;
    }
    std::sort(cls.members.begin(), cls.members.end(),
              [](const PermGroup& a, const PermGroup& b) {
                return sorted_elements(a) < sorted_elements(b);
              });
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<SubgroupClass> urs_classes(const PermGroup& g, std::uint64_t cap) {
  return conjugacy_classes(g, all_subgroups(g, cap));
}

bool class_leq(const SubgroupClass& a, const SubgroupClass& b) {
  std::vector<ElementSet> as, bs;
  for (const PermGroup& h : a.members) as.push_back(sorted_elements(h));
  for (const PermGroup& k : b.members) bs.push_back(sorted_elements(k));

  bool exists = false;
  for (const ElementSet& h : as)
    for (const ElementSet& k : bs)
      if (set_contains_subset(h, k)) exists = true;

  // equivalent formulation: both directions of covering
  bool covered = true;
  for (const ElementSet& h : as) {
    bool found = false;
    for (const ElementSet& k : bs)
      if (set_contains_subset(h, k)) found = true;
    covered = covered && found;
  }
  for (const ElementSet& k : bs) {
    bool found = false;
    for (const ElementSet& h : as)
      if (set_contains_subset(h, k)) found = true;
    covered = covered && found;
  }
  if (exists != covered)
    fail(Error::Kind::validation,
         "the two formulations of the class order disagree (conjugation closure broken?)");
  return exists;
}

PermGroup class_envelope(const PermGroup& ambient, const SubgroupClass& c) {
  ElementSet seed;
  for (const PermGroup& h : c.members)
    for (const Perm& p : h.elements()) seed.push_back(p);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  PermGroup env = group_from_elements(ambient.degree(), close_under_products(ambient.degree(), seed));
  if (!env.is_normal_in(ambient))
    fail(Error::Kind::validation, "class envelope is not normal in the ambient group");
  return env;
}

std::vector<SubgroupClass> stabilizer_classes(
    const PermGroup& g, const std::vector<std::vector<int>>& action_generator_images) {
  if (action_generator_images.size() != g.generators().size())
    fail(Error::Kind::validation, "one action image per generator required");
  size_t m = action_generator_images.empty() ? 1 : action_generator_images.front().size();
  std::vector<Perm> action_gens;
  for (const auto& images : action_generator_images) {
    if (images.size() != m)
      fail(Error::Kind::validation, "action images must share one domain");
    action_gens.emplace_back(images);  // validates bijectivity
  }

  // Close (group element, action image) pairs under generator products; a
  // group element reached with two distinct action images means the images
  // do not define an action.
  std::map<Perm, Perm> action_of{{Perm(g.degree()), Perm(static_cast<int>(m))}};
  std::vector<Perm> queue{Perm(g.degree())};
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    const Perm ap = action_of.at(p);
    for (size_t i = 0; i < action_gens.size(); ++i) {
      Perm q = g.generators()[i] * p;
      Perm aq = action_gens[i] * ap;
      auto [it, inserted] = action_of.emplace(q, aq);
      if (inserted)
        queue.push_back(std::move(q));
      else if (it->second != aq)
        fail(Error::Kind::validation,
             "generator images do not define an action (inconsistent at " + q.cycles() + ")");
    }
  }
  if (action_of.size() != g.order())
    fail(Error::Kind::validation, "action closure does not cover the group");

  std::vector<PermGroup> stabilizers;
  for (size_t x = 0; x < m; ++x) {
    ElementSet fix;
    for (const auto& [p, ap] : action_of)
      if (ap(static_cast<int>(x)) == static_cast<int>(x)) fix.push_back(p);
    std::sort(fix.begin(), fix.end());
    stabilizers.push_back(group_from_elements(g.degree(), fix));
  }
  // deduplicate identical stabilizers before classifying
  std::vector<PermGroup> unique_stabs;
  std::set<ElementSet> seen;
  for (const PermGroup& s : stabilizers)
    if (seen.insert(sorted_elements(s)).second) unique_stabs.push_back(s);
  return conjugacy_classes(g, unique_stabs);
}

}  // namespace lact
