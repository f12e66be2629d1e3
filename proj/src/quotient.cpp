#include "lact/quotient.hpp"

#include <algorithm>

#include "lact/error.hpp"

namespace lact {

OrbitColoring orbit_coloring(const LocalActionPair& pair) {
  OrbitColoring c;
  c.blocks = pair.f_prime().point_stabilizer_closure().orbits();
  c.r = static_cast<int>(c.blocks.size());
  c.orbit_of_color.assign(pair.degree(), -1);
  for (int i = 0; i < c.r; ++i)
    for (int x : c.blocks[i]) c.orbit_of_color[x] = i;
  return c;
}

OrbitWord free_reduce(const OrbitWord& w) {
  OrbitWord stack;
  for (int letter : w) {
    if (!stack.empty() && stack.back() == letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return stack;
}

bool is_even_palindrome_concat(const OrbitWord& w) {
  const int n = static_cast<int>(w.size());
  if (n % 2) return false;
  // pal[i][j]: w[i..j] is a palindrome
  std::vector<std::vector<char>> pal(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) pal[i][i] = 1;
  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len - 1 < n; ++i) {
      int j = i + len - 1;
      pal[i][j] = (w[i] == w[j]) && (len == 2 || pal[i + 1][j - 1]);
    }
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (int j = 2; j <= n; j += 2)
    for (int k = j - 2; k >= 0 && !reach[j]; k -= 2)
      if (reach[k] && pal[k][j - 1]) reach[j] = 1;
  return reach[n];
}

OrbitWord project_vertex(const Vertex& v, const OrbitColoring& coloring) {
  OrbitWord w;
  w.reserve(v.length());
  for (int a : v.word()) w.push_back(coloring.orbit_of_color[a]);
  return free_reduce(w);
}

bool same_fiber(const Vertex& v, const Vertex& w, const OrbitColoring& coloring) {
  OrbitWord geo;
  for (int a : geodesic_colors(v, w)) geo.push_back(coloring.orbit_of_color[a]);
  return free_reduce(geo).empty();
}

namespace {

Perm orbit_perm(const Perm& sigma, const OrbitColoring& coloring) {
  std::vector<int> images(coloring.r);
  for (int i = 0; i < coloring.r; ++i)
    images[i] = coloring.orbit_of_color[sigma(coloring.blocks[i][0])];
  return Perm(std::move(images));
}

}  // namespace

Perm sigma_bar(const TreeAut& g, const OrbitColoring& coloring) {
  return orbit_perm(g.tail_sigma(Vertex::root()), coloring);
}

bool sigma_bar_constancy_check(const TreeAut& g, const OrbitColoring& coloring, int radius) {
  const Perm expected = sigma_bar(g, coloring);
  for (const Vertex& v : ball(Vertex::root(), radius, g.pair()->degree()))
    if (orbit_perm(g.tail_sigma(v), coloring) != expected) return false;
  return true;
}

Vertex least_lift(const OrbitWord& x, const OrbitColoring& coloring) {
  std::vector<int> word;
  word.reserve(x.size());
  for (int i : x) {
    if (i < 0 || i >= coloring.r)
      fail(Error::Kind::validation, "orbit letter out of range");
    // adjacent letters of a reduced orbit word lie in different fibers, so
    // the per-letter least color is already reduced
    word.push_back(coloring.blocks[i][0]);
  }
  return Vertex(std::move(word));
}

OrbitWord phi_apply(const TreeAut& g, const OrbitWord& x, const OrbitColoring& coloring) {
  return project_vertex(g.apply(least_lift(x, coloring)), coloring);
}

bool in_gplus(const TreeAut& g, const OrbitColoring& coloring) {
  return sigma_bar(g, coloring).is_identity() &&
         same_fiber(Vertex::root(), g.root_image(), coloring);
}

std::vector<OrbitWord> quotient_ball(int r, int radius) {
  std::vector<OrbitWord> result{{}};
  if (r == 1) {
    if (radius >= 1) result.push_back({0});
    return result;
  }
  std::vector<OrbitWord> level{{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<OrbitWord> next;
    for (const OrbitWord& w : level)
      for (int i = 0; i < r; ++i) {
        if (!w.empty() && w.back() == i) continue;
        OrbitWord u = w;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    for (const OrbitWord& w : next) result.push_back(w);
    level = std::move(next);
  }
  return result;
}

std::string to_string(QClass c) {
  switch (c) {
    case QClass::trivial: return "Trivial";
    case QClass::infinite_cyclic: return "InfiniteCyclic";
    case QClass::infinite_dihedral: return "InfiniteDihedral";
    case QClass::virtually_free: return "VirtuallyFree";
  }
  return "?";
}

std::string to_string(GammaModEnv c) {
  switch (c) {
    case GammaModEnv::c2: return "C2";
    case GammaModEnv::d_infinity: return "DInfinity";
    case GammaModEnv::d_infinity_by_c2: return "DInfinityByC2";
    case GammaModEnv::non_amenable: return "NonAmenable";
  }
  return "?";
}

ClassificationReport classify(const PermGroup& f, const PermGroup& f_prime) {
  LocalActionPair pair(f, f_prime);  // throws on an invalid pair
  ClassificationReport report;
  report.degree = pair.degree();

  const PermGroup fp_plus = pair.f_prime().point_stabilizer_closure();
  OrbitQuotient q = quotient_on_orbits(pair.f_prime(), fp_plus);
  report.r = static_cast<int>(q.blocks.size());
  report.d_order = q.action.order();
  report.index = q.index;
  report.d_faithful = q.faithful;
  for (const Perm& g : q.action.generators()) report.d_generators.push_back(g.cycles());

  const bool fp_transitive = pair.f_prime().predicates().transitive;
  if (report.r == 1) {
    report.q_class = QClass::trivial;
    report.gamma_mod_env = GammaModEnv::c2;
  } else if (report.r == 2 && !fp_transitive) {
    report.q_class = QClass::infinite_cyclic;
    report.gamma_mod_env = GammaModEnv::d_infinity;
  } else if (report.r == 2) {
    report.q_class = QClass::infinite_dihedral;
    report.gamma_mod_env = GammaModEnv::d_infinity_by_c2;
  } else {
    report.q_class = QClass::virtually_free;
    report.gamma_mod_env = GammaModEnv::non_amenable;
  }
  report.boundary_indivisible = report.r <= 2;
  report.virtually_simple = pair.f_transitive() && fp_plus.same_group_as(pair.f_prime());
  report.discrete = pair.f_semiregular();
  report.prereq_f_semiregular = pair.f_semiregular();
  report.prereq_f_neq_fprime = !pair.f().same_group_as(pair.f_prime());
  return report;
}

}  // namespace lact
