#include "lact/sweeps.hpp"

#include <vector>

#include "lact/rng.hpp"

namespace lact {

namespace {

// One (g, h) cocycle sample; returns (checks, violations).
std::pair<long long, long long> cocycle_sample(const PairPtr& pair, int sample_radius,
                                               const std::vector<Vertex>& probe,
                                               std::uint64_t seed, std::uint64_t index) {
  TreeAut g = TreeAut::random_element(pair, sample_radius, derive_seed(seed, 2 * index));
  TreeAut h = TreeAut::random_element(pair, sample_radius, derive_seed(seed, 2 * index + 1));
  TreeAut gh = compose(g, h);
  long long checks = 0, violations = 0;
  for (const Vertex& v : probe) {
    ++checks;
    if (gh.tail_sigma(v) != g.tail_sigma(h.apply(v)) * h.tail_sigma(v)) ++violations;
  }
  return {checks, violations};
}

long long constancy_sample(const PairPtr& pair, const OrbitColoring& coloring,
                           int sample_radius, int ball_radius, std::uint64_t seed,
                           std::uint64_t index) {
  TreeAut g = TreeAut::random_element(pair, sample_radius, derive_seed(seed, index));
  return sigma_bar_constancy_check(g, coloring, ball_radius) ? 0 : 1;
}

std::pair<long long, long long> quotient_action_sample(const PairPtr& pair,
                                                       const OrbitColoring& coloring,
                                                       int sample_radius,
                                                       const std::vector<OrbitWord>& words,
                                                       std::uint64_t seed,
                                                       std::uint64_t index) {
  TreeAut g = TreeAut::random_element(pair, sample_radius, derive_seed(seed, 3 * index));
  TreeAut h = TreeAut::random_element(pair, sample_radius, derive_seed(seed, 3 * index + 1));
  TreeAut gh = compose(g, h);
  long long checks = 0, violations = 0;
  for (const OrbitWord& x : words) {
    ++checks;
    if (phi_apply(gh, x, coloring) != phi_apply(g, phi_apply(h, x, coloring), coloring))
      ++violations;
  }
  // lift independence: a random lift and the least lift agree
  Rng rng(derive_seed(seed, 3 * index + 2));
  for (const OrbitWord& x : words) {
    std::vector<int> lifted;
    for (int letter : x) {
      const auto& block = coloring.blocks[letter];
      lifted.push_back(block[rng.below(static_cast<int>(block.size()))]);
    }
    ++checks;
    if (project_vertex(g.apply(Vertex(std::move(lifted))), coloring) !=
        phi_apply(g, x, coloring))
      ++violations;
  }
  return {checks, violations};
}

long long kernel_agreement_sample(const PairPtr& pair, const OrbitColoring& coloring,
                                  int sample_radius, std::uint64_t seed, std::uint64_t index) {
  TreeAut g = TreeAut::random_element(pair, sample_radius, derive_seed(seed, index));
  const bool algebraic = in_gplus(g, coloring);
  const int rho = 2 * g.radius() + g.root_image().length() + 2;
  bool trivial = true;
  for (const OrbitWord& x : quotient_ball(coloring.r, rho))
    if (phi_apply(g, x, coloring) != x) {
      trivial = false;
      break;
    }
  return (algebraic == trivial) ? 0 : 1;
}

// words of a given length on r letters, by linear index
OrbitWord decode_word(long long index, int r, int len) {
  OrbitWord w(len);
  for (int i = len - 1; i >= 0; --i) {
    w[i] = static_cast<int>(index % r);
    index /= r;
  }
  return w;
}

long long pow_ll(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

std::pair<long long, long long> palindrome_word_audit(const OrbitWord& w) {
  const bool palindromic = is_even_palindrome_concat(w);
  const bool reduces = free_reduce(w).empty();
  return {palindromic && !reduces ? 1LL : 0LL, reduces && !palindromic ? 1LL : 0LL};
}

// all reduced words of length <= max_len over a, a^-1, b, b^-1, with their
// images of omega
std::vector<HalfTree> omega_translates(const PingPongCertificate& cert, const HalfTree& omega,
                                       int max_len) {
  const TreeAut letters[4] = {cert.a, cert.a.inverse(), cert.b, cert.b.inverse()};
  std::vector<HalfTree> images{omega};
  std::vector<std::pair<int, TreeAut>> level{{-1, TreeAut::identity(cert.a.pair())}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<int, TreeAut>> next;
    for (const auto& [last, value] : level)
      for (int i = 0; i < 4; ++i) {
        if (last >= 0 && (last ^ 1) == i) continue;
        TreeAut g = compose(value, letters[i]);
        images.push_back(image_halftree(g, omega));
        next.emplace_back(i, std::move(g));
      }
    level = std::move(next);
  }
  return images;
}

}  // namespace

SweepStats cocycle_sweep_serial(const PairPtr& pair, int n_pairs, int sample_radius,
                                int ball_radius, std::uint64_t seed) {
  const auto probe = ball(Vertex::root(), ball_radius, pair->degree());
  SweepStats stats;
  stats.samples = n_pairs;
  for (int i = 0; i < n_pairs; ++i) {
    auto [checks, violations] = cocycle_sample(pair, sample_radius, probe, seed, i);
    stats.checks += checks;
    stats.violations += violations;
  }
  return stats;
}

SweepStats cocycle_sweep_parallel(const PairPtr& pair, int n_pairs, int sample_radius,
                                  int ball_radius, std::uint64_t seed) {
  const auto probe = ball(Vertex::root(), ball_radius, pair->degree());
  long long checks = 0, violations = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checks, violations)
  for (int i = 0; i < n_pairs; ++i) {
    auto [c, v] = cocycle_sample(pair, sample_radius, probe, seed, i);
    checks += c;
    violations += v;
  }
  return SweepStats{n_pairs, checks, violations};
}

SweepStats constancy_sweep_serial(const PairPtr& pair, int n_samples, int sample_radius,
                                  int ball_radius, std::uint64_t seed) {
  const OrbitColoring coloring = orbit_coloring(*pair);
  SweepStats stats;
  stats.samples = n_samples;
  for (int i = 0; i < n_samples; ++i) {
    stats.checks += 1;
    stats.violations += constancy_sample(pair, coloring, sample_radius, ball_radius, seed, i);
  }
  return stats;
}

SweepStats constancy_sweep_parallel(const PairPtr& pair, int n_samples, int sample_radius,
                                    int ball_radius, std::uint64_t seed) {
  const OrbitColoring coloring = orbit_coloring(*pair);
  long long violations = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : violations)
  for (int i = 0; i < n_samples; ++i)
    violations += constancy_sample(pair, coloring, sample_radius, ball_radius, seed, i);
  return SweepStats{n_samples, n_samples, violations};
}

SweepStats quotient_action_sweep_serial(const PairPtr& pair, int n_pairs, int sample_radius,
                                        int word_len, std::uint64_t seed) {
  const OrbitColoring coloring = orbit_coloring(*pair);
  const auto words = quotient_ball(coloring.r, word_len);
  SweepStats stats;
  stats.samples = n_pairs;
  for (int i = 0; i < n_pairs; ++i) {
    auto [checks, violations] =
        quotient_action_sample(pair, coloring, sample_radius, words, seed, i);
    stats.checks += checks;
    stats.violations += violations;
  }
  return stats;
}

SweepStats quotient_action_sweep_parallel(const PairPtr& pair, int n_pairs, int sample_radius,
                                          int word_len, std::uint64_t seed) {
  const OrbitColoring coloring = orbit_coloring(*pair);
  const auto words = quotient_ball(coloring.r, word_len);
  long long checks = 0, violations = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checks, violations)
  for (int i = 0; i < n_pairs; ++i) {
    auto [c, v] = quotient_action_sample(pair, coloring, sample_radius, words, seed, i);
    checks += c;
    violations += v;
  }
  return SweepStats{n_pairs, checks, violations};
}

SweepStats kernel_agreement_sweep_serial(const PairPtr& pair, int n_samples, int sample_radius,
                                         std::uint64_t seed) {
  const OrbitColoring coloring = orbit_coloring(*pair);
  SweepStats stats;
  stats.samples = n_samples;
  for (int i = 0; i < n_samples; ++i) {
    stats.checks += 1;
    stats.violations += kernel_agreement_sample(pair, coloring, sample_radius, seed, i);
  }
  return stats;
}

SweepStats kernel_agreement_sweep_parallel(const PairPtr& pair, int n_samples,
                                           int sample_radius, std::uint64_t seed) {
  const OrbitColoring coloring = orbit_coloring(*pair);
  long long violations = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : violations)
  for (int i = 0; i < n_samples; ++i)
    violations += kernel_agreement_sample(pair, coloring, sample_radius, seed, i);
  return SweepStats{n_samples, n_samples, violations};
}

PalindromeAudit palindrome_audit_serial(int r, int max_len) {
  PalindromeAudit audit;
  for (int len = 1; len <= max_len; ++len) {
    const long long total = pow_ll(r, len);
    audit.words += total;
    for (long long idx = 0; idx < total; ++idx) {
      auto [impl, conv] = palindrome_word_audit(decode_word(idx, r, len));
      audit.implication_violations += impl;
      audit.converse_failures += conv;
    }
  }
  return audit;
}

PalindromeAudit palindrome_audit_parallel(int r, int max_len) {
  PalindromeAudit audit;
  for (int len = 1; len <= max_len; ++len) {
    const long long total = pow_ll(r, len);
    audit.words += total;
    long long impl_sum = 0, conv_sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : impl_sum, conv_sum)
    for (long long idx = 0; idx < total; ++idx) {
      auto [impl, conv] = palindrome_word_audit(decode_word(idx, r, len));
      impl_sum += impl;
      conv_sum += conv;
    }
    audit.implication_violations += impl_sum;
    audit.converse_failures += conv_sum;
  }
  return audit;
}

bool wandering_scan_serial(const PingPongCertificate& cert, const HalfTree& omega,
                           int max_len) {
  const auto images = omega_translates(cert, omega, max_len);
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (!halftree_disjoint(images[i], images[j])) return false;
  return true;
}

bool wandering_scan_parallel(const PingPongCertificate& cert, const HalfTree& omega,
                             int max_len) {
  const auto images = omega_translates(cert, omega, max_len);
  const long long n = static_cast<long long>(images.size());
  long long clashes = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : clashes)
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j)
      if (!halftree_disjoint(images[i], images[j])) ++clashes;
  return clashes == 0;
}

}  // namespace lact
