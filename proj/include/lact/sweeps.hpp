#pragma once

#include <cstdint>

#include "lact/dynamics.hpp"
#include "lact/quotient.hpp"

namespace lact {

// Bulk verification kernels. Each kernel has a serial reference
// implementation and an OpenMP variant with identical output; samples are
// seeded per index, so the parallel schedule cannot change any result. The
// benchmark target compares the two.

struct SweepStats {
  long long samples = 0;
  long long checks = 0;
  long long violations = 0;

  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

// Local-permutation cocycle of compositions: sigma(gh, v) = sigma(g, hv) *
// sigma(h, v) over sampled pairs (g, h) and every v in the ball.
SweepStats cocycle_sweep_serial(const PairPtr& pair, int n_pairs, int sample_radius,
                                int ball_radius, std::uint64_t seed);
SweepStats cocycle_sweep_parallel(const PairPtr& pair, int n_pairs, int sample_radius,
                                  int ball_radius, std::uint64_t seed);

// Constancy of the orbit-quotient image of the local permutations.
SweepStats constancy_sweep_serial(const PairPtr& pair, int n_samples, int sample_radius,
                                  int ball_radius, std::uint64_t seed);
SweepStats constancy_sweep_parallel(const PairPtr& pair, int n_samples, int sample_radius,
                                    int ball_radius, std::uint64_t seed);

// The induced quotient-tree action is a homomorphism and does not depend on
// the choice of lifts.
SweepStats quotient_action_sweep_serial(const PairPtr& pair, int n_pairs, int sample_radius,
                                        int word_len, std::uint64_t seed);
SweepStats quotient_action_sweep_parallel(const PairPtr& pair, int n_pairs, int sample_radius,
                                          int word_len, std::uint64_t seed);

// Agreement of the two kernel criteria: the algebraic membership test equals
// triviality of the induced action on a quotient-tree ball of radius
// 2 * radius(g) + |root image| + 2.
SweepStats kernel_agreement_sweep_serial(const PairPtr& pair, int n_samples, int sample_radius,
                                         std::uint64_t seed);
SweepStats kernel_agreement_sweep_parallel(const PairPtr& pair, int n_samples,
                                           int sample_radius, std::uint64_t seed);

// Exhaustive audit over all words of length <= max_len on r letters:
// implication_violations counts words that split into even palindromes yet do
// not reduce to the empty word (must stay zero); converse_failures counts
// words that reduce to empty without an even-palindrome factorization.
struct PalindromeAudit {
  long long words = 0;
  long long implication_violations = 0;
  long long converse_failures = 0;

  friend bool operator==(const PalindromeAudit&, const PalindromeAudit&) = default;
};
PalindromeAudit palindrome_audit_serial(int r, int max_len);
PalindromeAudit palindrome_audit_parallel(int r, int max_len);

// Parallel twin of wandering_brute_check: translates of omega under distinct
// reduced words of length <= max_len are pairwise disjoint.
bool wandering_scan_serial(const PingPongCertificate& cert, const HalfTree& omega,
                           int max_len);
bool wandering_scan_parallel(const PingPongCertificate& cert, const HalfTree& omega,
                             int max_len);

}  // namespace lact
