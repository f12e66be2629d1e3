#pragma once

#include <memory>
#include <vector>

#include "lact/perm_group.hpp"

namespace lact {

// Validated pair of finite permutation groups F <= F' on the color set
// {0,...,d-1}, d >= 3, with every generator of F' mapping each F-orbit onto
// itself setwise. Precomputes the element tables used by the tree-automorphism
// engine; immutable after construction.
class LocalActionPair {
 public:
  LocalActionPair(PermGroup f, PermGroup f_prime);

  int degree() const { return f_.degree(); }
  const PermGroup& f() const { return f_; }
  const PermGroup& f_prime() const { return fp_; }

  bool f_semiregular() const { return f_semiregular_; }
  bool f_transitive() const { return f_transitive_; }

  const std::vector<Perm>& f_elements() const { return f_elements_; }
  const std::vector<Perm>& f_prime_elements() const { return fp_elements_; }

  // The unique f in F with f(color) = target; requires F semi-regular and
  // target in the F-orbit of color.
  const Perm& unique_tail(int color, int target) const;
  bool has_tail(int color, int target) const;

  // Elements p of F' with p(color) = target, in enumeration order.
  const std::vector<Perm>& local_candidates(int color, int target) const;

  bool same_pair_as(const LocalActionPair& other) const;

 private:
  PermGroup f_;
  PermGroup fp_;
  bool f_semiregular_ = false;
  bool f_transitive_ = false;
  std::vector<Perm> f_elements_;
  std::vector<Perm> fp_elements_;
  std::vector<std::vector<int>> tail_index_;            // [color][target] -> index into f_elements_, or -1
  std::vector<std::vector<std::vector<Perm>>> buckets_;  // [color][target] -> F' elements
};

using PairPtr = std::shared_ptr<const LocalActionPair>;

inline PairPtr make_pair_ptr(PermGroup f, PermGroup f_prime) {
  return std::make_shared<const LocalActionPair>(std::move(f), std::move(f_prime));
}

}  // namespace lact
