#pragma once

#include <string>
#include <vector>

namespace lact {

// Permutation of {0, ..., d-1}, stored as its image vector.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);                // identity
  explicit Perm(std::vector<int> images);   // validates bijection
  // Disjoint-cycle notation over 0-based points, e.g. "(0 1)(2 3)"; "()" is
  // the identity. Points may be separated by spaces or commas.
  static Perm parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;
  std::string cycles() const;

  // (p * q)(x) = p(q(x)); q is applied first.
  friend Perm operator*(const Perm& p, const Perm& q);

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace lact
