#include "lact/local_action_pair.hpp"

#include <algorithm>
#include <sstream>

#include "lact/error.hpp"

namespace lact {

namespace {

std::string block_to_string(const std::vector<int>& block) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) out << ',';
    out << block[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

LocalActionPair::LocalActionPair(PermGroup f, PermGroup f_prime)
    : f_(std::move(f)), fp_(std::move(f_prime)) {
  if (f_.degree() != fp_.degree())
    fail(Error::Kind::validation, "F and F' must act on the same color set");
  const int d = degree();
  if (d < 3) fail(Error::Kind::validation, "degree must be at least 3");
  for (const Perm& g : f_.generators())
    if (!fp_.contains(g))
      fail(Error::Kind::validation, "F is not contained in F': generator " + g.cycles());

  // Each F-orbit must be mapped onto itself setwise by every generator of F'.
  // If a generator merely permutes the orbits, say so explicitly.
  const auto f_blocks = f_.orbits();
  std::vector<int> block_of(d, -1);
  for (size_t i = 0; i < f_blocks.size(); ++i)
    for (int x : f_blocks[i]) block_of[x] = static_cast<int>(i);
  for (const Perm& g : fp_.generators()) {
    for (const auto& block : f_blocks) {
      for (int x : block) {
        if (block_of[g(x)] != block_of[x]) {
          bool permutes_blocks = true;
          int target = block_of[g(block[0])];
          for (int y : block)
            if (block_of[g(y)] != target) permutes_blocks = false;
          std::string detail = permutes_blocks
                                   ? " (it maps the orbit onto another orbit; only the setwise"
                                     " reading is accepted)"
                                   : "";
          fail(Error::Kind::validation,
               "generator " + g.cycles() + " of F' does not preserve the F-orbit " +
                   block_to_string(block) + detail);
        }
      }
    }
  }

  auto preds = f_.predicates();
  f_semiregular_ = preds.semiregular;
  f_transitive_ = preds.transitive;
  f_elements_ = f_.elements();
  std::sort(f_elements_.begin(), f_elements_.end());
  fp_elements_ = fp_.elements();
  std::sort(fp_elements_.begin(), fp_elements_.end());

  if (f_semiregular_) {
    tail_index_.assign(d, std::vector<int>(d, -1));
    for (size_t i = 0; i < f_elements_.size(); ++i)
      for (int a = 0; a < d; ++a) tail_index_[a][f_elements_[i](a)] = static_cast<int>(i);
  }
  buckets_.assign(d, std::vector<std::vector<Perm>>(d));
  for (const Perm& p : fp_elements_)
    for (int a = 0; a < d; ++a) buckets_[a][p(a)].push_back(p);
}

bool LocalActionPair::has_tail(int color, int target) const {
  return f_semiregular_ && tail_index_[color][target] >= 0;
}

const Perm& LocalActionPair::unique_tail(int color, int target) const {
  if (!f_semiregular_)
    fail(Error::Kind::precondition, "tail values require a semi-regular F");
  int idx = tail_index_[color][target];
  if (idx < 0)
    fail(Error::Kind::validation, "no element of F maps color " + std::to_string(color) +
                                      " to " + std::to_string(target));
  return f_elements_[idx];
}

const std::vector<Perm>& LocalActionPair::local_candidates(int color, int target) const {
  return buckets_[color][target];
}

bool LocalActionPair::same_pair_as(const LocalActionPair& other) const {
  if (this == &other) return true;
  return degree() == other.degree() && f_.same_group_as(other.f_) &&
         fp_.same_group_as(other.fp_);
}

}  // namespace lact
