#pragma once

#include <cstdint>
#include <vector>

#include "lact/perm_group.hpp"

namespace lact {

// Finite model of the subgroup space: for a finite group the closed minimal
// conjugation-invariant subsets are exactly the conjugacy classes of
// subgroups.
struct SubgroupClass {
  std::vector<PermGroup> members;  // deterministic order (order, then element lists)
};

// Every subgroup, each as a PermGroup, ordered by (order, element lists);
// built by incremental closure over one-element extensions. Throws a bound
// error when |G| exceeds the cap.
std::vector<PermGroup> all_subgroups(const PermGroup& g, std::uint64_t cap = 2000);

// Partition of the given subgroups into conjugacy classes under the ambient
// group's conjugation action.
std::vector<SubgroupClass> conjugacy_classes(const PermGroup& ambient,
                                             const std::vector<PermGroup>& subgroups);

// All conjugacy classes of subgroups of g.
std::vector<SubgroupClass> urs_classes(const PermGroup& g, std::uint64_t cap = 2000);

// The order on classes: some member of a is contained in some member of b.
// Also checks the equivalent formulation (every member of a is contained in
// a member of b, and every member of b contains a member of a) and insists
// they agree.
bool class_leq(const SubgroupClass& a, const SubgroupClass& b);

// Subgroup generated by all members of the class; checked to be normal in
// the ambient group.
PermGroup class_envelope(const PermGroup& ambient, const SubgroupClass& c);

// Conjugacy classes represented among the point stabilizers of an action of
// g on {0,...,m-1}, given by the images of each generator. Deduplicated; one
// class per orbit type. Throws when the images do not extend to a
// well-defined action.
std::vector<SubgroupClass> stabilizer_classes(
    const PermGroup& g, const std::vector<std::vector<int>>& action_generator_images);

}  // namespace lact
