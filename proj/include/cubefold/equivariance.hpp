#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubefold/fold.hpp"
#include "cubefold/swell.hpp"

namespace cubefold {

using Permutation = std::vector<Vertex>;

struct SymmetryGroup {
  Graph carrier;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // identity first

  bool trivial() const { return elements.size() == 1; }
};

inline constexpr std::size_t kGroupCap = 10000;

/// Checks each generator is an automorphism and enumerates the closure.
/// Throws NotAutomorphism, GroupTooLarge.
SymmetryGroup verify_group(const Graph& g, std::vector<Permutation> generators,
                           std::size_t cap = kGroupCap);

SymmetryGroup trivial_group(const Graph& g);

/// Each generator lists `a->b` moves; unlisted vertices are fixed.
SymmetryGroup group_from_ids(const Graph& g,
                             const std::vector<std::vector<std::pair<std::string, std::string>>>& gens);

/// Action of an automorphism on hyperplane ids.
std::vector<HyperplaneId> hyperplane_permutation(const Graph& g, const Permutation& perm);

/// Closure of the seeds under the group, normalized.
PairCollection orbit_of_pairs(const SymmetryGroup& group, const PairCollection& seeds);

struct InducedAction {
  Graph target;
  std::vector<Permutation> generator_images;
};

/// Pushes each generator through the universal property of the move.
InducedAction induce_through_fold(const FoldResult& fr, const SymmetryGroup& group);
InducedAction induce_through_swell(const SwellResult& sr, const SymmetryGroup& group);

/// image_k o step = step o generator_k on every vertex, for every k.
bool equivariance_commutes(const PPMap& step, const SymmetryGroup& group,
                           const std::vector<Permutation>& images);

struct EquivariantFold {
  FoldResult fold;
  InducedAction action;
};

struct EquivariantSwell {
  SwellResult swell;
  InducedAction action;
};

/// Folds the orbit of the seed. Throws NotInContact.
EquivariantFold equivariant_fold(const SymmetryGroup& group, HyperplanePair seed);
/// Swells the orbit of the seed. Throws NotTangent.
EquivariantSwell equivariant_swell(const SymmetryGroup& group, HyperplanePair seed);

/// psi(g x) = phi(g) psi(x) for corresponding generators.
bool is_equivariant(const PPMap& psi, const SymmetryGroup& group, const SymmetryGroup& cogroup);

}  // namespace cubefold
