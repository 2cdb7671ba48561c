#pragma once

#include <vector>

#include "cubefold/cubulation.hpp"
#include "cubefold/hyperplane.hpp"
#include "cubefold/morphism.hpp"

namespace cubefold {

using PairCollection = std::vector<HyperplanePair>;

/// Sorted pairs with a < b; pairs (a, a) dropped. Throws UnknownHyperplane.
PairCollection normalize_pairs(const Graph& g, PairCollection pairs);

/// Classes of the transitive closure of `pairs`, each sorted, ordered by
/// least member.
std::vector<std::vector<HyperplaneId>> connected_classes(std::size_t hyperplanes,
                                                         const PairCollection& pairs);

struct FirstFold {
  Graph graph;
  std::vector<Vertex> pi;  // source vertex -> quotient vertex
};

/// Identifies alpha(p) with beta(p) over the common carrier.
/// Throws NotInContact, NotMedian.
FirstFold first_fold(const Graph& g, HyperplaneId a, HyperplaneId b);

struct FoldResult {
  Graph source;
  Graph target;
  PPMap zeta;
  PairCollection pairs;
  std::vector<std::vector<HyperplaneId>> merged_classes;
  // fold_pair cubulates the first fold; fold_collection cubulates the parity
  // wallspace on the source itself, with pi the identity
  Graph quotient;
  std::vector<Vertex> pi;
  Cubulation cubulation;
};

/// First fold followed by cubulation.
FoldResult fold_pair(const Graph& g, HyperplaneId a, HyperplaneId b);

/// Parity wall per connected class of `pairs`, then one cubulation.
FoldResult fold_collection(const Graph& g, PairCollection pairs);

/// The parity wallspace used by fold_collection.
Wallspace parity_wallspace(const Graph& g, const std::vector<std::vector<HyperplaneId>>& classes);

/// The unique xi with psi = xi o zeta. Throws NotFactorizable.
PPMap factor_through_fold(const FoldResult& fr, const PPMap& psi, bool reverse = false);

}  // namespace cubefold
