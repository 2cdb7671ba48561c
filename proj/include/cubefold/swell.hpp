#pragma once

#include <vector>

#include "cubefold/cubulation.hpp"
#include "cubefold/fold.hpp"
#include "cubefold/morphism.hpp"

namespace cubefold {

struct SwellResult {
  Graph source;
  Graph target;
  PPMap embedding;
  PairCollection new_transversal_pairs;  // source hyperplane ids
};

/// Glues a square at every vertex of the common carrier.
/// Throws NotTangent, NotMedian.
SwellResult swell_pair(const Graph& g, HyperplaneId a, HyperplaneId b);

/// Spot graph: orientations exempted from consistency on the pairs.
/// Transverse pairs are ignored. Throws NotTangent when a pair does not end
/// up transverse, NotMedian.
SwellResult swell_collection(const Graph& g, PairCollection pairs);

/// Exemption matrix over the hyperplanes of g.
Exemptions spot_exemptions(const Graph& g, const PairCollection& pairs);

/// The unique parallel-preserving extension. Throws NotFactorizable,
/// MissingFourthCorner.
PPMap extend_through_swell(const SwellResult& sr, const PPMap& psi, bool reverse = false);

}  // namespace cubefold
