#pragma once

#include <optional>
#include <vector>

#include "cubefold/equivariance.hpp"
#include "cubefold/fold.hpp"
#include "cubefold/morphism.hpp"
#include "cubefold/swell.hpp"

namespace cubefold {

enum class Mode { MedianHull, ConvexHull };
enum class MoveKind { Fold, Swell };

std::string_view mode_name(Mode mode);
std::string_view move_name(MoveKind kind);

struct Move {
  MoveKind kind = MoveKind::Fold;
  PairCollection pairs;  // hyperplane ids of `before`
  Graph before;
  Graph after;
  PPMap step_map;
  std::optional<InducedAction> action;
};

struct FactorizationTrace {
  std::vector<Move> moves;
  PPMap eta;   // source -> terminal
  PPMap iota;  // terminal -> codomain
  Mode mode = Mode::MedianHull;
};

struct PartialFactorization {
  std::vector<Move> moves;
  PPMap eta;
  PPMap psi;  // from the new graph
};

/// Moves after which a and b share a hyperplane. Throws ImagesDiffer.
PartialFactorization fold_unique_pair(const PPMap& psi, HyperplaneId a, HyperplaneId b);

/// Throws NotMedian; InternalError if the termination measure fails.
FactorizationTrace factorize(const PPMap& psi, Mode mode);

/// Every move folds or swells a whole orbit; group generators correspond to
/// cogroup generators by position. Throws NotEquivariant.
FactorizationTrace factorize_equivariant(const PPMap& psi, const SymmetryGroup& group,
                                         const SymmetryGroup& cogroup, Mode mode);

/// Pair list as `{A:B,C:D}`.
std::string format_pairs(const PairCollection& pairs);

}  // namespace cubefold
