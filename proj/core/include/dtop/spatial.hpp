#pragma once

#include <optional>
#include <vector>

#include "dtop/linsys.hpp"
#include "dtop/precubical.hpp"
#include "dtop/rational.hpp"

namespace dtop {

/// A candidate route for a vertex-avoiding d-path through a boundary
/// subcomplex: a sequence of distinct open cells of dimension >= 1, with a
/// monotone per-coordinate status pattern (fixed-0s, then free, then
/// fixed-1s) and pairwise compatible consecutive cells.
struct Itinerary {
  int n = 0;
  std::vector<Word> cells;
  bool operator==(const Itinerary&) const = default;
};

/// The linear feasibility encoding of one itinerary with a chosen interior
/// witness coordinate per transition point: variables are the coordinates of
/// the transition points p_1 .. p_{m-1} (p_0 and p_m are the extreme
/// corners), constraints are the chain order, face memberships, and the
/// strict interiority of the witness coordinates.
struct FeasibilitySystem {
  int n = 0;
  std::size_t segments = 0;  // m, the itinerary length
  LinearSystem system{0};
  // var_index[j-1][i] is the variable for coordinate i of p_j, or -1 when the
  // coordinate is pinned by the closed-face meet of cells j and j+1.
  std::vector<std::vector<int>> var_index;
  std::vector<std::vector<Rat>> pinned;  // pinned values, one row per p_1..p_{m-1}
};

/// Builds the encoding for one witness-coordinate assignment (one interior
/// coordinate index per transition point). Returns nullopt when consecutive
/// cells are incompatible, a transition point is forced onto a vertex, or a
/// chosen witness coordinate is pinned.
std::optional<FeasibilitySystem> feasibility_system(const Itinerary& itinerary,
                                                    const std::vector<int>& witness_coords);

/// Solves the system exactly and reassembles the transition points
/// p_0 .. p_m (including the extreme corners). nullopt when infeasible.
std::optional<std::vector<std::vector<Rat>>> transition_points(const FeasibilitySystem& fs);

struct BnWitness {
  Itinerary itinerary;
  // Transition points p_0 .. p_m of the PL path, p_0 = bottom, p_m = top.
  std::vector<std::vector<Rat>> points;
};

struct BnResult {
  bool member = false;
  std::optional<BnWitness> witness;
};

/// Decides membership of A in B_n: whether |A| carries a d-path of [0,1]^n
/// from the bottom corner to the top corner avoiding every other vertex.
/// Itineraries are searched in increasing length; feasibility is decided by
/// exact Fourier-Motzkin elimination honoring strictness. Supported for
/// 2 <= n <= 4; throws outside that range.
BnResult in_Bn(const BoundarySubcomplex& A);

/// Test hook: same decision without the per-coordinate status-pattern filter
/// (only distinctness and consecutive compatibility prune the search).
BnResult in_Bn_unpruned(const BoundarySubcomplex& A);

struct SpatialWitness {
  CellId x;
  CellId y;
  int n = 0;
  BoundarySubcomplex agreement;
};

struct SpatialResult {
  bool spatial = true;
  std::vector<SpatialWitness> witnesses;  // all failing pairs, ordered
};

/// A precubical set is spatial iff no two distinct n-cells (n >= 3) agree on
/// a subcomplex lying in B_n. Exact checking supports max dimension <= 4;
/// throws above. Pairs may be checked concurrently (threads > 1); the
/// result is deterministic and witnesses are reported in (x, y) order.
SpatialResult is_spatial(const PrecubicalSet& K, int threads = 1);

}  // namespace dtop
