#pragma once

#include <string>
#include <vector>

#include "dtop/precubical.hpp"
#include "dtop/rational.hpp"
#include "dtop/reparam.hpp"

namespace dtop {

/// Canonical point of the realization: carrier cell plus strictly interior
/// coordinates (empty for a vertex). Coordinates equal to 0 or 1 are always
/// collapsed through face maps into a lower-dimensional carrier.
struct Point {
  CellId carrier;
  std::vector<Rat> coords;
  bool operator==(const Point&) const = default;
};
bool operator<(const Point& a, const Point& b);

struct TrackPoint {
  Rat t;
  std::vector<Rat> x;
  bool operator==(const TrackPoint&) const = default;
};

/// One in-cube vertex-to-vertex PL segment of a tame path: a monotone track
/// in [0,1]^n from corner `from` to corner `to` (from <= to, from != to),
/// parametrized over [0, duration].
struct Leg {
  CellId cube;
  Corner from;
  Corner to;
  std::vector<TrackPoint> track;

  Rat duration() const { return track.back().t; }
  int dim() const { return static_cast<int>(from.size()); }
  bool operator==(const Leg&) const = default;
};

/// A tame d-path: a nonempty Moore concatenation of legs whose junction
/// vertices match in K_0. Operations return canonical forms (collinear track
/// points merged, junction stops attached to the earlier leg), so operator==
/// is canonical-form equality.
struct TameDPath {
  std::vector<Leg> legs;

  Rat duration() const;
  bool operator==(const TameDPath&) const = default;
};

/// A tame d-path whose arc-length profile is the identity. Produced by
/// naturalize(); its total duration is a positive integer and every leg runs
/// at unit L1 speed.
struct NaturalPath {
  TameDPath path;
  bool operator==(const NaturalPath&) const = default;
};

struct PathViolation {
  int leg = -1;
  std::string kind;
  std::string detail;
};

struct SkeletonLeg {
  CellId cube;
  Corner from;
  Corner to;
  bool operator==(const SkeletonLeg&) const = default;
  auto operator<=>(const SkeletonLeg&) const = default;
};
using Skeleton = std::vector<SkeletonLeg>;

std::vector<Rat> corner_coords(const Corner& c);

/// Empty report iff all Leg and TameDPath invariants hold, including the
/// junction identities in K_0.
std::vector<PathViolation> validate_path(const PrecubicalSet& K, const TameDPath& path);

/// Canonical form: merges collinear track points per leg and moves stops
/// sitting at a junction into the earlier leg. Input must be valid.
TameDPath canonicalize(const TameDPath& path);

/// Collapses boundary coordinates through faces until all remaining
/// coordinates are strictly interior.
Point canonical_point(const PrecubicalSet& K, const CellId& carrier, std::vector<Rat> coords);

/// Position at global time t in [0, duration], as a canonical Point. At a
/// junction time both adjacent legs yield the same Point.
Point eval(const PrecubicalSet& K, const TameDPath& path, const Rat& t);

/// L1 arc length accumulated on [0, t]. Exact.
Rat arc_length(const TameDPath& path, const Rat& t);
Rat total_arc_length(const TameDPath& path);

/// The arc-length profile t -> arc_length(path, t), a morphism of
/// M(duration, total arc length).
Reparam profile(const TameDPath& path);

CellId path_source(const PrecubicalSet& K, const TameDPath& path);
CellId path_target(const PrecubicalSet& K, const TameDPath& path);

/// Moore composition: concatenated legs, durations and arc lengths add.
/// Requires target vertex of a == source vertex of b.
TameDPath moore_compose(const PrecubicalSet& K, const TameDPath& a, const TameDPath& b);

/// Moore composition rescaled linearly to total duration 1.
TameDPath normalized_compose(const PrecubicalSet& K, const TameDPath& a, const TameDPath& b);

/// The contravariant action: the composite path . phi, re-split into legs at
/// the preimages of leg boundaries. Stops of phi become stops of the result;
/// a stop at a junction is attached to the earlier leg. Requires
/// phi.dst_len() == path.duration().
TameDPath reparametrize(const TameDPath& path, const Reparam& phi);

/// Deletes every maximal stop and reparametrizes each leg to unit L1 speed
/// (the arc-length parametrization).
NaturalPath naturalize(const TameDPath& path);

bool is_natural(const TameDPath& path);

struct Factorization {
  Reparam profile;
  NaturalPath natural;
};

/// The factorization path -> (profile, naturalization). apply_factorization
/// is its two-sided inverse on canonical forms.
Factorization factorize(const TameDPath& path);

/// Rebuilds a path from a reparametrization and a natural path:
/// reparametrize(natural, phi). Requires phi.dst_len() == natural duration.
TameDPath apply_factorization(const Reparam& phi, const NaturalPath& natural);

/// All cube chains from vertex alpha to vertex beta of total L1 length n:
/// sequences of cells traversed bottom corner to top corner, junction
/// compatible, with dimensions summing to n. Deterministic lexicographic
/// order. n == 0 yields the empty list; n > bound throws.
std::vector<Skeleton> enumerate_skeletons(const PrecubicalSet& K, const CellId& alpha,
                                          const CellId& beta, int n, int bound = 16);

/// The path whose legs are straight segments over the given durations.
TameDPath straight_path(const PrecubicalSet& K, const Skeleton& skeleton,
                        const std::vector<Rat>& durations);

}  // namespace dtop
