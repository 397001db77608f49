#pragma once

#include <utility>
#include <vector>

#include "dtop/dpath.hpp"
#include "dtop/precubical.hpp"
#include "dtop/rational.hpp"

namespace dtop {

/// The d1 (taxicab) distance between two rational points of [0,1]^n.
Rat d1_cube(const std::vector<Rat>& x, const std::vector<Rat>& y);

/// A certified upper bound for the quotient pseudometric: the value is the
/// total d1 length of a concrete chain of same-cube hops whose consecutive
/// endpoints are the same point of the realization.
struct ChainEstimate {
  Rat value;
  std::vector<std::pair<Point, Point>> chain;
};

/// Minimum over chains of at most max_hops same-cube hops between p and q,
/// with intermediate waypoints restricted to vertices and grid points (of
/// the given denominator) on faces shared between cells. Monotonically
/// nonincreasing in max_hops and in grid refinement. Throws on invalid
/// points or nonpositive parameters.
ChainEstimate d1_upper(const PrecubicalSet& K, const Point& p, const Point& q, int max_hops,
                       int grid_denominator = 8);

/// True iff the arc length accrued on [s, t] equals the d1 distance between
/// the two positions; s <= t must lie within a single leg (throws
/// otherwise). Holds for every monotone track.
bool arclength_consistency(const TameDPath& path, const Rat& s, const Rat& t);

}  // namespace dtop
