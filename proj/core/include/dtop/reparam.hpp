#pragma once

#include <vector>

#include "dtop/rational.hpp"

namespace dtop {

struct RBreak {
  Rat t;
  Rat v;
  bool operator==(const RBreak& o) const { return t == o.t && v == o.v; }
};

/// A morphism of the reparametrization category M: a piecewise-linear
/// nondecreasing surjection [0, src_len] -> [0, dst_len] with exact rational
/// breakpoints, kept in canonical form (no three consecutive collinear
/// breakpoints). Equality of Reparam values is equality of canonical forms.
class Reparam {
 public:
  /// Validates and canonicalizes. Requirements: at least two breakpoints,
  /// t strictly increasing from 0, v nondecreasing from 0, final t and v
  /// positive. Throws std::invalid_argument otherwise.
  static Reparam from_breakpoints(std::vector<RBreak> pts);

  static Reparam identity(const Rat& len);
  /// The single-segment map [0, src] -> [0, dst].
  static Reparam linear(const Rat& src, const Rat& dst);

  const std::vector<RBreak>& breakpoints() const { return pts_; }
  Rat src_len() const { return pts_.back().t; }
  Rat dst_len() const { return pts_.back().v; }

  /// Exact PL interpolation; t must lie in [0, src_len].
  Rat eval(const Rat& t) const;

  bool operator==(const Reparam&) const = default;

 private:
  Reparam() = default;
  std::vector<RBreak> pts_;
};

/// The composite psi . phi in M(phi.src_len, psi.dst_len).
/// Requires phi.dst_len == psi.src_len.
Reparam compose(const Reparam& phi, const Reparam& psi);

/// Concatenation: a on [0, a.src_len], then b shifted by (a.src_len,
/// a.dst_len). Lands in M(a.src+b.src, a.dst+b.dst).
Reparam tensor(const Reparam& a, const Reparam& b);

/// True iff the map is strictly increasing on every segment (no stops),
/// i.e. a morphism of the subcategory G.
bool is_regular(const Reparam& phi);

}  // namespace dtop
