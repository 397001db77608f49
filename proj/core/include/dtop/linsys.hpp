#pragma once

#include <optional>
#include <vector>

#include "dtop/rational.hpp"

namespace dtop {

/// One linear inequality sum_k coeffs[k] * x_k (<= | <) bound.
struct Inequality {
  std::vector<Rat> coeffs;
  Rat bound;
  bool strict = false;
};

/// A system of mixed strict/non-strict linear inequalities over exact
/// rationals, decided by Fourier-Motzkin elimination. Strictness flags are
/// carried through combinations exactly (a combination is strict iff either
/// parent is), so open conditions need no epsilon tuning.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }

  /// coeffs . x <= b (or < b when strict).
  void add_le(std::vector<Rat> coeffs, Rat bound, bool strict = false);
  /// coeffs . x >= b (or > b when strict).
  void add_ge(std::vector<Rat> coeffs, Rat bound, bool strict = false);
  /// coeffs . x == b.
  void add_eq(std::vector<Rat> coeffs, Rat bound);

  const std::vector<Inequality>& rows() const { return rows_; }

  /// Feasibility over the rationals; when feasible, returns one exact
  /// solution obtained by back-substitution through the elimination stack.
  std::optional<std::vector<Rat>> solve() const;

  bool feasible() const { return solve().has_value(); }

 private:
  std::size_t num_vars_;
  std::vector<Inequality> rows_;
};

}  // namespace dtop
