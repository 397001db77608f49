#include "dtop/linsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtop {

void LinearSystem::add_le(std::vector<Rat> coeffs, Rat bound, bool strict) {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("LinearSystem: bad row width");
  rows_.push_back({std::move(coeffs), std::move(bound), strict});
}

void LinearSystem::add_ge(std::vector<Rat> coeffs, Rat bound, bool strict) {
  for (Rat& c : coeffs) c = -c;
  add_le(std::move(coeffs), -bound, strict);
}

void LinearSystem::add_eq(std::vector<Rat> coeffs, Rat bound) {
  add_le(coeffs, bound, false);
  add_ge(std::move(coeffs), std::move(bound), false);
}

namespace {

struct Row {
  std::vector<Rat> coeffs;
  Rat bound;
  bool strict;
};

bool row_equal(const Row& a, const Row& b) {
  return a.strict == b.strict && a.bound == b.bound && a.coeffs == b.coeffs;
}

// Drops exact duplicates; keeps the system small enough for the chain-shaped
// inputs this library produces.
void dedupe(std::vector<Row>& rows) {
  std::vector<Row> out;
  for (Row& r : rows) {
    bool seen = false;
    for (const Row& o : out)
      if (row_equal(r, o)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(r));
  }
  rows = std::move(out);
}

}  // namespace

std::optional<std::vector<Rat>> LinearSystem::solve() const {
  const std::size_t n = num_vars_;
  std::vector<Row> cur;
  cur.reserve(rows_.size());
  for (const Inequality& iq : rows_) cur.push_back({iq.coeffs, iq.bound, iq.strict});

  // stages[j] is the system before eliminating variable j (vars 0..j live).
  std::vector<std::vector<Row>> stages(n);
  for (std::size_t j = n; j-- > 0;) {
    stages[j] = cur;
    std::vector<Row> next;
    std::vector<Row> lowers, uppers;
    for (const Row& r : cur) {
      const Rat& c = r.coeffs[j];
      if (c == 0)
        next.push_back(r);
      else if (c > 0)
        uppers.push_back(r);
      else
        lowers.push_back(r);
    }
    for (const Row& lo : lowers) {
      for (const Row& up : uppers) {
        Row comb;
        comb.coeffs.resize(n, Rat(0));
        const Rat ls = -lo.coeffs[j];  // > 0
        const Rat us = up.coeffs[j];   // > 0
        for (std::size_t k = 0; k < n; ++k)
          comb.coeffs[k] = lo.coeffs[k] / ls + up.coeffs[k] / us;
        comb.bound = lo.bound / ls + up.bound / us;
        comb.strict = lo.strict || up.strict;
        comb.coeffs[j] = 0;
        next.push_back(std::move(comb));
      }
    }
    dedupe(next);
    cur = std::move(next);
  }

  // Variable-free residue: every row must read 0 (<|<=) bound.
  for (const Row& r : cur) {
    if (r.strict ? !(r.bound > 0) : !(r.bound >= 0)) return std::nullopt;
  }

  // Back-substitute, assigning x_0, x_1, ... in order from the recorded stages.
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo(0), hi(0);
    for (const Row& r : stages[j]) {
      const Rat& c = r.coeffs[j];
      if (c == 0) continue;
      Rat rest = r.bound;
      for (std::size_t k = 0; k < j; ++k) rest -= r.coeffs[k] * x[k];
      // Variables above j are already eliminated in stages[j].
      Rat b = rest / c;
      if (c > 0) {  // x_j <= b
        if (!has_hi || b < hi) {
          hi = b;
          hi_strict = r.strict;
        } else if (b == hi) {
          hi_strict = hi_strict || r.strict;
        }
        has_hi = true;
      } else {  // x_j >= b
        if (!has_lo || b > lo) {
          lo = b;
          lo_strict = r.strict;
        } else if (b == lo) {
          lo_strict = lo_strict || r.strict;
        }
        has_lo = true;
      }
    }
    if (has_lo && has_hi) {
      // lo == hi forces both bounds non-strict, or elimination would have
      // reported infeasibility.
      x[j] = (lo == hi) ? lo : Rat((lo + hi) / 2);
    } else if (has_lo) {
      x[j] = lo_strict ? Rat(lo + 1) : lo;
    } else if (has_hi) {
      x[j] = hi_strict ? Rat(hi - 1) : hi;
    } else {
      x[j] = 0;
    }
  }
  return x;
}

}  // namespace dtop
