#include "dtop/spatial.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace dtop {

namespace {

// Per-coordinate status transition table between consecutive open cells of
// an itinerary. Monotone paths can only keep a status or move it forward
// (0 -> free -> 1), and a direct 0 -> 1 jump has empty closed intersection.
bool step_allowed(char prev, char next) {
  if (prev == next) return true;
  if (prev == '0' && next == '*') return true;
  if (prev == '*' && next == '1') return true;
  return false;
}

// Meet of the closed faces of two words; nullopt if disjoint.
std::optional<Word> closed_meet(const Word& a, const Word& b) {
  Word out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i] == '*')
      out[i] = b[i];
    else if (b[i] == '*')
      out[i] = a[i];
    else
      return std::nullopt;  // {0} meets {1}
  }
  return out;
}

bool has_char(const Word& w, char c) { return w.find(c) != std::string::npos; }

}  // namespace

std::optional<FeasibilitySystem> feasibility_system(const Itinerary& itinerary,
                                                    const std::vector<int>& witness_coords) {
  const int n = itinerary.n;
  const std::size_t m = itinerary.cells.size();
  if (m < 2 || witness_coords.size() != m - 1) return std::nullopt;
  std::vector<Word> meets;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    auto meet = closed_meet(itinerary.cells[j], itinerary.cells[j + 1]);
    if (!meet) return std::nullopt;
    meets.push_back(std::move(*meet));
  }

  FeasibilitySystem fs;
  fs.n = n;
  fs.segments = m;
  fs.var_index.assign(m - 1, std::vector<int>(static_cast<std::size_t>(n), -1));
  fs.pinned.assign(m - 1, std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  std::size_t num_vars = 0;
  for (std::size_t j = 0; j + 1 < m; ++j)
    for (int i = 0; i < n; ++i) {
      const char c = meets[j][static_cast<std::size_t>(i)];
      if (c == '*')
        fs.var_index[j][static_cast<std::size_t>(i)] = static_cast<int>(num_vars++);
      else
        fs.pinned[j][static_cast<std::size_t>(i)] = Rat(c == '1' ? 1 : 0);
    }

  LinearSystem sys(num_vars);
  auto unit_row = [&](int var) {
    std::vector<Rat> row(num_vars, Rat(0));
    row[static_cast<std::size_t>(var)] = 1;
    return row;
  };
  // Value of coordinate i of p_j when pinned; nullopt when it is a variable.
  auto pinned_value = [&](std::size_t j, int i) -> std::optional<Rat> {
    if (j == 0) return Rat(0);
    if (j == m) return Rat(1);
    if (fs.var_index[j - 1][static_cast<std::size_t>(i)] >= 0) return std::nullopt;
    return fs.pinned[j - 1][static_cast<std::size_t>(i)];
  };
  auto var_of = [&](std::size_t j, int i) -> int {
    return fs.var_index[j - 1][static_cast<std::size_t>(i)];
  };

  for (std::size_t j = 1; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      if (pinned_value(j, i)) continue;
      const int v = var_of(j, i);
      sys.add_ge(unit_row(v), Rat(0));
      sys.add_le(unit_row(v), Rat(1));
    }
  // Chain order p_{j-1} <= p_j coordinatewise, constants folded in.
  for (std::size_t j = 1; j <= m; ++j)
    for (int i = 0; i < n; ++i) {
      auto lo = pinned_value(j - 1, i);
      auto hi = pinned_value(j, i);
      if (lo && hi) {
        if (*lo > *hi) return std::nullopt;
        continue;
      }
      // p_{j,i} - p_{j-1,i} >= 0 with pinned values folded into the bound.
      std::vector<Rat> row(num_vars, Rat(0));
      Rat bound = 0;
      if (lo)
        bound += *lo;
      else
        row[static_cast<std::size_t>(var_of(j - 1, i))] -= 1;
      if (hi)
        bound -= *hi;
      else
        row[static_cast<std::size_t>(var_of(j, i))] += 1;
      sys.add_ge(std::move(row), std::move(bound));
    }
  // Interior witness: 0 < p_{j, w_j} < 1 strictly.
  for (std::size_t j = 1; j < m; ++j) {
    const int i = witness_coords[j - 1];
    if (i < 0 || i >= n || pinned_value(j, i)) return std::nullopt;
    const int v = var_of(j, i);
    sys.add_ge(unit_row(v), Rat(0), /*strict=*/true);
    sys.add_le(unit_row(v), Rat(1), /*strict=*/true);
  }
  fs.system = std::move(sys);
  return fs;
}

std::optional<std::vector<std::vector<Rat>>> transition_points(const FeasibilitySystem& fs) {
  const auto solution = fs.system.solve();
  if (!solution) return std::nullopt;
  std::vector<std::vector<Rat>> points;
  points.push_back(std::vector<Rat>(static_cast<std::size_t>(fs.n), Rat(0)));
  for (std::size_t j = 0; j + 1 < fs.segments; ++j) {
    std::vector<Rat> p(static_cast<std::size_t>(fs.n));
    for (int i = 0; i < fs.n; ++i) {
      const int v = fs.var_index[j][static_cast<std::size_t>(i)];
      p[static_cast<std::size_t>(i)] =
          v >= 0 ? (*solution)[static_cast<std::size_t>(v)] : fs.pinned[j][static_cast<std::size_t>(i)];
    }
    points.push_back(std::move(p));
  }
  points.push_back(std::vector<Rat>(static_cast<std::size_t>(fs.n), Rat(1)));
  return points;
}

namespace {

// Tries every witness-coordinate assignment for the itinerary.
std::optional<std::vector<std::vector<Rat>>> solve_itinerary(const Itinerary& itin) {
  const std::size_t m = itin.cells.size();
  std::vector<Word> meets;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    auto meet = closed_meet(itin.cells[j], itin.cells[j + 1]);
    if (!meet) return std::nullopt;
    meets.push_back(std::move(*meet));
  }
  if (m == 1) {
    // Single open cell: both extreme corners must lie in its closure and the
    // cell would need no fixed coordinate, which proper faces never satisfy.
    if (has_char(itin.cells[0], '0') || has_char(itin.cells[0], '1')) return std::nullopt;
    return std::vector<std::vector<Rat>>{
        std::vector<Rat>(static_cast<std::size_t>(itin.n), Rat(0)),
        std::vector<Rat>(static_cast<std::size_t>(itin.n), Rat(1))};
  }
  // Candidate witness coordinates per transition: the free coordinates of
  // each meet.
  std::vector<std::vector<int>> candidates(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    for (int i = 0; i < itin.n; ++i)
      if (meets[j][static_cast<std::size_t>(i)] == '*') candidates[j].push_back(i);
    if (candidates[j].empty()) return std::nullopt;  // transition point forced onto a vertex
  }
  std::vector<std::size_t> pick(m - 1, 0);
  while (true) {
    std::vector<int> witness(m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) witness[j] = candidates[j][pick[j]];
    if (auto fs = feasibility_system(itin, witness))
      if (auto points = transition_points(*fs)) return points;
    std::size_t j = 0;
    for (; j + 1 < m; ++j) {
      if (++pick[j] < candidates[j].size()) break;
      pick[j] = 0;
    }
    if (j + 1 >= m) break;
  }
  return std::nullopt;
}

BnResult search(const BoundarySubcomplex& A, bool prune_status) {
  const int n = A.n();
  if (n < 2 || n > 4) throw std::invalid_argument("in_Bn: supported for 2 <= n <= 4");

  const std::vector<Word> cells = A.open_cells();
  const std::size_t max_len = static_cast<std::size_t>(2 * n + 1);

  // Depth-first over cell sequences in word order, shortest first.
  std::vector<Word> current;
  std::optional<BnWitness> found;

  auto extend_ok = [&](const Word& next) {
    if (std::find(current.begin(), current.end(), next) != current.end()) return false;
    if (current.empty()) return !has_char(next, '1');  // bottom corner in closure
    const Word& prev = current.back();
    for (std::size_t i = 0; i < next.size(); ++i)
      if (prune_status ? !step_allowed(prev[i], next[i])
                       : (prev[i] != '*' && next[i] != '*' && prev[i] != next[i]))
        return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t target_len) -> bool {
    if (current.size() == target_len) {
      if (has_char(current.back(), '0')) return false;  // top corner not in closure
      Itinerary itin{n, current};
      if (auto points = solve_itinerary(itin)) {
        found = BnWitness{std::move(itin), std::move(*points)};
        return true;
      }
      return false;
    }
    for (const Word& next : cells) {
      if (!extend_ok(next)) continue;
      current.push_back(next);
      if (self(self, target_len)) return true;
      current.pop_back();
    }
    return false;
  };

  for (std::size_t len = 1; len <= max_len; ++len) {
    current.clear();
    if (dfs(dfs, len)) return {true, std::move(found)};
  }
  return {false, std::nullopt};
}

}  // namespace

BnResult in_Bn(const BoundarySubcomplex& A) { return search(A, /*prune_status=*/true); }

BnResult in_Bn_unpruned(const BoundarySubcomplex& A) { return search(A, /*prune_status=*/false); }

SpatialResult is_spatial(const PrecubicalSet& K, int threads) {
  const int maxdim = K.max_dimension();
  if (maxdim > 4)
    throw std::invalid_argument("is_spatial: exact checking supports dimension <= 4");

  std::vector<std::pair<CellId, CellId>> pairs;
  for (int n = 3; n <= maxdim; ++n) {
    const std::vector<CellId> cubes = K.cells_of_dim(n);
    for (std::size_t a = 0; a < cubes.size(); ++a)
      for (std::size_t b = a + 1; b < cubes.size(); ++b) pairs.emplace_back(cubes[a], cubes[b]);
  }

  auto check = [&](const std::pair<CellId, CellId>& pr) -> std::optional<SpatialWitness> {
    BoundarySubcomplex agree = agreement_subcomplex(K, pr.first, pr.second);
    if (agree.empty()) return std::nullopt;
    if (!in_Bn(agree).member) return std::nullopt;
    return SpatialWitness{pr.first, pr.second, K.dim(pr.first), std::move(agree)};
  };

  std::vector<std::optional<SpatialWitness>> results(pairs.size());
  if (threads <= 1 || pairs.size() <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) results[i] = check(pairs[i]);
  } else {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), pairs.size());
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w]() {
        for (std::size_t i = w; i < pairs.size(); i += workers) results[i] = check(pairs[i]);
      }));
    }
    for (auto& f : futures) f.get();
  }

  SpatialResult out;
  for (auto& r : results)
    if (r) out.witnesses.push_back(std::move(*r));
  out.spatial = out.witnesses.empty();
  return out;
}

}  // namespace dtop
