#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dtop/dpath.hpp"
#include "dtop/precubical.hpp"
#include "dtop/rational.hpp"
#include "dtop/reparam.hpp"

namespace testutil {

using namespace dtop;

struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  Rat positive_rational(int max_num = 6, int max_den = 6) {
    return rat(uniform(1, max_num), uniform(1, max_den));
  }
  // Strictly inside (0, 1).
  Rat interior_rational(int max_den = 12) {
    const int q = uniform(2, max_den);
    return rat(uniform(1, q - 1), q);
  }
  // In [0, 1].
  Rat unit_rational(int max_den = 12) {
    const int q = uniform(1, max_den);
    return rat(uniform(0, q), q);
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
  }
};

// ---- complexes ----

inline Word random_word(Rng& rng, int length, int max_stars, int min_stars = 1) {
  Word w(static_cast<std::size_t>(length), '0');
  int stars = rng.uniform(min_stars, max_stars);
  std::vector<int> positions(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) positions[static_cast<std::size_t>(i)] = i;
  std::shuffle(positions.begin(), positions.end(), rng.eng);
  for (int s = 0; s < stars; ++s) w[static_cast<std::size_t>(positions[static_cast<std::size_t>(s)])] = '*';
  for (int i = 0; i < length; ++i)
    if (w[static_cast<std::size_t>(i)] != '*') w[static_cast<std::size_t>(i)] = rng.chance(50) ? '1' : '0';
  return w;
}

// A face-closed subcomplex of the word model of the 4-cube with cells of
// dimension <= 3; at most ~50 cells.
inline PrecubicalSet random_word_complex(Rng& rng) {
  const PrecubicalSet ambient = standard_cube(4);
  const auto close = [](std::vector<Word> stack) {
    std::set<Word> closed;
    while (!stack.empty()) {
      Word w = stack.back();
      stack.pop_back();
      if (!closed.insert(w).second) continue;
      for (int i = 1; i <= word_dim(w); ++i)
        for (int alpha = 0; alpha <= 1; ++alpha) stack.push_back(word_face(w, i, alpha));
    }
    return closed;
  };
  std::vector<Word> generators;
  const int count = rng.uniform(1, 2);
  for (int g = 0; g < count; ++g) generators.push_back(random_word(rng, 4, 3));
  std::set<Word> closed = close(generators);
  if (closed.size() > 50) closed = close({generators.front()});
  std::map<CellId, Cell> cells;
  for (const Word& w : closed) cells[word_id(w)] = ambient.at(word_id(w));
  return PrecubicalSet(std::move(cells));
}

// Two copies of the standard d-cube glued along the face closure of one word.
inline PrecubicalSet random_glued_complex(Rng& rng) {
  const int d = rng.uniform(2, 3);
  const PrecubicalSet cube = standard_cube(d);
  const Word seed = random_word(rng, d, d - 1, d - 1);  // glue along a facet closure
  std::set<CellId> A;
  std::vector<Word> stack{seed};
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    if (!A.insert(word_id(w)).second) continue;
    for (int i = 1; i <= word_dim(w); ++i)
      for (int alpha = 0; alpha <= 1; ++alpha) stack.push_back(word_face(w, i, alpha));
  }
  std::map<CellId, CellId> inclusion;
  for (const CellId& a : A) inclusion[a] = a;
  return pushout(cube, A, inclusion, cube).set;
}

inline PrecubicalSet random_complex(Rng& rng) {
  return rng.chance(30) ? random_glued_complex(rng) : random_word_complex(rng);
}

// ---- paths ----

struct LegChoice {
  CellId cube;
  Corner from, to;
  CellId source, target;
};

inline std::vector<LegChoice> all_leg_choices(const PrecubicalSet& K) {
  std::vector<LegChoice> out;
  for (const auto& [id, cell] : K.cells()) {
    if (cell.dim < 1) continue;
    const int d = cell.dim;
    for (int a = 0; a < (1 << d); ++a)
      for (int b = 0; b < (1 << d); ++b) {
        if (a == b || (a & b) != a) continue;  // need a <= b bitwise, a != b
        Corner ca(static_cast<std::size_t>(d), '0'), cb(static_cast<std::size_t>(d), '0');
        for (int i = 0; i < d; ++i) {
          if (a & (1 << i)) ca[static_cast<std::size_t>(i)] = '1';
          if (b & (1 << i)) cb[static_cast<std::size_t>(i)] = '1';
        }
        out.push_back({id, ca, cb, vertex_of(K, id, ca), vertex_of(K, id, cb)});
      }
  }
  return out;
}

// A random monotone track from `from` to `to` over a random duration, with
// occasional interior breakpoints and stops.
inline Leg random_leg(Rng& rng, const LegChoice& choice) {
  Leg leg;
  leg.cube = choice.cube;
  leg.from = choice.from;
  leg.to = choice.to;
  const std::vector<Rat> a = corner_coords(choice.from);
  const std::vector<Rat> b = corner_coords(choice.to);
  const std::size_t d = a.size();

  // Monotone interior positions.
  std::vector<std::vector<Rat>> xs{a};
  const int interior = rng.uniform(0, 3);
  std::vector<std::vector<Rat>> columns(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == b[i]) {
      columns[i].assign(static_cast<std::size_t>(interior), a[i]);
      continue;
    }
    for (int k = 0; k < interior; ++k) columns[i].push_back(rng.unit_rational());
    std::sort(columns[i].begin(), columns[i].end());
  }
  for (int k = 0; k < interior; ++k) {
    std::vector<Rat> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = columns[i][static_cast<std::size_t>(k)];
    xs.push_back(std::move(x));
  }
  xs.push_back(b);

  // A stop: duplicate one position (time advances, point does not).
  if (rng.chance(35)) {
    const std::size_t at = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(xs.size()) - 1));
    xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(at) + 1, xs[at]);
  }

  // Strictly increasing times.
  const Rat duration = rng.positive_rational(4, 3);
  std::vector<Rat> times{Rat(0)};
  for (std::size_t k = 1; k + 1 < xs.size(); ++k)
    times.push_back(times.back() + (duration - times.back()) * rat(1, rng.uniform(2, 5)));
  times.push_back(duration);
  for (std::size_t k = 0; k < xs.size(); ++k) leg.track.push_back({times[k], xs[k]});
  return leg;
}

// Random tame path starting at `start` (or anywhere when nullopt); empty
// optional if the complex carries no legs.
inline std::optional<TameDPath> random_path(Rng& rng, const PrecubicalSet& K,
                                            std::optional<CellId> start = std::nullopt,
                                            int max_legs = 4) {
  const std::vector<LegChoice> choices = all_leg_choices(K);
  if (choices.empty()) return std::nullopt;
  std::map<CellId, std::vector<LegChoice>> by_source;
  for (const LegChoice& c : choices) by_source[c.source].push_back(c);
  CellId at;
  if (start) {
    if (!by_source.count(*start)) return std::nullopt;
    at = *start;
  } else {
    std::vector<CellId> sources;
    for (const auto& [v, list] : by_source) sources.push_back(v);
    at = rng.pick(sources);
  }
  TameDPath path;
  const int want = rng.uniform(1, max_legs);
  for (int i = 0; i < want; ++i) {
    auto it = by_source.find(at);
    if (it == by_source.end()) break;
    const LegChoice& c = rng.pick(it->second);
    path.legs.push_back(random_leg(rng, c));
    at = c.target;
  }
  if (path.legs.empty()) return std::nullopt;
  return canonicalize(path);
}

// ---- reparametrizations ----

inline Reparam random_reparam(Rng& rng, const Rat& src_len, const Rat& dst_len) {
  const int interior = rng.uniform(0, 4);
  std::vector<Rat> times{Rat(0)};
  for (int k = 0; k < interior; ++k)
    times.push_back(times.back() + (src_len - times.back()) * rat(1, rng.uniform(2, 5)));
  times.push_back(src_len);
  std::vector<Rat> values;
  for (int k = 0; k < interior; ++k) values.push_back(dst_len * rng.unit_rational());
  std::sort(values.begin(), values.end());
  // Duplicated interior values create stops.
  if (interior >= 2 && rng.chance(50)) values[static_cast<std::size_t>(rng.uniform(1, interior - 1))] =
      values[static_cast<std::size_t>(rng.uniform(0, interior - 2))];
  std::sort(values.begin(), values.end());
  std::vector<RBreak> pts;
  pts.push_back({Rat(0), Rat(0)});
  for (int k = 0; k < interior; ++k) pts.push_back({times[static_cast<std::size_t>(k) + 1], values[static_cast<std::size_t>(k)]});
  pts.push_back({src_len, dst_len});
  return Reparam::from_breakpoints(std::move(pts));
}

// ---- independent oracles ----

// Total arc length computed from corner data alone.
inline Rat corner_route_length(const TameDPath& path) {
  Rat total = 0;
  for (const Leg& leg : path.legs) total += corner_l1(leg.from, leg.to);
  return total;
}

}  // namespace testutil
