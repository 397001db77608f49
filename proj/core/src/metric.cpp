#include "dtop/metric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace dtop {

Rat d1_cube(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("d1_cube: dimension mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += rat_abs(x[i] - y[i]);
  return sum;
}

namespace {

// All face words of e, indexed by the cells they reach.
std::map<CellId, std::vector<Word>> face_occurrences(const PrecubicalSet& K, const CellId& e) {
  std::map<CellId, std::vector<Word>> occ;
  const int d = K.dim(e);
  std::vector<Word> words{Word(static_cast<std::size_t>(d), '*')};
  // Generate words by fixing stars; reachable via BFS over specializations.
  std::map<Word, CellId> seen;
  std::vector<Word> stack = words;
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    if (seen.count(w)) continue;
    CellId target = K.iterated_face(e, w);
    seen.emplace(w, target);
    const int wd = word_dim(w);
    for (int i = 1; i <= wd; ++i)
      for (int alpha = 0; alpha <= 1; ++alpha) stack.push_back(word_face(w, i, alpha));
  }
  for (auto& [w, target] : seen) occ[target].push_back(w);
  return occ;
}

// Embeds a canonical point with the given carrier into the coordinates of a
// cube along one face occurrence word.
std::vector<Rat> lift(const Word& w, const std::vector<Rat>& coords) {
  std::vector<Rat> out;
  out.reserve(w.size());
  std::size_t k = 0;
  for (char ch : w) {
    if (ch == '*')
      out.push_back(coords[k++]);
    else
      out.emplace_back(ch == '1' ? 1 : 0);
  }
  return out;
}

void check_point(const PrecubicalSet& K, const Point& p, const char* label) {
  if (!K.has(p.carrier))
    throw std::invalid_argument(std::string("d1_upper: unknown carrier of ") + label);
  if (static_cast<int>(p.coords.size()) != K.dim(p.carrier))
    throw std::invalid_argument(std::string("d1_upper: bad coordinate count of ") + label);
  for (const Rat& c : p.coords)
    if (!(c > 0) || !(c < 1))
      throw std::invalid_argument(std::string("d1_upper: point not canonical: ") + label);
}

}  // namespace

ChainEstimate d1_upper(const PrecubicalSet& K, const Point& p, const Point& q, int max_hops,
                       int grid_denominator) {
  if (max_hops < 1) throw std::invalid_argument("d1_upper: max_hops must be positive");
  if (grid_denominator < 1) throw std::invalid_argument("d1_upper: grid denominator must be positive");
  check_point(K, p, "p");
  check_point(K, q, "q");
  if (p == q) return {Rat(0), {}};

  // Occurrence tables for every cell.
  std::map<CellId, std::map<CellId, std::vector<Word>>> occ;
  for (const auto& [id, cell] : K.cells()) occ[id] = face_occurrences(K, id);

  // Cells appearing as a proper face of some other cell carry waypoints.
  std::set<CellId> shared;
  for (const auto& [id, table] : occ)
    for (const auto& [target, words] : table)
      if (target != id) shared.insert(target);

  std::vector<Point> nodes{p, q};
  for (const CellId& c : shared) {
    const int d = K.dim(c);
    if (d == 0) {
      nodes.push_back({c, {}});
      continue;
    }
    // Interior grid points of the shared face.
    std::vector<std::vector<Rat>> pts{{}};
    for (int axis = 0; axis < d; ++axis) {
      std::vector<std::vector<Rat>> next;
      for (const auto& prefix : pts)
        for (int k = 1; k < grid_denominator; ++k) {
          auto ext = prefix;
          ext.push_back(rat(k, grid_denominator));
          next.push_back(std::move(ext));
        }
      pts = std::move(next);
    }
    for (auto& coords : pts) nodes.push_back({c, std::move(coords)});
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  const std::size_t N = nodes.size();
  auto index_of = [&](const Point& pt) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), pt) - nodes.begin());
  };
  const std::size_t src = index_of(p);
  const std::size_t dst = index_of(q);

  // Hop weight: least d1 over cubes containing both points, over all face
  // occurrences of their carriers.
  auto hop = [&](const Point& a, const Point& b) -> std::optional<Rat> {
    std::optional<Rat> best;
    for (const auto& [e, table] : occ) {
      auto ia = table.find(a.carrier);
      auto ib = table.find(b.carrier);
      if (ia == table.end() || ib == table.end()) continue;
      for (const Word& wa : ia->second) {
        const auto xa = lift(wa, a.coords);
        for (const Word& wb : ib->second) {
          const Rat d = d1_cube(xa, lift(wb, b.coords));
          if (!best || d < *best) best = d;
        }
      }
    }
    return best;
  };

  std::vector<std::vector<std::optional<Rat>>> weight(N, std::vector<std::optional<Rat>>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      weight[i][j] = hop(nodes[i], nodes[j]);
      weight[j][i] = weight[i][j];
    }

  // Bounded-hop shortest chain. table[h][j]: best distance from src to j
  // using at most h hops. Carry-over makes rows nonincreasing in h.
  const std::size_t H = static_cast<std::size_t>(max_hops);
  std::vector<std::vector<std::optional<Rat>>> table(
      H + 1, std::vector<std::optional<Rat>>(N));
  table[0][src] = Rat(0);
  for (std::size_t h = 1; h <= H; ++h) {
    table[h] = table[h - 1];
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) {
        if (i == j || !table[h - 1][i] || !weight[i][j]) continue;
        Rat cand = *table[h - 1][i] + *weight[i][j];
        if (!table[h][j] || cand < *table[h][j]) table[h][j] = cand;
      }
  }
  if (!table[H][dst]) throw std::invalid_argument("d1_upper: points are not chain-connected");

  // Walk the table backwards; at ties the first node in order wins.
  std::vector<std::size_t> route{dst};
  std::size_t cur = dst;
  std::size_t h = H;
  while (h > 0 && cur != src) {
    if (table[h - 1][cur] && *table[h - 1][cur] == *table[h][cur]) {
      --h;
      continue;
    }
    bool stepped = false;
    for (std::size_t i = 0; i < N; ++i) {
      if (i == cur || !table[h - 1][i] || !weight[i][cur]) continue;
      if (*table[h - 1][i] + *weight[i][cur] == *table[h][cur]) {
        cur = i;
        route.push_back(cur);
        --h;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("d1_upper: chain reconstruction failed");
  }
  std::reverse(route.begin(), route.end());

  ChainEstimate est;
  est.value = *table[H][dst];
  for (std::size_t k = 0; k + 1 < route.size(); ++k)
    est.chain.emplace_back(nodes[route[k]], nodes[route[k + 1]]);
  return est;
}

bool arclength_consistency(const TameDPath& path, const Rat& s, const Rat& t) {
  if (s > t) throw std::invalid_argument("arclength_consistency: need s <= t");
  if (s < 0 || t > path.duration())
    throw std::invalid_argument("arclength_consistency: times out of range");
  // Locate a leg containing [s, t].
  Rat offset = 0;
  const Leg* leg = nullptr;
  Rat ls = 0, lt = 0;
  for (const Leg& candidate : path.legs) {
    const Rat end = offset + candidate.duration();
    if (s >= offset && t <= end) {
      leg = &candidate;
      ls = s - offset;
      lt = t - offset;
      break;
    }
    offset = end;
  }
  if (!leg) throw std::invalid_argument("arclength_consistency: s and t span several legs");

  auto position = [&](const Rat& local) {
    std::vector<Rat> x;
    const auto& tr = leg->track;
    for (std::size_t k = 1; k < tr.size(); ++k) {
      if (local <= tr[k].t || k + 1 == tr.size()) {
        const TrackPoint& a = tr[k - 1];
        const TrackPoint& b = tr[k];
        if (local <= a.t) return a.x;
        if (local >= b.t) return b.x;
        const Rat w = (local - a.t) / (b.t - a.t);
        x.resize(a.x.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = a.x[i] + (b.x[i] - a.x[i]) * w;
        return x;
      }
    }
    return tr.back().x;
  };

  const Rat arc = arc_length(path, t) - arc_length(path, s);
  return arc == d1_cube(position(ls), position(lt));
}

}  // namespace dtop
