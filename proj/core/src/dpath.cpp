#include "dtop/dpath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dtop {

bool operator<(const Point& a, const Point& b) {
  if (a.carrier != b.carrier) return a.carrier < b.carrier;
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

std::vector<Rat> corner_coords(const Corner& c) {
  std::vector<Rat> out;
  out.reserve(c.size());
  for (char ch : c) out.emplace_back(ch == '1' ? 1 : 0);
  return out;
}

Rat TameDPath::duration() const {
  Rat total = 0;
  for (const Leg& leg : legs) total += leg.duration();
  return total;
}

namespace {

Rat leg_arc_length(const Leg& leg) {
  Rat total = 0;
  for (std::size_t k = 1; k < leg.track.size(); ++k)
    for (std::size_t i = 0; i < leg.track[k].x.size(); ++i)
      total += leg.track[k].x[i] - leg.track[k - 1].x[i];
  return total;
}

bool track_collinear(const TrackPoint& p, const TrackPoint& q, const TrackPoint& r) {
  const Rat dqp = q.t - p.t;
  const Rat drq = r.t - q.t;
  for (std::size_t i = 0; i < p.x.size(); ++i)
    if (dqp * (r.x[i] - q.x[i]) != drq * (q.x[i] - p.x[i])) return false;
  return true;
}

void merge_collinear(Leg& leg) {
  std::vector<TrackPoint> out;
  for (TrackPoint& p : leg.track) {
    while (out.size() >= 2 && track_collinear(out[out.size() - 2], out.back(), p))
      out.pop_back();
    out.push_back(std::move(p));
  }
  leg.track = std::move(out);
}

// Linear interpolation inside one leg at local time t.
std::vector<Rat> leg_position(const Leg& leg, const Rat& t) {
  const auto& tr = leg.track;
  std::size_t lo = 0, hi = tr.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (tr[mid].t <= t)
      lo = mid;
    else
      hi = mid;
  }
  const TrackPoint& a = tr[lo];
  const TrackPoint& b = tr[lo + 1];
  if (t == b.t) return b.x;
  if (t == a.t) return a.x;
  std::vector<Rat> x(a.x.size());
  const Rat w = (t - a.t) / (b.t - a.t);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = a.x[i] + (b.x[i] - a.x[i]) * w;
  return x;
}

}  // namespace

std::vector<PathViolation> validate_path(const PrecubicalSet& K, const TameDPath& path) {
  std::vector<PathViolation> report;
  if (path.legs.empty()) {
    report.push_back({-1, "empty", "path has no legs"});
    return report;
  }
  for (std::size_t li = 0; li < path.legs.size(); ++li) {
    const Leg& leg = path.legs[li];
    const int idx = static_cast<int>(li);
    if (!K.has(leg.cube)) {
      report.push_back({idx, "missing-cube", "cube " + leg.cube + " not in complex"});
      continue;
    }
    const int d = K.dim(leg.cube);
    if (d < 1) {
      report.push_back({idx, "bad-cube", "cube " + leg.cube + " has dimension 0"});
      continue;
    }
    if (static_cast<int>(leg.from.size()) != d || static_cast<int>(leg.to.size()) != d ||
        !is_corner(leg.from) || !is_corner(leg.to)) {
      report.push_back({idx, "bad-corner", "corners must be bitstrings of length dim"});
      continue;
    }
    if (!corner_leq(leg.from, leg.to) || leg.from == leg.to)
      report.push_back({idx, "corner-order", "need from <= to coordinatewise and from != to"});
    if (leg.track.size() < 2) {
      report.push_back({idx, "track", "track needs at least two points"});
      continue;
    }
    if (leg.track.front().t != 0)
      report.push_back({idx, "track", "track must start at time 0"});
    bool shape_ok = true;
    for (std::size_t k = 0; k < leg.track.size(); ++k) {
      if (static_cast<int>(leg.track[k].x.size()) != d) {
        report.push_back({idx, "track", "track point dimension mismatch"});
        shape_ok = false;
        break;
      }
      for (const Rat& c : leg.track[k].x)
        if (c < 0 || c > 1) {
          report.push_back({idx, "track", "track coordinate outside [0,1]"});
          shape_ok = false;
        }
      if (k > 0) {
        if (!(leg.track[k - 1].t < leg.track[k].t)) {
          report.push_back({idx, "track", "track times must strictly increase"});
          shape_ok = false;
          break;
        }
        for (std::size_t i = 0; i < leg.track[k].x.size(); ++i)
          if (leg.track[k].x[i] < leg.track[k - 1].x[i]) {
            report.push_back({idx, "monotone", "track is not coordinatewise nondecreasing"});
            shape_ok = false;
          }
      }
    }
    if (!shape_ok) continue;
    if (leg.track.front().x != corner_coords(leg.from))
      report.push_back({idx, "endpoint", "track does not start at the from corner"});
    if (leg.track.back().x != corner_coords(leg.to))
      report.push_back({idx, "endpoint", "track does not end at the to corner"});
  }
  // Junction identities in K_0.
  for (std::size_t li = 0; li + 1 < path.legs.size(); ++li) {
    const Leg& a = path.legs[li];
    const Leg& b = path.legs[li + 1];
    if (!K.has(a.cube) || !K.has(b.cube)) continue;
    if (static_cast<int>(a.to.size()) != K.dim(a.cube) ||
        static_cast<int>(b.from.size()) != K.dim(b.cube) || !is_corner(a.to) ||
        !is_corner(b.from))
      continue;
    if (vertex_of(K, a.cube, a.to) != vertex_of(K, b.cube, b.from)) {
      std::ostringstream os;
      os << "legs " << li << " and " << li + 1 << " meet at different vertices";
      report.push_back({static_cast<int>(li), "junction", os.str()});
    }
  }
  return report;
}

TameDPath canonicalize(const TameDPath& path) {
  TameDPath out = path;
  for (Leg& leg : out.legs) merge_collinear(leg);
  // A stop sitting at a junction belongs to the earlier leg.
  for (std::size_t li = 0; li + 1 < out.legs.size(); ++li) {
    Leg& cur = out.legs[li];
    Leg& next = out.legs[li + 1];
    std::size_t k = 0;
    while (k + 1 < next.track.size() && next.track[k + 1].x == next.track.front().x) ++k;
    if (k == 0) continue;
    const Rat shift = next.track[k].t;
    next.track.erase(next.track.begin(), next.track.begin() + static_cast<std::ptrdiff_t>(k));
    for (TrackPoint& p : next.track) p.t -= shift;
    cur.track.push_back({cur.duration() + shift, corner_coords(cur.to)});
    merge_collinear(cur);
  }
  return out;
}

Point canonical_point(const PrecubicalSet& K, const CellId& carrier, std::vector<Rat> coords) {
  if (static_cast<int>(coords.size()) != K.dim(carrier))
    throw std::invalid_argument("canonical_point: coordinate count != carrier dimension");
  Point p;
  p.carrier = carrier;
  for (int i = static_cast<int>(coords.size()); i >= 1; --i) {
    const Rat& c = coords[static_cast<std::size_t>(i) - 1];
    if (c < 0 || c > 1) throw std::invalid_argument("canonical_point: coordinate outside [0,1]");
    if (c == 0 || c == 1) {
      p.carrier = K.face(p.carrier, i, c == 1 ? 1 : 0);
      coords.erase(coords.begin() + (i - 1));
    }
  }
  p.coords = std::move(coords);
  return p;
}

Point eval(const PrecubicalSet& K, const TameDPath& path, const Rat& t) {
  if (t < 0 || t > path.duration()) throw std::invalid_argument("eval: t out of range");
  Rat offset = 0;
  for (const Leg& leg : path.legs) {
    const Rat end = offset + leg.duration();
    if (t <= end) return canonical_point(K, leg.cube, leg_position(leg, t - offset));
    offset = end;
  }
  const Leg& last = path.legs.back();
  return canonical_point(K, last.cube, corner_coords(last.to));
}

Rat arc_length(const TameDPath& path, const Rat& t) {
  if (t < 0 || t > path.duration()) throw std::invalid_argument("arc_length: t out of range");
  Rat acc = 0;
  Rat offset = 0;
  for (const Leg& leg : path.legs) {
    const Rat end = offset + leg.duration();
    if (t >= end) {
      acc += leg_arc_length(leg);
      offset = end;
      continue;
    }
    const Rat local = t - offset;
    for (std::size_t k = 1; k < leg.track.size(); ++k) {
      const TrackPoint& p = leg.track[k - 1];
      const TrackPoint& q = leg.track[k];
      if (local >= q.t) {
        for (std::size_t i = 0; i < q.x.size(); ++i) acc += q.x[i] - p.x[i];
      } else {
        if (local > p.t) {
          const Rat w = (local - p.t) / (q.t - p.t);
          for (std::size_t i = 0; i < q.x.size(); ++i) acc += (q.x[i] - p.x[i]) * w;
        }
        break;
      }
    }
    return acc;
  }
  return acc;
}

Rat total_arc_length(const TameDPath& path) {
  Rat acc = 0;
  for (const Leg& leg : path.legs) acc += leg_arc_length(leg);
  return acc;
}

Reparam profile(const TameDPath& path) {
  std::vector<RBreak> pts;
  pts.push_back({Rat(0), Rat(0)});
  Rat offset = 0;
  Rat acc = 0;
  for (const Leg& leg : path.legs) {
    for (std::size_t k = 1; k < leg.track.size(); ++k) {
      for (std::size_t i = 0; i < leg.track[k].x.size(); ++i)
        acc += leg.track[k].x[i] - leg.track[k - 1].x[i];
      pts.push_back({offset + leg.track[k].t, acc});
    }
    offset += leg.duration();
  }
  return Reparam::from_breakpoints(std::move(pts));
}

CellId path_source(const PrecubicalSet& K, const TameDPath& path) {
  return vertex_of(K, path.legs.front().cube, path.legs.front().from);
}

CellId path_target(const PrecubicalSet& K, const TameDPath& path) {
  return vertex_of(K, path.legs.back().cube, path.legs.back().to);
}

TameDPath moore_compose(const PrecubicalSet& K, const TameDPath& a, const TameDPath& b) {
  if (path_target(K, a) != path_source(K, b))
    throw std::invalid_argument("moore_compose: junction vertices differ");
  TameDPath out = a;
  out.legs.insert(out.legs.end(), b.legs.begin(), b.legs.end());
  return canonicalize(out);
}

TameDPath normalized_compose(const PrecubicalSet& K, const TameDPath& a, const TameDPath& b) {
  TameDPath moore = moore_compose(K, a, b);
  return reparametrize(moore, Reparam::linear(Rat(1), moore.duration()));
}

TameDPath reparametrize(const TameDPath& path, const Reparam& phi) {
  if (phi.dst_len() != path.duration())
    throw std::invalid_argument("reparametrize: phi.dst_len != path duration");

  // Global event times of the path: every track point of every leg.
  std::vector<Rat> events;
  std::vector<Rat> leg_start, leg_end;
  {
    Rat offset = 0;
    for (const Leg& leg : path.legs) {
      leg_start.push_back(offset);
      for (const TrackPoint& p : leg.track) events.push_back(offset + p.t);
      offset += leg.duration();
      leg_end.push_back(offset);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
  }

  // Source-side cut times: phi's breakpoints plus preimages of every event.
  std::vector<Rat> cuts;
  for (const RBreak& p : phi.breakpoints()) cuts.push_back(p.t);
  const auto& bp = phi.breakpoints();
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const RBreak& a = bp[s];
    const RBreak& b = bp[s + 1];
    if (a.v == b.v) continue;
    for (const Rat& e : events)
      if (e > a.v && e < b.v) cuts.push_back(a.t + (e - a.v) * (b.t - a.t) / (b.v - a.v));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Locate the leg whose open time span contains m (m never hits a boundary).
  auto leg_of = [&](const Rat& m) -> std::size_t {
    for (std::size_t i = 0; i < leg_start.size(); ++i)
      if (m > leg_start[i] && m < leg_end[i]) return i;
    throw std::logic_error("reparametrize: lost between legs");
  };

  struct Piece {
    std::size_t leg;
    TrackPoint a, b;
  };
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rat& t1 = cuts[k];
    const Rat& t2 = cuts[k + 1];
    const Rat v1 = phi.eval(t1);
    const Rat v2 = phi.eval(t2);
    std::size_t li;
    std::vector<Rat> x1, x2;
    if (v1 < v2) {
      li = leg_of((v1 + v2) / 2);
      x1 = leg_position(path.legs[li], v1 - leg_start[li]);
      x2 = leg_position(path.legs[li], v2 - leg_start[li]);
    } else {
      // Stop at value v1: attach to the earlier leg at a junction.
      if (v1 == 0)
        li = 0;
      else {
        li = leg_start.size();
        for (std::size_t i = 0; i < leg_end.size(); ++i)
          if (v1 <= leg_end[i]) {
            li = i;
            break;
          }
        if (li == leg_start.size()) throw std::logic_error("reparametrize: stop out of range");
      }
      x1 = leg_position(path.legs[li], v1 - leg_start[li]);
      x2 = x1;
    }
    pieces.push_back({li, {t1, std::move(x1)}, {t2, std::move(x2)}});
  }

  TameDPath out;
  for (std::size_t k = 0; k < pieces.size();) {
    std::size_t j = k;
    while (j < pieces.size() && pieces[j].leg == pieces[k].leg) ++j;
    const Leg& src = path.legs[pieces[k].leg];
    Leg leg;
    leg.cube = src.cube;
    leg.from = src.from;
    leg.to = src.to;
    const Rat base = pieces[k].a.t;
    leg.track.push_back({Rat(0), pieces[k].a.x});
    for (std::size_t p = k; p < j; ++p) leg.track.push_back({pieces[p].b.t - base, pieces[p].b.x});
    out.legs.push_back(std::move(leg));
    k = j;
  }
  return canonicalize(out);
}

NaturalPath naturalize(const TameDPath& path) {
  TameDPath out;
  for (const Leg& leg : path.legs) {
    Leg fresh;
    fresh.cube = leg.cube;
    fresh.from = leg.from;
    fresh.to = leg.to;
    Rat s = 0;
    fresh.track.push_back({Rat(0), leg.track.front().x});
    for (std::size_t k = 1; k < leg.track.size(); ++k) {
      Rat step = 0;
      for (std::size_t i = 0; i < leg.track[k].x.size(); ++i)
        step += leg.track[k].x[i] - leg.track[k - 1].x[i];
      if (step == 0) continue;  // stop: deleted
      s += step;
      fresh.track.push_back({s, leg.track[k].x});
    }
    out.legs.push_back(std::move(fresh));
  }
  return NaturalPath{canonicalize(out)};
}

bool is_natural(const TameDPath& path) {
  const Rat n = total_arc_length(path);
  if (!(n > 0)) return false;
  return path.duration() == n && profile(path) == Reparam::identity(n);
}

Factorization factorize(const TameDPath& path) { return {profile(path), naturalize(path)}; }

TameDPath apply_factorization(const Reparam& phi, const NaturalPath& natural) {
  if (phi.dst_len() != natural.path.duration())
    throw std::invalid_argument("apply_factorization: phi.dst_len != natural path duration");
  return reparametrize(natural.path, phi);
}

std::vector<Skeleton> enumerate_skeletons(const PrecubicalSet& K, const CellId& alpha,
                                          const CellId& beta, int n, int bound) {
  if (K.dim(alpha) != 0 || K.dim(beta) != 0)
    throw std::invalid_argument("enumerate_skeletons: endpoints must be vertices");
  if (n > bound) throw std::invalid_argument("enumerate_skeletons: length exceeds bound");
  std::vector<Skeleton> result;
  if (n <= 0) return result;

  struct Edge {
    SkeletonLeg leg;
    int length;
    CellId target;
  };
  std::map<CellId, std::vector<Edge>> outgoing;
  for (const auto& [id, cell] : K.cells()) {
    if (cell.dim < 1) continue;
    const Corner bottom(static_cast<std::size_t>(cell.dim), '0');
    const Corner top(static_cast<std::size_t>(cell.dim), '1');
    const CellId src = vertex_of(K, id, bottom);
    const CellId dst = vertex_of(K, id, top);
    outgoing[src].push_back({{id, bottom, top}, cell.dim, dst});
  }

  Skeleton current;
  auto dfs = [&](auto&& self, const CellId& v, int remaining) -> void {
    if (remaining == 0) {
      if (v == beta) result.push_back(current);
      return;
    }
    auto it = outgoing.find(v);
    if (it == outgoing.end()) return;
    for (const Edge& e : it->second) {
      if (e.length > remaining) continue;
      current.push_back(e.leg);
      self(self, e.target, remaining - e.length);
      current.pop_back();
    }
  };
  dfs(dfs, alpha, n);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

TameDPath straight_path(const PrecubicalSet& K, const Skeleton& skeleton,
                        const std::vector<Rat>& durations) {
  if (skeleton.empty()) throw std::invalid_argument("straight_path: empty skeleton");
  if (durations.size() != skeleton.size())
    throw std::invalid_argument("straight_path: durations do not match skeleton length");
  TameDPath out;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    const SkeletonLeg& sk = skeleton[i];
    if (!K.has(sk.cube)) throw std::invalid_argument("straight_path: unknown cube " + sk.cube);
    if (static_cast<int>(sk.from.size()) != K.dim(sk.cube) || !is_corner(sk.from) ||
        !is_corner(sk.to) || sk.from.size() != sk.to.size())
      throw std::invalid_argument("straight_path: bad corners");
    if (!corner_leq(sk.from, sk.to) || sk.from == sk.to)
      throw std::invalid_argument("straight_path: need from <= to, from != to");
    if (!(durations[i] > 0)) throw std::invalid_argument("straight_path: durations must be positive");
    Leg leg;
    leg.cube = sk.cube;
    leg.from = sk.from;
    leg.to = sk.to;
    leg.track.push_back({Rat(0), corner_coords(sk.from)});
    leg.track.push_back({durations[i], corner_coords(sk.to)});
    out.legs.push_back(std::move(leg));
  }
  return canonicalize(out);
}

}  // namespace dtop
