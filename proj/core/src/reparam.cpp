#include "dtop/reparam.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtop {

namespace {

bool collinear(const RBreak& a, const RBreak& b, const RBreak& c) {
  return (b.v - a.v) * (c.t - b.t) == (c.v - b.v) * (b.t - a.t);
}

std::vector<RBreak> canonicalize(std::vector<RBreak> pts) {
  std::vector<RBreak> out;
  for (const RBreak& p : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) out.pop_back();
    out.push_back(p);
  }
  return out;
}

}  // namespace

Reparam Reparam::from_breakpoints(std::vector<RBreak> pts) {
  if (pts.size() < 2) throw std::invalid_argument("Reparam: need at least two breakpoints");
  if (pts.front().t != 0 || pts.front().v != 0)
    throw std::invalid_argument("Reparam: must start at (0,0)");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].t < pts[i].t))
      throw std::invalid_argument("Reparam: breakpoint times must strictly increase");
    if (pts[i].v < pts[i - 1].v)
      throw std::invalid_argument("Reparam: values must be nondecreasing");
  }
  if (!(pts.back().t > 0) || !(pts.back().v > 0))
    throw std::invalid_argument("Reparam: lengths must be positive");
  Reparam r;
  r.pts_ = canonicalize(std::move(pts));
  return r;
}

Reparam Reparam::identity(const Rat& len) { return linear(len, len); }

Reparam Reparam::linear(const Rat& src, const Rat& dst) {
  if (!(src > 0) || !(dst > 0))
    throw std::invalid_argument("Reparam: lengths must be positive");
  return from_breakpoints({{Rat(0), Rat(0)}, {src, dst}});
}

Rat Reparam::eval(const Rat& t) const {
  if (t < 0 || t > src_len()) throw std::invalid_argument("Reparam::eval: t out of range");
  // Rightmost segment whose start is <= t.
  std::size_t lo = 0, hi = pts_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (pts_[mid].t <= t)
      lo = mid;
    else
      hi = mid;
  }
  const RBreak& a = pts_[lo];
  const RBreak& b = pts_[lo + 1];
  if (t == b.t) return b.v;
  return a.v + (b.v - a.v) * (t - a.t) / (b.t - a.t);
}

Reparam compose(const Reparam& phi, const Reparam& psi) {
  if (phi.dst_len() != psi.src_len())
    throw std::invalid_argument("compose: length mismatch between phi and psi");
  std::vector<Rat> times;
  for (const RBreak& p : phi.breakpoints()) times.push_back(p.t);
  const auto& pp = phi.breakpoints();
  for (std::size_t s = 0; s + 1 < pp.size(); ++s) {
    const RBreak& a = pp[s];
    const RBreak& b = pp[s + 1];
    if (a.v == b.v) continue;  // flat: composite constant, endpoints suffice
    for (const RBreak& q : psi.breakpoints()) {
      if (q.t > a.v && q.t < b.v)
        times.push_back(a.t + (q.t - a.v) * (b.t - a.t) / (b.v - a.v));
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<RBreak> pts;
  pts.reserve(times.size());
  for (const Rat& t : times) pts.push_back({t, psi.eval(phi.eval(t))});
  return Reparam::from_breakpoints(std::move(pts));
}

Reparam tensor(const Reparam& a, const Reparam& b) {
  std::vector<RBreak> pts = a.breakpoints();
  const Rat dt = a.src_len();
  const Rat dv = a.dst_len();
  const auto& bp = b.breakpoints();
  for (std::size_t i = 1; i < bp.size(); ++i) pts.push_back({bp[i].t + dt, bp[i].v + dv});
  return Reparam::from_breakpoints(std::move(pts));
}

bool is_regular(const Reparam& phi) {
  const auto& pts = phi.breakpoints();
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].v == pts[i - 1].v) return false;
  return true;
}

}  // namespace dtop
