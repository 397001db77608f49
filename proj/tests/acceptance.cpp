// Acceptance suite: one line per criterion, PASS/FAIL, exact rational checks
// throughout (no tolerances anywhere).

#include <chrono>
#include <deque>
#include <iostream>
#include <set>
#include <sstream>

#include "dtop/dpath.hpp"
#include "dtop/metric.hpp"
#include "dtop/precubical.hpp"
#include "dtop/rational.hpp"
#include "dtop/reparam.hpp"
#include "dtop/spatial.hpp"
#include "testutil.hpp"

using namespace dtop;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// ---- independent grid oracle (duplicated here on purpose: the acceptance
// binary carries its own copy of the discretized search) ----

bool grid_oracle(const BoundarySubcomplex& A, int D) {
  const int n = A.n();
  std::vector<int> start(static_cast<std::size_t>(n), 0);
  std::vector<int> goal(static_cast<std::size_t>(n), D);
  auto is_vertex = [&](const std::vector<int>& p) {
    for (int c : p)
      if (c != 0 && c != D) return false;
    return true;
  };
  auto segment_in = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (const Word& w : A.cells()) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const char ch = w[static_cast<std::size_t>(i)];
        const int ai = a[static_cast<std::size_t>(i)], bi = b[static_cast<std::size_t>(i)];
        if (ch == '0') ok = ai == 0 && bi == 0;
        if (ch == '1') ok = ai == D && bi == D;
      }
      if (ok) return true;
    }
    return false;
  };
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    std::vector<int> p = queue.front();
    queue.pop_front();
    if (p == goal) return true;
    for (int i = 0; i < n; ++i) {
      std::vector<int> q = p;
      if (++q[static_cast<std::size_t>(i)] > D) continue;
      if (q != goal && is_vertex(q)) continue;
      if (!segment_in(p, q)) continue;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return false;
}

bool witness_valid(const BoundarySubcomplex& A, const BnWitness& w, std::string& why) {
  const int n = A.n();
  const std::size_t m = w.itinerary.cells.size();
  if (w.points.size() != m + 1) {
    why = "point count";
    return false;
  }
  for (const Word& c : w.itinerary.cells)
    if (!A.contains(c)) {
      why = "itinerary leaves A";
      return false;
    }
  for (int i = 0; i < n; ++i) {
    if (w.points.front()[static_cast<std::size_t>(i)] != 0 ||
        w.points.back()[static_cast<std::size_t>(i)] != 1) {
      why = "endpoints";
      return false;
    }
  }
  for (std::size_t j = 1; j <= m; ++j)
    for (int i = 0; i < n; ++i)
      if (w.points[j - 1][static_cast<std::size_t>(i)] > w.points[j][static_cast<std::size_t>(i)]) {
        why = "monotonicity";
        return false;
      }
  for (std::size_t j = 0; j < m; ++j) {
    const Word& cell = w.itinerary.cells[j];
    for (const auto* p : {&w.points[j], &w.points[j + 1]})
      for (int i = 0; i < n; ++i) {
        const char ch = cell[static_cast<std::size_t>(i)];
        const Rat& x = (*p)[static_cast<std::size_t>(i)];
        if (x < 0 || x > 1 || (ch == '0' && x != 0) || (ch == '1' && x != 1)) {
          why = "segment leaves its closed cell";
          return false;
        }
      }
  }
  for (std::size_t j = 1; j < m; ++j) {
    bool interior = false;
    for (const Rat& x : w.points[j]) interior = interior || (x > 0 && x < 1);
    if (!interior) {
      why = "interior transition point is a vertex";
      return false;
    }
  }
  return true;
}

std::vector<BoundarySubcomplex> two_square_family() {
  std::vector<Word> squares;
  for (int i = 1; i <= 3; ++i)
    for (int alpha = 0; alpha <= 1; ++alpha) squares.push_back(word_face("***", i, alpha));
  std::vector<BoundarySubcomplex> family;
  family.push_back(BoundarySubcomplex::generated_by(3, {}));
  for (std::size_t a = 0; a < squares.size(); ++a) {
    family.push_back(BoundarySubcomplex::generated_by(3, {squares[a]}));
    for (std::size_t b = a + 1; b < squares.size(); ++b)
      family.push_back(BoundarySubcomplex::generated_by(3, {squares[a], squares[b]}));
  }
  return family;
}

// ---- criteria ----

Outcome criterion_roundtrip() {
  const auto start = Clock::now();
  testutil::Rng rng(20240001);
  int done = 0, failures = 0;
  while (done < 1000) {
    const PrecubicalSet K = testutil::random_complex(rng);
    if (K.size() > 50 || K.max_dimension() > 3) continue;
    const auto path = testutil::random_path(rng, K);
    if (!path) continue;
    const Factorization fac = factorize(*path);
    if (apply_factorization(fac.profile, fac.natural) != *path) ++failures;
    const Reparam phi =
        testutil::random_reparam(rng, rng.positive_rational(), fac.natural.path.duration());
    const Factorization back = factorize(apply_factorization(phi, fac.natural));
    if (back.profile != phi || back.natural != fac.natural) ++failures;
    ++done;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << done << " paths, " << failures << " failures, " << elapsed << "s";
  return {failures == 0 && elapsed < 60.0, os.str()};
}

Outcome criterion_profile_compose() {
  testutil::Rng rng(20240002);
  int done = 0, failures = 0, with_stops = 0;
  while (done < 1000) {
    const PrecubicalSet K = testutil::random_complex(rng);
    const auto path = testutil::random_path(rng, K);
    if (!path) continue;
    const Reparam phi = testutil::random_reparam(rng, rng.positive_rational(), path->duration());
    if (!is_regular(phi)) ++with_stops;
    if (profile(reparametrize(*path, phi)) != compose(phi, profile(*path))) ++failures;
    ++done;
  }
  std::ostringstream os;
  os << done << " pairs (" << with_stops << " with stops), " << failures << " failures";
  return {failures == 0 && with_stops > 0, os.str()};
}

Outcome criterion_arclength_laws() {
  testutil::Rng rng(20240003);
  int done = 0, failures = 0;
  while (done < 500) {
    const PrecubicalSet K = testutil::random_complex(rng);
    const auto a = testutil::random_path(rng, K);
    if (!a) continue;
    const auto b = testutil::random_path(rng, K, path_target(K, *a));
    if (!b) continue;
    // Additivity under Moore composition.
    if (total_arc_length(moore_compose(K, *a, *b)) !=
        total_arc_length(*a) + total_arc_length(*b))
      ++failures;
    // Invariance under reparametrization.
    const Reparam phi = testutil::random_reparam(rng, rng.positive_rational(), a->duration());
    if (total_arc_length(reparametrize(*a, phi)) != total_arc_length(*a)) ++failures;
    // Integrality between vertices.
    const Rat total = total_arc_length(*a);
    if (total.get_den() != 1 || total < 1) ++failures;
    ++done;
  }
  std::ostringstream os;
  os << done << " pairs, " << failures << " violations";
  return {failures == 0, os.str()};
}

Outcome criterion_naturalization() {
  testutil::Rng rng(20240004);
  int done = 0, failures = 0;
  while (done < 500) {
    const PrecubicalSet K = testutil::random_complex(rng);
    const auto path = testutil::random_path(rng, K);
    if (!path) continue;
    const NaturalPath nat = naturalize(*path);
    if (profile(nat.path) != Reparam::identity(nat.path.duration())) ++failures;
    if (nat.path.duration().get_den() != 1) ++failures;
    for (const Leg& leg : nat.path.legs)
      if (leg.duration() != rat(corner_l1(leg.from, leg.to))) ++failures;
    if (naturalize(nat.path) != nat) ++failures;
    ++done;
  }
  std::ostringstream os;
  os << done << " paths, " << failures << " violations";
  return {failures == 0, os.str()};
}

Outcome criterion_b3_facts() {
  std::ostringstream os;
  bool pass = true;
  {
    const auto start = Clock::now();
    const BnResult full = in_Bn(BoundarySubcomplex::full_boundary(3));
    const double t = seconds_since(start);
    pass = pass && full.member && t < 10.0;
    os << "boundary: " << (full.member ? "in" : "out") << " (" << t << "s)";
  }
  {
    const auto start = Clock::now();
    const BnResult opp = in_Bn(BoundarySubcomplex::generated_by(3, {"0**", "1**"}));
    const double t = seconds_since(start);
    pass = pass && !opp.member && t < 10.0;
    os << "; opposite: " << (opp.member ? "in" : "out") << " (" << t << "s)";
  }
  {
    const auto start = Clock::now();
    const BoundarySubcomplex stairs = BoundarySubcomplex::generated_by(3, {"**0", "1**"});
    const BnResult res = in_Bn(stairs);
    const double t = seconds_since(start);
    std::string why;
    const bool ok = res.member && res.witness && witness_valid(stairs, *res.witness, why);
    pass = pass && ok && t < 10.0;
    os << "; staircase: " << (ok ? "in, witness verified" : ("BAD: " + why)) << " (" << t << "s)";
  }
  return {pass, os.str()};
}

Outcome criterion_spatiality() {
  std::ostringstream os;
  bool pass = true;
  testutil::Rng rng(20240006);
  auto timed_spatial = [&](const PrecubicalSet& K) {
    const auto start = Clock::now();
    const SpatialResult r = is_spatial(K);
    pass = pass && seconds_since(start) < 10.0;
    return r;
  };
  pass = pass && timed_spatial(standard_cube(3)).spatial;
  pass = pass && timed_spatial(boundary_cube(3)).spatial;
  int two_dim = 0;
  while (two_dim < 10) {
    const PrecubicalSet K = testutil::random_word_complex(rng);
    if (K.max_dimension() > 2) continue;
    pass = pass && timed_spatial(K).spatial;
    ++two_dim;
  }
  os << "cube, boundary, " << two_dim << " two-dimensional fixtures spatial";

  const PrecubicalSet cube = standard_cube(3);
  std::set<CellId> A;
  std::map<CellId, CellId> inclusion;
  const PrecubicalSet boundary3 = boundary_cube(3);
  for (const auto& [id, cell] : boundary3.cells()) {
    A.insert(id);
    inclusion[id] = id;
  }
  const PrecubicalSet doubled = pushout(cube, A, inclusion, cube).set;
  const SpatialResult res = timed_spatial(doubled);
  const bool witness_ok = !res.spatial && res.witnesses.size() == 1 &&
                          res.witnesses[0].n == 3 &&
                          res.witnesses[0].agreement == BoundarySubcomplex::full_boundary(3);
  pass = pass && witness_ok;
  os << "; doubled cube " << (witness_ok ? "non-spatial with boundary witness" : "WRONG");
  return {pass, os.str()};
}

Outcome criterion_oracle_agreement() {
  int disagreements = 0, members = 0, invalid_witnesses = 0;
  const auto family = two_square_family();
  for (const BoundarySubcomplex& A : family) {
    const BnResult exact = in_Bn(A);
    if (exact.member != grid_oracle(A, 4)) ++disagreements;
    if (exact.member) {
      ++members;
      std::string why;
      if (!exact.witness || !witness_valid(A, *exact.witness, why)) ++invalid_witnesses;
    }
  }
  std::ostringstream os;
  os << family.size() << " subcomplexes, " << members << " members, " << disagreements
     << " disagreements, " << invalid_witnesses << " invalid witnesses";
  return {disagreements == 0 && invalid_witnesses == 0, os.str()};
}

Outcome criterion_category_laws() {
  testutil::Rng rng(20240008);
  int done = 0, failures = 0;
  while (done < 1000) {
    const Rat l1 = rng.positive_rational();
    const Rat l2 = rng.positive_rational();
    const Rat l3 = rng.positive_rational();
    const Rat l4 = rng.positive_rational();
    const Reparam f = testutil::random_reparam(rng, l1, l2);
    const Reparam g = testutil::random_reparam(rng, l2, l3);
    const Reparam h = testutil::random_reparam(rng, l3, l4);
    if (compose(compose(f, g), h) != compose(f, compose(g, h))) ++failures;
    if (compose(Reparam::identity(l1), f) != f || compose(f, Reparam::identity(l2)) != f)
      ++failures;
    if (tensor(tensor(f, g), h) != tensor(f, tensor(g, h))) ++failures;
    ++done;
  }
  // Interchange with Moore composition.
  int pairs = 0;
  while (pairs < 200) {
    const PrecubicalSet K = testutil::random_complex(rng);
    const auto a = testutil::random_path(rng, K);
    if (!a) continue;
    const auto b = testutil::random_path(rng, K, path_target(K, *a));
    if (!b) continue;
    const Reparam phi1 = testutil::random_reparam(rng, rng.positive_rational(), a->duration());
    const Reparam phi2 = testutil::random_reparam(rng, rng.positive_rational(), b->duration());
    if (reparametrize(moore_compose(K, *a, *b), tensor(phi1, phi2)) !=
        moore_compose(K, reparametrize(*a, phi1), reparametrize(*b, phi2)))
      ++failures;
    ++pairs;
  }
  std::ostringstream os;
  os << done << " triples + " << pairs << " interchange pairs, " << failures << " failures";
  return {failures == 0, os.str()};
}

Outcome criterion_chain_counts() {
  const auto square_first = enumerate_skeletons(standard_cube(2), "00", "11", 2);
  const auto square_second = enumerate_skeletons(standard_cube(2), "00", "11", 2);
  const auto boundary_first = enumerate_skeletons(boundary_cube(2), "00", "11", 2);
  const auto boundary_second = enumerate_skeletons(boundary_cube(2), "00", "11", 2);
  std::ostringstream os;
  os << "square: " << square_first.size() << ", boundary: " << boundary_first.size();
  const bool pass = square_first.size() == 3 && boundary_first.size() == 2 &&
                    square_first == square_second && boundary_first == boundary_second;
  return {pass, os.str()};
}

Outcome criterion_metric() {
  bool pass = true;
  std::ostringstream os;
  testutil::Rng rng(20240010);
  // Single cube: the estimate equals d1 exactly.
  for (int d = 1; d <= 3 && pass; ++d) {
    const PrecubicalSet K = standard_cube(d);
    for (int trial = 0; trial < 10; ++trial) {
      Point p{Word(static_cast<std::size_t>(d), '*'), {}};
      Point q = p;
      for (int i = 0; i < d; ++i) {
        p.coords.push_back(rng.interior_rational());
        q.coords.push_back(rng.interior_rational());
      }
      if (d1_upper(K, p, q, 3, 4).value != d1_cube(p.coords, q.coords)) pass = false;
    }
  }
  os << "single-cube exact: " << (pass ? "yes" : "no");
  // Two squares glued along an edge, centers at distance 1 from grid 2 on.
  const PrecubicalSet sq = standard_cube(2);
  std::set<CellId> A{"1*", "10", "11"};
  std::map<CellId, CellId> f{{"1*", "0*"}, {"10", "00"}, {"11", "01"}};
  const PrecubicalSet K = pushout(sq, A, f, sq).set;
  const Point left{"L.**", {rat(1, 2), rat(1, 2)}};
  const Point right{"R.**", {rat(1, 2), rat(1, 2)}};
  bool glued_ok = true;
  for (int grid = 2; grid <= 8; grid += 2)
    glued_ok = glued_ok && d1_upper(K, left, right, 4, grid).value == rat(1);
  pass = pass && glued_ok;
  os << "; glued centers at 1 for grids 2..8: " << (glued_ok ? "yes" : "no");
  return {pass, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"factorization round trip on 1000 random paths", criterion_roundtrip},
      {"profile of a reparametrized path composes", criterion_profile_compose},
      {"arc-length additivity, invariance, integrality", criterion_arclength_laws},
      {"naturalization: identity profile, integer lengths, idempotent", criterion_naturalization},
      {"B_3 membership facts with verified witness", criterion_b3_facts},
      {"spatiality verdicts on the standard fixtures", criterion_spatiality},
      {"exact B_3 decision agrees with the grid oracle", criterion_oracle_agreement},
      {"category laws: associativity, units, tensor, interchange", criterion_category_laws},
      {"cube-chain counts on the square fixtures", criterion_chain_counts},
      {"metric estimates: single-cube exact, glued squares at 1", criterion_metric},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const Outcome outcome = c.run();
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << index << "  " << c.name << " ("
              << outcome.detail << ")\n";
  }
  if (failures) std::cout << failures << " criteria failed\n";
  return failures;
}
