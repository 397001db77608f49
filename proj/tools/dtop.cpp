// dtop: precubical sets, tame directed paths, and spatiality checking.
//
// Exit codes: 0 success (verdicts included), 1 validation or domain failure,
// 2 usage or file-format errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dtop/dpath.hpp"
#include "dtop/io.hpp"
#include "dtop/metric.hpp"
#include "dtop/precubical.hpp"
#include "dtop/rational.hpp"
#include "dtop/reparam.hpp"
#include "dtop/spatial.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dtop;

namespace {

constexpr const char* kSchema = "dtop-report/1";

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot read file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{2, "cannot write file: " + path};
  out << content;
}

int default_threads() {
  if (const char* env = std::getenv("DTOP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

PrecubicalSet load_complex(const std::string& path) {
  const PrecubicalSet K = io::parse_complex(read_file(path));
  const auto violations = validate(K);
  if (!violations.empty()) {
    std::ostringstream os;
    os << path << ": invalid precubical set";
    for (const Violation& v : violations) os << "\n  cell " << v.cell << ": " << v.detail;
    throw Failure{1, os.str()};
  }
  return K;
}

struct LoadedPath {
  std::string complex_ref;   // as written in the file
  std::string complex_path;  // resolved against the path file's directory
  PrecubicalSet complex;
  TameDPath path;  // canonical
};

LoadedPath load_path(const std::string& path) {
  const io::PathFile file = io::parse_path(read_file(path));
  LoadedPath out;
  out.complex_ref = file.complex_ref;
  fs::path ref(file.complex_ref);
  out.complex_path = ref.is_absolute() ? ref.string() : (fs::path(path).parent_path() / ref).string();
  out.complex = load_complex(out.complex_path);
  const auto violations = validate_path(out.complex, file.path);
  if (!violations.empty()) {
    std::ostringstream os;
    os << path << ": invalid tame path";
    for (const PathViolation& v : violations) os << "\n  leg " << v.leg << ": " << v.detail;
    throw Failure{1, os.str()};
  }
  out.path = canonicalize(file.path);
  return out;
}

void emit(const std::string& text) { std::cout << text; }

void emit_report(const json& report) { std::cout << report.dump(2) << "\n"; }

json witness_json(const SpatialWitness& w) {
  json agreement = json::array();
  for (const Word& word : w.agreement.cells()) agreement.push_back(word);
  return {{"x", w.x}, {"y", w.y}, {"n", w.n}, {"agreement", agreement}};
}

json bn_witness_json(const BnWitness& w) {
  json cells = json::array();
  for (const Word& c : w.itinerary.cells) cells.push_back(c);
  json points = json::array();
  for (const auto& p : w.points) {
    json coords = json::array();
    for (const Rat& x : p) coords.push_back(rat_str(x));
    points.push_back(coords);
  }
  return {{"itinerary", cells}, {"points", points}};
}

std::string point_tuple(const std::vector<Rat>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += rat_str(p[i]);
  }
  return out + ")";
}

// Emits a path file either to stdout (optionally wrapped as a report) or to
// a file given by -o.
void deliver_path(const std::string& command, const std::string& complex_ref,
                  const TameDPath& path, const std::string& out_file, bool json_mode) {
  const std::string text = io::serialize_path(complex_ref, path);
  if (!out_file.empty()) {
    write_file(out_file, text);
    return;
  }
  if (json_mode) {
    json report{{"schema", kSchema}, {"command", command}, {"path", json::parse(text)}};
    emit_report(report);
  } else {
    emit(text);
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"precubical sets, tame directed paths, and spatiality"};
  app.require_subcommand(1);
  app.fallthrough(true);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable reports");

  // validate
  std::string validate_file;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check a complex file");
  cmd_validate->add_option("complex", validate_file)->required();

  // info
  std::string info_file;
  CLI::App* cmd_info = app.add_subcommand("info", "cell counts by dimension");
  cmd_info->add_option("complex", info_file)->required();

  // spatial
  std::string spatial_file;
  int spatial_threads = default_threads();
  CLI::App* cmd_spatial = app.add_subcommand("spatial", "decide spatiality");
  cmd_spatial->add_option("complex", spatial_file)->required();
  cmd_spatial->add_option("--threads", spatial_threads, "parallel pair checking");

  // bn-check
  std::string bn_file;
  int bn_n = 0;
  CLI::App* cmd_bn = app.add_subcommand("bn-check", "vertex-avoiding reachability through A");
  cmd_bn->add_option("complex", bn_file, "complex whose cell ids are words over {0,1,*}")->required();
  cmd_bn->add_option("--n", bn_n, "ambient cube dimension")->required();

  // chains
  std::string chains_file, chains_from, chains_to;
  int chains_length = 0, chains_bound = 16;
  CLI::App* cmd_chains = app.add_subcommand("chains", "enumerate cube chains");
  cmd_chains->add_option("complex", chains_file)->required();
  cmd_chains->add_option("--from", chains_from)->required();
  cmd_chains->add_option("--to", chains_to)->required();
  cmd_chains->add_option("--length", chains_length)->required();
  cmd_chains->add_option("--bound", chains_bound);

  // naturalize
  std::string nat_file, nat_out;
  CLI::App* cmd_nat = app.add_subcommand("naturalize", "delete stops, unit L1 speed");
  cmd_nat->add_option("path", nat_file)->required();
  cmd_nat->add_option("-o,--out", nat_out);

  // factorize
  std::string fac_file, fac_out_reparam, fac_out_path;
  CLI::App* cmd_fac = app.add_subcommand("factorize", "split into reparametrization and natural path");
  cmd_fac->add_option("path", fac_file)->required();
  cmd_fac->add_option("--out-reparam", fac_out_reparam);
  cmd_fac->add_option("--out-path", fac_out_path);

  // apply-reparam
  std::string apply_path_file, apply_reparam_file, apply_out;
  CLI::App* cmd_apply = app.add_subcommand("apply-reparam", "precompose a path with a reparametrization");
  cmd_apply->add_option("path", apply_path_file)->required();
  cmd_apply->add_option("reparam", apply_reparam_file)->required();
  cmd_apply->add_option("-o,--out", apply_out);

  // compose
  std::string comp_a, comp_b, comp_out;
  bool comp_normalized = false;
  CLI::App* cmd_comp = app.add_subcommand("compose", "Moore composition of two paths");
  cmd_comp->add_option("first", comp_a)->required();
  cmd_comp->add_option("second", comp_b)->required();
  cmd_comp->add_flag("--normalized", comp_normalized, "rescale to duration 1");
  cmd_comp->add_option("-o,--out", comp_out);

  // dist
  std::string dist_file, dist_p, dist_q;
  int dist_hops = 0, dist_grid = 8;
  CLI::App* cmd_dist = app.add_subcommand("dist", "chain upper bound for the d1 pseudometric");
  cmd_dist->add_option("complex", dist_file)->required();
  cmd_dist->add_option("--p", dist_p)->required();
  cmd_dist->add_option("--q", dist_q)->required();
  cmd_dist->add_option("--max-hops", dist_hops, "defaults to the number of cells");
  cmd_dist->add_option("--grid", dist_grid, "grid denominator on shared faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (*cmd_validate) {
    const PrecubicalSet K = io::parse_complex(read_file(validate_file));
    const auto violations = validate(K);
    if (json_mode) {
      json list = json::array();
      for (const Violation& v : violations)
        list.push_back({{"cell", v.cell},
                        {"kind", v.kind},
                        {"i", v.i},
                        {"j", v.j},
                        {"alpha", v.alpha},
                        {"beta", v.beta},
                        {"detail", v.detail}});
      emit_report({{"schema", kSchema},
                   {"command", "validate"},
                   {"valid", violations.empty()},
                   {"violations", list}});
    } else if (violations.empty()) {
      emit("ok\n");
    } else {
      for (const Violation& v : violations)
        emit("cell " + v.cell + " [" + v.kind + "]: " + v.detail + "\n");
    }
    return violations.empty() ? 0 : 1;
  }

  if (*cmd_info) {
    const PrecubicalSet K = load_complex(info_file);
    const auto by_dim = K.cells_by_dim();
    if (json_mode) {
      json dims;
      for (const auto& [d, count] : by_dim) dims[std::to_string(d)] = count;
      emit_report({{"schema", kSchema},
                   {"command", "info"},
                   {"cells", K.size()},
                   {"max_dimension", K.max_dimension()},
                   {"cells_by_dim", dims}});
    } else {
      emit("cells: " + std::to_string(K.size()) + "\n");
      for (const auto& [d, count] : by_dim)
        emit("dim " + std::to_string(d) + ": " + std::to_string(count) + "\n");
    }
    return 0;
  }

  if (*cmd_spatial) {
    const PrecubicalSet K = load_complex(spatial_file);
    const SpatialResult res = is_spatial(K, spatial_threads);
    if (json_mode) {
      json witnesses = json::array();
      for (const SpatialWitness& w : res.witnesses) witnesses.push_back(witness_json(w));
      emit_report({{"schema", kSchema},
                   {"command", "spatial"},
                   {"spatial", res.spatial},
                   {"witnesses", witnesses}});
    } else if (res.spatial) {
      emit("spatial\n");
    } else {
      emit("non-spatial\n");
      for (const SpatialWitness& w : res.witnesses)
        emit("witness: x=" + w.x + " y=" + w.y + " n=" + std::to_string(w.n) + " agreement=" +
             std::to_string(w.agreement.cells().size()) + " cells\n");
    }
    return 0;
  }

  if (*cmd_bn) {
    const PrecubicalSet K = load_complex(bn_file);
    const BoundarySubcomplex A = io::complex_as_boundary_subcomplex(K, bn_n);
    const BnResult res = in_Bn(A);
    if (json_mode) {
      json report{{"schema", kSchema}, {"command", "bn-check"}, {"n", bn_n}, {"member", res.member}};
      if (res.witness) report["witness"] = bn_witness_json(*res.witness);
      emit_report(report);
    } else if (!res.member) {
      emit("not in B_" + std::to_string(bn_n) + "\n");
    } else {
      emit("in B_" + std::to_string(bn_n) + "\n");
      std::string cells, points;
      for (const Word& c : res.witness->itinerary.cells) cells += " " + c;
      for (const auto& p : res.witness->points) points += " " + point_tuple(p);
      emit("itinerary:" + cells + "\n");
      emit("points:" + points + "\n");
    }
    return 0;
  }

  if (*cmd_chains) {
    const PrecubicalSet K = load_complex(chains_file);
    const auto skeletons = enumerate_skeletons(K, chains_from, chains_to, chains_length, chains_bound);
    if (json_mode) {
      json list = json::array();
      for (const Skeleton& sk : skeletons) {
        json chain = json::array();
        for (const SkeletonLeg& leg : sk)
          chain.push_back({{"cube", leg.cube}, {"from", leg.from}, {"to", leg.to}});
        list.push_back(chain);
      }
      emit_report({{"schema", kSchema},
                   {"command", "chains"},
                   {"from", chains_from},
                   {"to", chains_to},
                   {"length", chains_length},
                   {"count", skeletons.size()},
                   {"skeletons", list}});
    } else {
      emit(std::to_string(skeletons.size()) + " chains\n");
      for (const Skeleton& sk : skeletons) {
        std::string line;
        for (const SkeletonLeg& leg : sk) {
          if (!line.empty()) line += " ";
          line += leg.cube + "[" + leg.from + "->" + leg.to + "]";
        }
        emit(line + "\n");
      }
    }
    return 0;
  }

  if (*cmd_nat) {
    const LoadedPath in = load_path(nat_file);
    deliver_path("naturalize", in.complex_ref, naturalize(in.path).path, nat_out, json_mode);
    return 0;
  }

  if (*cmd_fac) {
    const LoadedPath in = load_path(fac_file);
    const Factorization fac = factorize(in.path);
    const std::string reparam_text = io::serialize_reparam(fac.profile);
    const std::string path_text = io::serialize_path(in.complex_ref, fac.natural.path);
    if (!fac_out_reparam.empty()) write_file(fac_out_reparam, reparam_text);
    if (!fac_out_path.empty()) write_file(fac_out_path, path_text);
    if (fac_out_reparam.empty() || fac_out_path.empty()) {
      if (json_mode) {
        emit_report({{"schema", kSchema},
                     {"command", "factorize"},
                     {"reparam", json::parse(reparam_text)},
                     {"natural_path", json::parse(path_text)}});
      } else {
        emit(reparam_text);
        emit(path_text);
      }
    }
    return 0;
  }

  if (*cmd_apply) {
    const LoadedPath in = load_path(apply_path_file);
    const Reparam phi = io::parse_reparam(read_file(apply_reparam_file));
    if (phi.dst_len() != in.path.duration())
      throw Failure{1, "reparametrization target length " + rat_str(phi.dst_len()) +
                           " does not match the path duration " + rat_str(in.path.duration())};
    deliver_path("apply-reparam", in.complex_ref, reparametrize(in.path, phi), apply_out, json_mode);
    return 0;
  }

  if (*cmd_comp) {
    const LoadedPath a = load_path(comp_a);
    const LoadedPath b = load_path(comp_b);
    if (fs::weakly_canonical(a.complex_path) != fs::weakly_canonical(b.complex_path))
      throw Failure{1, "paths live over different complexes"};
    const TameDPath composed = comp_normalized ? normalized_compose(a.complex, a.path, b.path)
                                               : moore_compose(a.complex, a.path, b.path);
    deliver_path("compose", a.complex_ref, composed, comp_out, json_mode);
    return 0;
  }

  if (*cmd_dist) {
    const PrecubicalSet K = load_complex(dist_file);
    const Point p = io::parse_point(K, dist_p);
    const Point q = io::parse_point(K, dist_q);
    const int hops = dist_hops > 0 ? dist_hops : static_cast<int>(K.size());
    const ChainEstimate est = d1_upper(K, p, q, hops, dist_grid);
    if (json_mode) {
      json chain = json::array();
      for (const auto& [from, to] : est.chain)
        chain.push_back({{"from", io::point_str(from)}, {"to", io::point_str(to)}});
      emit_report({{"schema", kSchema},
                   {"command", "dist"},
                   {"value", rat_str(est.value)},
                   {"chain", chain}});
    } else {
      emit("d1 upper bound: " + rat_str(est.value) + "\n");
      for (const auto& [from, to] : est.chain)
        emit("hop: " + io::point_str(from) + " -> " + io::point_str(to) + "\n");
    }
    return 0;
  }

  return 2;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.code;
  } catch (const dtop::io::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
