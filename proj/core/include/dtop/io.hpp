#pragma once

#include <stdexcept>
#include <string>

#include "dtop/dpath.hpp"
#include "dtop/precubical.hpp"
#include "dtop/reparam.hpp"

namespace dtop::io {

/// Raised on malformed input files; the message carries line/column context
/// for syntax errors and a field path for schema errors.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Complex files: {"cells": [{"id", "dim", "faces": {"0": [...], "1": [...]}}]}.
/// Rationals throughout all formats are "p" or "p/q" strings.
PrecubicalSet parse_complex(const std::string& text);
std::string serialize_complex(const PrecubicalSet& K);

struct PathFile {
  std::string complex_ref;
  TameDPath path;
};

/// Path files: {"complex": <file reference>, "legs": [{"cube", "from", "to",
/// "duration", "track": [[t, [x...]], ...]}]}. Structural parse only; the
/// caller validates against the referenced complex.
PathFile parse_path(const std::string& text);
std::string serialize_path(const std::string& complex_ref, const TameDPath& path);

/// Reparametrization files: {"breakpoints": [[t, v], ...]}.
Reparam parse_reparam(const std::string& text);
std::string serialize_reparam(const Reparam& phi);

/// Point syntax "carrier" (a vertex) or "carrier:x1,x2,...". Parses raw
/// coordinates; the result is canonicalized against K.
Point parse_point(const PrecubicalSet& K, const std::string& text);
std::string point_str(const Point& p);

/// Reads a complex file whose cell ids are words over {0,1,*} of length n
/// (the standard-cube naming) as a boundary subcomplex of the n-cube.
BoundarySubcomplex complex_as_boundary_subcomplex(const PrecubicalSet& K, int n);

}  // namespace dtop::io
