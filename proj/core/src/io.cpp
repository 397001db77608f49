#include "dtop/io.hpp"

#include <json.hpp>
#include <sstream>

namespace dtop::io {

using nlohmann::json;

namespace {

[[noreturn]] void syntax_error(const std::string& text, const json::parse_error& e) {
  std::size_t line = 1, col = 1;
  const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "parse error at line " << line << ", column " << col << ": " << e.what();
  throw ParseError(os.str());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    syntax_error(text, e);
  }
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object() || !obj.contains(name))
    throw ParseError("missing field \"" + std::string(name) + "\" in " + where);
  return obj.at(name);
}

std::string string_field(const json& obj, const char* name, const std::string& where) {
  const json& f = field(obj, name, where);
  if (!f.is_string()) throw ParseError("field \"" + std::string(name) + "\" in " + where + " must be a string");
  return f.get<std::string>();
}

Rat rat_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("expected rational string in " + where);
  try {
    return rat_parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in " + where);
  }
}

}  // namespace

PrecubicalSet parse_complex(const std::string& text) {
  const json doc = parse_json(text);
  const json& cells = field(doc, "cells", "complex file");
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  std::map<CellId, Cell> out;
  for (const json& c : cells) {
    const std::string id = string_field(c, "id", "cell");
    if (id.empty()) throw ParseError("cell with empty id");
    const json& dim = field(c, "dim", "cell " + id);
    if (!dim.is_number_integer() || dim.get<int>() < 0)
      throw ParseError("cell " + id + ": \"dim\" must be a nonnegative integer");
    Cell cell;
    cell.dim = dim.get<int>();
    const json& faces = field(c, "faces", "cell " + id);
    for (int alpha = 0; alpha <= 1; ++alpha) {
      const char* key = alpha == 0 ? "0" : "1";
      const json& list = field(faces, key, "faces of cell " + id);
      if (!list.is_array() || static_cast<int>(list.size()) != cell.dim)
        throw ParseError("cell " + id + ": faces[\"" + key + "\"] must list exactly dim ids");
      for (const json& g : list) {
        if (!g.is_string()) throw ParseError("cell " + id + ": face ids must be strings");
        cell.faces[alpha].push_back(g.get<std::string>());
      }
    }
    if (!out.emplace(id, std::move(cell)).second)
      throw ParseError("duplicate cell id \"" + id + "\"");
  }
  return PrecubicalSet(std::move(out));
}

std::string serialize_complex(const PrecubicalSet& K) {
  json cells = json::array();
  for (const auto& [id, cell] : K.cells()) {
    json faces;
    faces["0"] = cell.faces[0];
    faces["1"] = cell.faces[1];
    cells.push_back({{"id", id}, {"dim", cell.dim}, {"faces", faces}});
  }
  json doc;
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

PathFile parse_path(const std::string& text) {
  const json doc = parse_json(text);
  PathFile out;
  out.complex_ref = string_field(doc, "complex", "path file");
  const json& legs = field(doc, "legs", "path file");
  if (!legs.is_array() || legs.empty()) throw ParseError("\"legs\" must be a nonempty array");
  for (std::size_t li = 0; li < legs.size(); ++li) {
    const std::string where = "leg " + std::to_string(li);
    const json& l = legs[li];
    Leg leg;
    leg.cube = string_field(l, "cube", where);
    leg.from = string_field(l, "from", where);
    leg.to = string_field(l, "to", where);
    const Rat duration = rat_field(field(l, "duration", where), where);
    const json& track = field(l, "track", where);
    if (!track.is_array() || track.size() < 2)
      throw ParseError(where + ": \"track\" needs at least two entries");
    for (const json& tp : track) {
      if (!tp.is_array() || tp.size() != 2 || !tp[1].is_array())
        throw ParseError(where + ": track entries must be [t, [x...]] pairs");
      TrackPoint point;
      point.t = rat_field(tp[0], where + " track time");
      for (const json& x : tp[1]) point.x.push_back(rat_field(x, where + " track coordinate"));
      leg.track.push_back(std::move(point));
    }
    if (leg.track.back().t != duration)
      throw ParseError(where + ": \"duration\" does not match the final track time");
    out.path.legs.push_back(std::move(leg));
  }
  return out;
}

std::string serialize_path(const std::string& complex_ref, const TameDPath& path) {
  json legs = json::array();
  for (const Leg& leg : path.legs) {
    json track = json::array();
    for (const TrackPoint& p : leg.track) {
      json coords = json::array();
      for (const Rat& x : p.x) coords.push_back(rat_str(x));
      track.push_back(json::array({rat_str(p.t), coords}));
    }
    legs.push_back({{"cube", leg.cube},
                    {"from", leg.from},
                    {"to", leg.to},
                    {"duration", rat_str(leg.duration())},
                    {"track", track}});
  }
  json doc;
  doc["complex"] = complex_ref;
  doc["legs"] = std::move(legs);
  return doc.dump(2) + "\n";
}

Reparam parse_reparam(const std::string& text) {
  const json doc = parse_json(text);
  const json& bps = field(doc, "breakpoints", "reparam file");
  if (!bps.is_array() || bps.size() < 2)
    throw ParseError("\"breakpoints\" must list at least two [t, v] pairs");
  std::vector<RBreak> pts;
  for (const json& b : bps) {
    if (!b.is_array() || b.size() != 2)
      throw ParseError("breakpoints must be [t, v] pairs");
    pts.push_back({rat_field(b[0], "breakpoint time"), rat_field(b[1], "breakpoint value")});
  }
  try {
    return Reparam::from_breakpoints(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_reparam(const Reparam& phi) {
  json bps = json::array();
  for (const RBreak& b : phi.breakpoints())
    bps.push_back(json::array({rat_str(b.t), rat_str(b.v)}));
  json doc;
  doc["breakpoints"] = std::move(bps);
  return doc.dump(2) + "\n";
}

Point parse_point(const PrecubicalSet& K, const std::string& text) {
  const auto colon = text.find(':');
  const CellId carrier = text.substr(0, colon);
  std::vector<Rat> coords;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size() && !rest.empty()) {
      const auto comma = rest.find(',', pos);
      const std::string tok =
          rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        coords.push_back(rat_parse(tok));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad point coordinate: ") + e.what());
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (!K.has(carrier)) throw ParseError("point carrier \"" + carrier + "\" not in complex");
  if (static_cast<int>(coords.size()) != K.dim(carrier))
    throw ParseError("point \"" + text + "\": expected " + std::to_string(K.dim(carrier)) +
                     " coordinates");
  try {
    return canonical_point(K, carrier, std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string point_str(const Point& p) {
  if (p.coords.empty()) return p.carrier;
  std::string out = p.carrier + ":";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ",";
    out += rat_str(p.coords[i]);
  }
  return out;
}

BoundarySubcomplex complex_as_boundary_subcomplex(const PrecubicalSet& K, int n) {
  std::vector<Word> words;
  for (const auto& [id, cell] : K.cells()) {
    if (static_cast<int>(id.size()) != n || !is_word(id))
      throw ParseError("cell id \"" + id +
                       "\" is not a word over {0,1,*} of length " + std::to_string(n));
    if (word_dim(id) != cell.dim)
      throw ParseError("cell \"" + id + "\": dim does not match its word");
    if (word_dim(id) == n)
      throw ParseError("cell \"" + id + "\" is the top cell, not a proper face");
    words.push_back(id);
  }
  return BoundarySubcomplex::generated_by(n, words);
}

}  // namespace dtop::io
