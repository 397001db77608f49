#include "dtop/precubical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dtop {

const Cell& PrecubicalSet::at(const CellId& id) const {
  auto it = cells_.find(id);
  if (it == cells_.end()) throw std::out_of_range("unknown cell id: " + id);
  return it->second;
}

CellId PrecubicalSet::face(const CellId& c, int i, int alpha) const {
  const Cell& cell = at(c);
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("face sign must be 0 or 1");
  if (i < 1 || i > cell.dim) throw std::invalid_argument("face index out of range for " + c);
  return cell.faces[alpha][static_cast<std::size_t>(i) - 1];
}

CellId PrecubicalSet::iterated_face(const CellId& c, const Word& w) const {
  if (static_cast<int>(w.size()) != dim(c))
    throw std::invalid_argument("word length does not match cell dimension");
  CellId cur = c;
  // Descending axis order keeps lower indices stable.
  for (int i = static_cast<int>(w.size()); i >= 1; --i) {
    char ch = w[static_cast<std::size_t>(i) - 1];
    if (ch == '*') continue;
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad word symbol");
    cur = face(cur, i, ch - '0');
  }
  return cur;
}

int PrecubicalSet::max_dimension() const {
  int m = 0;
  for (const auto& [id, cell] : cells_) m = std::max(m, cell.dim);
  return m;
}

std::map<int, int> PrecubicalSet::cells_by_dim() const {
  std::map<int, int> counts;
  for (const auto& [id, cell] : cells_) ++counts[cell.dim];
  return counts;
}

std::vector<CellId> PrecubicalSet::cells_of_dim(int d) const {
  std::vector<CellId> out;
  for (const auto& [id, cell] : cells_)
    if (cell.dim == d) out.push_back(id);
  return out;
}

std::vector<Violation> validate(const PrecubicalSet& K) {
  std::vector<Violation> report;
  for (const auto& [id, cell] : K.cells()) {
    if (id.empty()) report.push_back({id, "empty-id", 0, 0, -1, -1, "cell with empty id"});
    if (cell.dim < 0) {
      report.push_back({id, "bad-dim", 0, 0, -1, -1, "negative dimension"});
      continue;
    }
    bool faces_ok = true;
    for (int alpha = 0; alpha <= 1; ++alpha) {
      if (static_cast<int>(cell.faces[alpha].size()) != cell.dim) {
        std::ostringstream os;
        os << "face list for sign " << alpha << " has " << cell.faces[alpha].size()
           << " entries, expected " << cell.dim;
        report.push_back({id, "face-dim", 0, 0, alpha, -1, os.str()});
        faces_ok = false;
        continue;
      }
      for (int i = 1; i <= cell.dim; ++i) {
        const CellId& g = cell.faces[alpha][static_cast<std::size_t>(i) - 1];
        if (!K.has(g)) {
          report.push_back({id, "missing-face", i, 0, alpha, -1, "face " + g + " does not exist"});
          faces_ok = false;
        } else if (K.dim(g) != cell.dim - 1) {
          std::ostringstream os;
          os << "face " << g << " has dimension " << K.dim(g) << ", expected " << cell.dim - 1;
          report.push_back({id, "face-dim", i, 0, alpha, -1, os.str()});
          faces_ok = false;
        }
      }
    }
    if (!faces_ok || cell.dim < 2) continue;
    // d_i^a d_j^b c = d_{j-1}^b d_i^a c for 1 <= i < j <= dim.
    for (int j = 2; j <= cell.dim; ++j) {
      for (int i = 1; i < j; ++i) {
        for (int alpha = 0; alpha <= 1; ++alpha) {
          for (int beta = 0; beta <= 1; ++beta) {
            const CellId dj = cell.faces[beta][static_cast<std::size_t>(j) - 1];
            const CellId di = cell.faces[alpha][static_cast<std::size_t>(i) - 1];
            if (!K.has(dj) || !K.has(di)) continue;
            if (K.dim(dj) != cell.dim - 1 || K.dim(di) != cell.dim - 1) continue;
            const Cell& cj = K.at(dj);
            const Cell& ci = K.at(di);
            if (static_cast<int>(cj.faces[alpha].size()) < i ||
                static_cast<int>(ci.faces[beta].size()) < j - 1)
              continue;
            const CellId lhs = cj.faces[alpha][static_cast<std::size_t>(i) - 1];
            const CellId rhs = ci.faces[beta][static_cast<std::size_t>(j) - 2];
            if (lhs != rhs) {
              std::ostringstream os;
              os << "d_" << i << "^" << alpha << " d_" << j << "^" << beta << " = " << lhs
                 << " but d_" << j - 1 << "^" << beta << " d_" << i << "^" << alpha << " = " << rhs;
              report.push_back({id, "identity", i, j, alpha, beta, os.str()});
            }
          }
        }
      }
    }
  }
  return report;
}

bool is_word(const Word& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == '0' || c == '1' || c == '*'; });
}

bool is_corner(const Corner& c) {
  return std::all_of(c.begin(), c.end(), [](char ch) { return ch == '0' || ch == '1'; });
}

int word_dim(const Word& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), '*'));
}

Word word_face(const Word& w, int i, int alpha) {
  int seen = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == '*' && ++seen == i) {
      Word out = w;
      out[p] = static_cast<char>('0' + alpha);
      return out;
    }
  }
  throw std::invalid_argument("word has fewer than " + std::to_string(i) + " stars");
}

CellId word_id(const Word& w) { return w.empty() ? CellId("()") : CellId(w); }

bool corner_leq(const Corner& a, const Corner& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int corner_l1(const Corner& a, const Corner& b) {
  if (a.size() != b.size()) throw std::invalid_argument("corner length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

namespace {

void enumerate_words(int n, const std::string& alphabet, std::vector<Word>& out) {
  Word w(static_cast<std::size_t>(n), alphabet[0]);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(w);
    int pos = n - 1;
    while (pos >= 0) {
      auto p = static_cast<std::size_t>(pos);
      if (++idx[p] < alphabet.size()) {
        w[p] = alphabet[idx[p]];
        break;
      }
      idx[p] = 0;
      w[p] = alphabet[0];
      --pos;
    }
    if (pos < 0) break;
  }
}

Cell word_cell(const Word& w) {
  Cell cell;
  cell.dim = word_dim(w);
  for (int alpha = 0; alpha <= 1; ++alpha)
    for (int i = 1; i <= cell.dim; ++i)
      cell.faces[alpha].push_back(word_id(word_face(w, i, alpha)));
  return cell;
}

}  // namespace

PrecubicalSet standard_cube(int n) {
  if (n < 0) throw std::invalid_argument("standard_cube: negative dimension");
  if (n > 6) throw std::invalid_argument("standard_cube: n > 6 exceeds the size limit");
  std::vector<Word> words;
  if (n == 0)
    words.push_back("");
  else
    enumerate_words(n, "01*", words);
  std::map<CellId, Cell> cells;
  for (const Word& w : words) cells[word_id(w)] = word_cell(w);
  return PrecubicalSet(std::move(cells));
}

PrecubicalSet boundary_cube(int n) {
  if (n < 1) throw std::invalid_argument("boundary_cube: n must be >= 1");
  PrecubicalSet full = standard_cube(n);
  std::map<CellId, Cell> cells = full.cells();
  cells.erase(Word(static_cast<std::size_t>(n), '*'));
  return PrecubicalSet(std::move(cells));
}

CellId vertex_of(const PrecubicalSet& K, const CellId& c, const Corner& v) {
  if (!is_corner(v)) throw std::invalid_argument("corner must be a bitstring");
  if (static_cast<int>(v.size()) != K.dim(c))
    throw std::invalid_argument("corner length does not match cell dimension");
  return K.iterated_face(c, v);
}

PushoutResult pushout(const PrecubicalSet& L, const std::set<CellId>& A,
                      const std::map<CellId, CellId>& f, const PrecubicalSet& M) {
  // A must be a face-closed subcomplex of L.
  for (const CellId& a : A) {
    if (!L.has(a)) throw std::invalid_argument("pushout: subcomplex cell " + a + " not in L");
    const Cell& cell = L.at(a);
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (const CellId& g : cell.faces[alpha])
        if (!A.count(g))
          throw std::invalid_argument("pushout: subcomplex not face-closed at " + a);
  }
  // f must be a dimension- and face-preserving map A -> M.
  for (const CellId& a : A) {
    auto it = f.find(a);
    if (it == f.end()) throw std::invalid_argument("pushout: f undefined on " + a);
    if (!M.has(it->second))
      throw std::invalid_argument("pushout: f(" + a + ") not in M");
    if (M.dim(it->second) != L.dim(a))
      throw std::invalid_argument("pushout: f does not preserve dimension at " + a);
    const Cell& la = L.at(a);
    const Cell& ma = M.at(it->second);
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (int i = 0; i < la.dim; ++i) {
        auto fit = f.find(la.faces[alpha][static_cast<std::size_t>(i)]);
        if (fit == f.end() || fit->second != ma.faces[alpha][static_cast<std::size_t>(i)])
          throw std::invalid_argument("pushout: f does not commute with faces at " + a);
      }
  }

  PushoutResult out;
  auto left_name = [&](const CellId& c) -> CellId {
    auto it = f.find(c);
    return it != f.end() ? "R." + it->second : "L." + c;
  };
  std::map<CellId, Cell> cells;
  for (const auto& [id, cell] : M.cells()) {
    Cell fresh;
    fresh.dim = cell.dim;
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (const CellId& g : cell.faces[alpha]) fresh.faces[alpha].push_back("R." + g);
    cells["R." + id] = std::move(fresh);
    out.right[id] = "R." + id;
  }
  for (const auto& [id, cell] : L.cells()) {
    out.left[id] = left_name(id);
    if (A.count(id)) continue;
    Cell fresh;
    fresh.dim = cell.dim;
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (const CellId& g : cell.faces[alpha]) fresh.faces[alpha].push_back(left_name(g));
    cells["L." + id] = std::move(fresh);
  }
  out.set = PrecubicalSet(std::move(cells));
  return out;
}

BoundarySubcomplex BoundarySubcomplex::generated_by(int n, const std::vector<Word>& generators) {
  if (n < 1) throw std::invalid_argument("BoundarySubcomplex: n must be >= 1");
  BoundarySubcomplex out;
  out.n_ = n;
  std::vector<Word> stack;
  for (const Word& g : generators) {
    if (static_cast<int>(g.size()) != n || !is_word(g))
      throw std::invalid_argument("BoundarySubcomplex: bad word \"" + g + "\"");
    if (word_dim(g) == n)
      throw std::invalid_argument("BoundarySubcomplex: word \"" + g + "\" is not a proper face");
    stack.push_back(g);
  }
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    if (!out.words_.insert(w).second) continue;
    const int d = word_dim(w);
    for (int i = 1; i <= d; ++i)
      for (int alpha = 0; alpha <= 1; ++alpha) stack.push_back(word_face(w, i, alpha));
  }
  return out;
}

BoundarySubcomplex BoundarySubcomplex::full_boundary(int n) {
  std::vector<Word> gens;
  const Word top(static_cast<std::size_t>(n), '*');
  for (int i = 1; i <= n; ++i)
    for (int alpha = 0; alpha <= 1; ++alpha) gens.push_back(word_face(top, i, alpha));
  return generated_by(n, gens);
}

std::vector<Word> BoundarySubcomplex::open_cells() const {
  std::vector<Word> out;
  for (const Word& w : words_)
    if (word_dim(w) >= 1) out.push_back(w);
  return out;
}

PrecubicalSet BoundarySubcomplex::to_precubical() const {
  std::map<CellId, Cell> cells;
  for (const Word& w : words_) {
    Cell cell;
    cell.dim = word_dim(w);
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (int i = 1; i <= cell.dim; ++i)
        cell.faces[alpha].push_back(word_id(word_face(w, i, alpha)));
    cells[word_id(w)] = std::move(cell);
  }
  return PrecubicalSet(std::move(cells));
}

bool BoundarySubcomplex::subset_of(const BoundarySubcomplex& other) const {
  if (n_ != other.n_) return false;
  return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

BoundarySubcomplex agreement_subcomplex(const PrecubicalSet& K, const CellId& x,
                                        const CellId& y) {
  const int n = K.dim(x);
  if (K.dim(y) != n) throw std::invalid_argument("agreement_subcomplex: dimension mismatch");
  if (n < 2) throw std::invalid_argument("agreement_subcomplex: dimension must be >= 2");
  if (x == y) throw std::invalid_argument("agreement_subcomplex: cells must differ");
  std::vector<Word> words;
  enumerate_words(n, "01*", words);
  std::vector<Word> agreeing;
  for (const Word& w : words) {
    if (word_dim(w) == n) continue;  // only proper faces
    if (K.iterated_face(x, w) == K.iterated_face(y, w)) agreeing.push_back(w);
  }
  return BoundarySubcomplex::generated_by(n, agreeing);
}

}  // namespace dtop
