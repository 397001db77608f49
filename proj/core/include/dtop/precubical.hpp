#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dtop {

/// Opaque cell identifier, unique within a PrecubicalSet. Nonempty.
using CellId = std::string;

/// A word over {0,1,*}: the face-lattice coordinates of the standard cube.
/// Stars mark free axes; the number of stars is the dimension.
using Word = std::string;

/// A corner of an n-cube: a word over {0,1} of length n.
using Corner = std::string;

struct Cell {
  int dim = 0;
  // faces[alpha][i-1] is the i-th face of sign alpha, 1 <= i <= dim.
  std::array<std::vector<CellId>, 2> faces;

  bool operator==(const Cell&) const = default;
};

/// Finite precubical set: graded cells with face maps satisfying
/// d_i^a d_j^b = d_{j-1}^b d_i^a for i < j. Immutable after construction;
/// structural invariants are checked by validate(), not the constructor.
class PrecubicalSet {
 public:
  PrecubicalSet() = default;
  explicit PrecubicalSet(std::map<CellId, Cell> cells) : cells_(std::move(cells)) {}

  const std::map<CellId, Cell>& cells() const { return cells_; }
  bool has(const CellId& id) const { return cells_.count(id) != 0; }
  std::size_t size() const { return cells_.size(); }

  /// Throws std::out_of_range on unknown ids.
  const Cell& at(const CellId& id) const;
  int dim(const CellId& id) const { return at(id).dim; }

  /// The face d_i^alpha of c, 1-based axis index. Throws on bad arguments.
  CellId face(const CellId& c, int i, int alpha) const;

  /// Applies the faces selected by a word over {0,1,*} whose length equals
  /// dim(c): position i fixes axis i to the given bit, '*' keeps it free.
  CellId iterated_face(const CellId& c, const Word& w) const;

  int max_dimension() const;
  std::map<int, int> cells_by_dim() const;

  /// Ids of all cells of the given dimension, in id order.
  std::vector<CellId> cells_of_dim(int d) const;

  bool operator==(const PrecubicalSet&) const = default;

 private:
  std::map<CellId, Cell> cells_;
};

struct Violation {
  CellId cell;
  std::string kind;  // "missing-face", "face-dim", "identity", "bad-dim", "empty-id"
  int i = 0, j = 0, alpha = -1, beta = -1;
  std::string detail;
};

/// Checks all PrecubicalSet invariants. Empty report iff the set is valid.
/// Violations are data, not failures.
std::vector<Violation> validate(const PrecubicalSet& K);

// ---- word utilities (the standard-cube face model) ----

bool is_word(const Word& w);              // over {0,1,*}
bool is_corner(const Corner& c);          // over {0,1}
int word_dim(const Word& w);              // number of stars
/// Replaces the i-th star (1-based) of w by the bit alpha.
Word word_face(const Word& w, int i, int alpha);
/// Cell id for a word of the standard cube; "()" names the empty word.
CellId word_id(const Word& w);

/// Coordinatewise corner order and strict inequality helpers.
bool corner_leq(const Corner& a, const Corner& b);
int corner_l1(const Corner& a, const Corner& b);

/// The standard n-cube as a word model: cells are the words in {0,1,*}^n.
/// Guarded at n <= 6. Throws std::invalid_argument outside [0,6].
PrecubicalSet standard_cube(int n);

/// standard_cube(n) minus its top cell, 1 <= n <= 6.
PrecubicalSet boundary_cube(int n);

/// The 0-cell at corner v of the n-cell c (faces applied from axis n down
/// to 1; order-independent by the precubical identities).
CellId vertex_of(const PrecubicalSet& K, const CellId& c, const Corner& v);

struct PushoutResult {
  PrecubicalSet set;
  std::map<CellId, CellId> left;   // characteristic map of the L leg
  std::map<CellId, CellId> right;  // characteristic map of the M leg
};

/// Pushout L ⊔_A M along f : A -> M, where A is a face-closed subcomplex of
/// L and f is a precubical morphism. Fresh ids are deterministic ("L."/"R."
/// tagged). Throws std::invalid_argument if f is not a precubical morphism
/// or A is not face-closed.
PushoutResult pushout(const PrecubicalSet& L, const std::set<CellId>& A,
                      const std::map<CellId, CellId>& f, const PrecubicalSet& M);

/// A face-closed set of proper faces of the standard n-cube boundary,
/// represented extensionally as words in {0,1,*}^n with at least one fixed
/// symbol. Closure under faces is computed eagerly on construction.
class BoundarySubcomplex {
 public:
  BoundarySubcomplex() = default;
  /// Closes the generating words under faces. Throws on words of the wrong
  /// length, non-proper words, or n < 1.
  static BoundarySubcomplex generated_by(int n, const std::vector<Word>& generators);
  /// All proper faces of the n-cube (that is, the full boundary).
  static BoundarySubcomplex full_boundary(int n);

  int n() const { return n_; }
  const std::set<Word>& cells() const { return words_; }
  bool contains(const Word& w) const { return words_.count(w) != 0; }
  bool empty() const { return words_.empty(); }

  /// Words of dimension >= 1 (at least one star), in word order.
  std::vector<Word> open_cells() const;

  /// The subcomplex as a standalone precubical set (word ids).
  PrecubicalSet to_precubical() const;

  bool operator==(const BoundarySubcomplex&) const = default;
  bool subset_of(const BoundarySubcomplex& other) const;

 private:
  int n_ = 0;
  std::set<Word> words_;
};

/// The set of proper-face words w of the n-cube on which the two distinct
/// n-cells x and y agree: iterated_face(x, w) == iterated_face(y, w).
/// Requires dim x == dim y == n >= 2 and x != y. The result is face-closed.
BoundarySubcomplex agreement_subcomplex(const PrecubicalSet& K, const CellId& x,
                                        const CellId& y);

}  // namespace dtop
