#ifndef MZK_DIAGRAM_HPP_
#define MZK_DIAGRAM_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mzk {

enum class Row : uint8_t { Top, Bottom };

// A vertex of a diagram: row + 1-based column index.
struct Vertex {
  Row row;
  int index;

  friend bool operator==(Vertex const& a, Vertex const& b) {
    return a.row == b.row && a.index == b.index;
  }
  friend bool operator<(Vertex const& a, Vertex const& b) {
    if (a.row != b.row) {
      return a.row == Row::Top;
    }
    return a.index < b.index;
  }
};

inline Vertex top(int i) {
  return {Row::Top, i};
}
inline Vertex bot(int i) {
  return {Row::Bottom, i};
}

using Edge = std::pair<Vertex, Vertex>;

// A planar partial matching on two rows of n vertices; the common value
// underlying all six diagram monoids. Immutable after construction, with
// canonical edge storage so that structural equality is semantic equality.
class Diagram {
 public:
  Diagram() : n_(0) {}

  int n() const noexcept {
    return n_;
  }
  std::vector<Edge> const& edges() const noexcept {
    return edges_;
  }
  int rank() const noexcept {
    return static_cast<int>(edges_.size());
  }

  // Partner of a vertex, or nullopt-style {Row::Top, 0} if empty.
  bool has_partner(Vertex v) const;
  Vertex partner(Vertex v) const;

  std::vector<int> tau() const;   // indices of non-empty top vertices
  std::vector<int> beta() const;  // indices of non-empty bottom vertices

  friend bool operator==(Diagram const& a, Diagram const& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(Diagram const& a, Diagram const& b) {
    return !(a == b);
  }
  friend bool operator<(Diagram const& a, Diagram const& b) {
    if (a.n_ != b.n_) {
      return a.n_ < b.n_;
    }
    return a.edges_ < b.edges_;
  }

  size_t hash() const noexcept;

  // Compact canonical encoding, usable as a set key and stable across runs.
  std::string encode() const;

 private:
  friend Diagram make_diagram(int, std::vector<Edge>);
  friend Diagram make_diagram_unchecked(int, std::vector<Edge>&&);

  int n_;
  std::vector<Edge> edges_;  // each pair sorted, list sorted
};

struct ScaledDiagram {
  Diagram diagram;
  long loops = 0;

  friend bool operator==(ScaledDiagram const& a, ScaledDiagram const& b) {
    return a.loops == b.loops && a.diagram == b.diagram;
  }
};

// Membership flags of a diagram in each of the six monoids. InMotzkin is
// true for every valid Diagram; InRook means the diagram is the planar image
// of a rook diagram (edges cross rows only).
struct Membership {
  bool in_rook = false;
  bool in_planar_rook = false;
  bool in_rp = false;
  bool in_lp = false;
  bool in_tl = false;
  bool in_motzkin = true;
};

// 0/1 matrix with at most one 1 per row and column (a partial injection);
// the matrix form of R_n, which admits non-planar elements.
struct RookMatrix {
  int n = 0;
  // image[i] = j means a 1 in position (i, j); 0 means empty row i. 1-based.
  std::vector<int> image;

  bool operator==(RookMatrix const& other) const = default;
  int entry(int i, int j) const {
    return image[static_cast<size_t>(i)] == j ? 1 : 0;
  }
};

// Validates indices, degree bound, no self-loops, and chord planarity in the
// boundary order t1..tn, bn..b1. Throws IndexOutOfRange, DegreeViolation or
// CrossingEdges.
Diagram make_diagram(int n, std::vector<Edge> edges);

Diagram identity_diagram(int n);
Diagram empty_diagram(int n);

// Stacks d1 above d2, traces strands through the identified middle row and
// counts the closed cycles removed. Throws WidthMismatch.
ScaledDiagram multiply(Diagram const& d1, Diagram const& d2);

ScaledDiagram multiply(ScaledDiagram const& a, ScaledDiagram const& b);

std::vector<int> tau(Diagram const& d);
std::vector<int> beta(Diagram const& d);
int rank(Diagram const& d);

Membership membership(Diagram const& d);

RookMatrix to_matrix(Diagram const& d);        // throws NotARookDiagram
Diagram from_matrix(RookMatrix const& m);      // throws NotARookMatrix, CrossingEdges
RookMatrix matrix_multiply(RookMatrix const& a, RookMatrix const& b);
RookMatrix identity_matrix(int n);

// JSON wire format {"n": int, "edges": [["t3","b1"], ...]}.
std::string diagram_to_json(Diagram const& d);
Diagram diagram_from_json(std::string const& text);

// Two rows of filled/empty dots with the edge list printed beneath.
std::string render_ascii(Diagram const& d);

}  // namespace mzk

template <>
struct std::hash<mzk::Diagram> {
  size_t operator()(mzk::Diagram const& d) const noexcept {
    return d.hash();
  }
};

#endif  // MZK_DIAGRAM_HPP_
