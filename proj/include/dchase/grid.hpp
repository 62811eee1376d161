#pragma once

// Staircase-shaped commutative grids with exact rows and columns, their
// kernel and cokernel complexes, and the homology isomorphisms between them.
//
// Cells are addressed 0-based in code and 1-based in reports and JSON. Rows
// have non-increasing lengths and are left-aligned, so row 0 and column 0 are
// complete. The orientation says which way the arrows run:
//
//   kernel:   hmap(i,j) : (i,j) -> (i,j+1),   vmap(i,j) : (i,j) -> (i+1,j)
//   cokernel: hmap(i,j) : (i,j+1) -> (i,j),   vmap(i,j) : (i+1,j) -> (i,j)
//
// A cokernel grid is therefore drawn rotated by 180 degrees: cell (0,0) is the
// bottom-right corner and all arrows point towards it.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dchase/complex.hpp"
#include "dchase/relation.hpp"

namespace dchase {

struct Cell {
  std::size_t row;
  std::size_t col;
  auto operator<=>(const Cell&) const = default;
};

// "i,j" with 1-based indices.
std::string format_cell(Cell c);

class StaircaseShape {
 public:
  // Throws Error(shape) unless lengths are non-empty, >= 1 and non-increasing.
  explicit StaircaseShape(std::vector<std::size_t> row_lengths);
  static StaircaseShape rectangle(std::size_t rows, std::size_t cols);

  const std::vector<std::size_t>& row_lengths() const { return row_lengths_; }
  std::size_t rows() const { return row_lengths_.size(); }
  std::size_t row_length(std::size_t i) const { return i < rows() ? row_lengths_[i] : 0; }
  std::size_t col_length(std::size_t j) const;
  bool contains(Cell c) const { return c.row < rows() && c.col < row_lengths_[c.row]; }
  std::vector<Cell> cells() const;

  friend bool operator==(const StaircaseShape&, const StaircaseShape&) = default;

 private:
  std::vector<std::size_t> row_lengths_;
};

enum class Orientation { kernel, cokernel };

const char* to_string(Orientation o);

class Grid {
 public:
  // Missing dims default to 0 and missing maps to zero maps. Keys outside the
  // shape throw Error(shape); mis-sized matrices throw Error(dimension_mismatch).
  Grid(Field field, StaircaseShape shape, Orientation orientation, const std::map<Cell, std::size_t>& dims,
       const std::map<Cell, Matrix>& hmaps, const std::map<Cell, Matrix>& vmaps);

  static Grid zero(Field field, StaircaseShape shape, Orientation orientation);

  const Field& field() const { return field_; }
  const StaircaseShape& shape() const { return shape_; }
  Orientation orientation() const { return orientation_; }

  std::size_t dim(Cell c) const { return dims_.at(c); }
  bool has_hmap(Cell c) const { return hmaps_.contains(c); }
  bool has_vmap(Cell c) const { return vmaps_.contains(c); }
  const Matrix& hmap(Cell c) const;
  const Matrix& vmap(Cell c) const;
  const std::map<Cell, std::size_t>& dims() const { return dims_; }
  const std::map<Cell, Matrix>& hmaps() const { return hmaps_; }
  const std::map<Cell, Matrix>& vmaps() const { return vmaps_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Field field_;
  StaircaseShape shape_;
  Orientation orientation_;
  std::map<Cell, std::size_t> dims_;
  std::map<Cell, Matrix> hmaps_;
  std::map<Cell, Matrix> vmaps_;
};

struct ExactnessFailure {
  bool in_row;       // row or column
  std::size_t line;  // row / column index
  Cell cell;
};

struct ValidationReport {
  std::vector<Cell> non_commuting;  // top-left cell of each failing square
  std::vector<ExactnessFailure> not_exact;
  bool valid() const { return non_commuting.empty() && not_exact.empty(); }
};

ValidationReport validate(const Grid& g);
// Throws Error(hypothesis_failure) describing the first failure.
void require_valid(const Grid& g);

// Largest n such that every position 1..n can be compared: all cells (i,j),
// 1-based, with i + j <= n + 2 lie in the shape.
std::size_t admissible_positions(const StaircaseShape& s);
std::vector<Cell> missing_region_cells(const StaircaseShape& s, std::size_t n);

// 0 -> Ker(top-row vertical maps) with maps induced by the top row. Term j
// (1-based) is the whole cell when the cell below is absent.
ChainComplex kernel_complex_top(const Grid& g);
// 0 -> Ker(left-column horizontal maps) with maps induced by the left column.
ChainComplex kernel_complex_left(const Grid& g);

// The relation K_n x T_n obtained by chasing from the n-th top kernel term
// down the antidiagonal: incl, then alternately an inverse horizontal graph
// and a vertical graph, finally the inverse of the left-kernel inclusion.
Relation antidiagonal_relation(const Grid& g, std::size_t n);

struct HomologyIso {
  std::size_t position;
  HomologyAt source;
  HomologyAt target;
  Matrix matrix;  // target.dim x source.dim, invertible
};

// Homology at position n of the top kernel complex -> left kernel complex.
// witness_seed = 0 takes the canonical particular witness; other seeds add a
// seeded element of the homogeneous witness space (the result must not move).
HomologyIso kcl_homology_iso(const Grid& g, std::size_t n, std::uint64_t witness_seed = 0);

struct HomologyTable {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  bool equal() const { return first == second; }
};

// (top, left) homology dims at positions 1..admissible_positions.
HomologyTable kcl_homology_dims(const Grid& g);

// Transpose every map and flip the orientation; the cell labels stay put.
Grid dualize(const Grid& g);

// Cokernel complexes of a cokernel-oriented grid, in arrow order: the term at
// cell (n,1) sits at index rows - n and the complex ends in an explicit 0.
ChainComplex cokernel_complex_right(const Grid& g);
ChainComplex cokernel_complex_bottom(const Grid& g);

// Homology at position n of the right-column cokernel complex -> bottom-row
// cokernel complex, transported from the kernel side of dualize(g).
HomologyIso ccl_homology_iso(const Grid& g, std::size_t n);
// (right, bottom) homology dims at positions 1..admissible_positions, via dualize.
HomologyTable ccl_homology_dims(const Grid& g);

struct CorollaryReport {
  std::vector<std::size_t> top_dims;   // positions 1, 2, 3
  std::vector<std::size_t> left_dims;  // positions 1, 2, 3
  bool holds() const { return top_dims[0] == left_dims[0] && top_dims[1] == left_dims[1]; }
};

// For the Gamma-shaped grid with rows of lengths 3, 3, 2.
CorollaryReport corollary_check(const Grid& g);

// Restriction to a smaller staircase contained in g's shape.
Grid truncate(const Grid& g, const StaircaseShape& shape);

}  // namespace dchase
