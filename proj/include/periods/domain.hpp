#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "periods/polynomial.hpp"

namespace periods {

struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned closed box with rational corners.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> axes);

  std::size_t dim() const { return axes_.size(); }
  const std::vector<Interval>& axes() const { return axes_; }
  const Interval& operator[](std::size_t i) const { return axes_.at(i); }

  Rational volume() const;
  bool contains(std::span<const double> point) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> axes_;
};

/// {x in box : p(x) >= 0 for every constraint p}. The box must contain the
/// zero set of the constraints' conjunction; that is the constructor's
/// contract and can be spot-checked with box_spot_check().
class Cell {
 public:
  Cell() = default;
  Cell(std::size_t dim, std::vector<Polynomial> constraints, Box box);

  std::size_t dim() const { return dim_; }
  const std::vector<Polynomial>& constraints() const { return constraints_; }
  const Box& box() const { return box_; }

  bool contains(std::span<const double> point) const;

  friend bool operator==(const Cell&, const Cell&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Polynomial> constraints_;
  Box box_;
};

/// Multiset of cells whose volumes add. Cells may have different dimensions.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  std::size_t max_dim() const;

  void append(const Domain& other);

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Constraint "poly >= 0" as written in source form; helpers for building cells.
Polynomial ge(const Polynomial& lhs, const Polynomial& rhs);  // lhs - rhs
Cell interval_cell(const Rational& lo, const Rational& hi);

Cell product(const Cell& a, const Cell& b);
Domain product(const Domain& a, const Domain& b);

/// Appends `extra` coordinates constrained to [0,1].
Cell pad(const Cell& c, std::size_t extra);
Domain pad(const Domain& a, std::size_t extra);

Cell translate(const Cell& c, std::size_t axis, const Rational& offset);
Domain translate(const Domain& a, std::size_t axis, const Rational& offset);

/// Stretches a cell along `axis` by factor > 0; volume scales by factor.
Cell stretch(const Cell& c, std::size_t axis, const Rational& factor);
Domain stretch(const Domain& a, std::size_t axis, const Rational& factor);

/// Pads every cell to the largest dimension and translates along axis 0 so
/// the boxes are pairwise disjoint (gap 1 between consecutive boxes).
Domain materialize_single_domain(const Domain& a);

/// True when every pair of cell boxes is disjoint along some axis (exact).
bool boxes_pairwise_disjoint(const Domain& a);

/// Samples an inflated box and reports whether any point satisfying the
/// constraints falls outside the declared box.
bool box_spot_check(const Cell& c, std::uint64_t seed, std::size_t samples = 10000);

}  // namespace periods
