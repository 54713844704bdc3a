#include "periods/domain.hpp"

#include <algorithm>

#include "periods/philox.hpp"

namespace periods {

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
  for (const auto& iv : axes_) {
    if (iv.lo > iv.hi) throw Error(ErrorKind::InvalidArgument, "box interval with lo > hi");
  }
}

Rational Box::volume() const {
  Rational v(1);
  for (const auto& iv : axes_) v *= iv.width();
  return v;
}

bool Box::contains(std::span<const double> point) const {
  if (point.size() != axes_.size()) throw Error(ErrorKind::DimensionMismatch, "box/point dimension mismatch");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (point[i] < axes_[i].lo.to_double() || point[i] > axes_[i].hi.to_double()) return false;
  }
  return true;
}

Cell::Cell(std::size_t dim, std::vector<Polynomial> constraints, Box box)
    : dim_(dim), constraints_(std::move(constraints)), box_(std::move(box)) {
  if (box_.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "box dimension differs from cell dimension");
  for (const auto& p : constraints_) {
    if (p.variables() != dim_) throw Error(ErrorKind::DimensionMismatch, "constraint variable count differs from cell dimension");
  }
}

bool Cell::contains(std::span<const double> point) const {
  if (point.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "cell/point dimension mismatch");
  if (!box_.contains(point)) return false;
  for (const auto& p : constraints_) {
    if (p.eval(point) < 0.0) return false;
  }
  return true;
}

std::size_t Domain::max_dim() const {
  std::size_t d = 0;
  for (const auto& c : cells_) d = std::max(d, c.dim());
  return d;
}

void Domain::append(const Domain& other) {
  cells_.insert(cells_.end(), other.cells_.begin(), other.cells_.end());
}

Polynomial ge(const Polynomial& lhs, const Polynomial& rhs) { return lhs - rhs; }

Cell interval_cell(const Rational& lo, const Rational& hi) {
  Polynomial x = Polynomial::variable(1, 0);
  return Cell(1, {ge(x, Polynomial::constant(1, lo)), ge(Polynomial::constant(1, hi), x)}, Box({{lo, hi}}));
}

Cell product(const Cell& a, const Cell& b) {
  std::size_t n = a.dim() + b.dim();
  std::vector<Polynomial> cs;
  cs.reserve(a.constraints().size() + b.constraints().size());
  for (const auto& p : a.constraints()) cs.push_back(p.embed(n, 0));
  for (const auto& p : b.constraints()) cs.push_back(p.embed(n, a.dim()));
  std::vector<Interval> axes = a.box().axes();
  axes.insert(axes.end(), b.box().axes().begin(), b.box().axes().end());
  return Cell(n, std::move(cs), Box(std::move(axes)));
}

Domain product(const Domain& a, const Domain& b) {
  std::vector<Cell> cells;
  cells.reserve(a.size() * b.size());
  for (const auto& ca : a.cells()) {
    for (const auto& cb : b.cells()) cells.push_back(product(ca, cb));
  }
  return Domain(std::move(cells));
}

Cell pad(const Cell& c, std::size_t extra) {
  if (extra == 0) return c;
  std::size_t n = c.dim() + extra;
  std::vector<Polynomial> cs;
  for (const auto& p : c.constraints()) cs.push_back(p.embed(n, 0));
  std::vector<Interval> axes = c.box().axes();
  for (std::size_t i = c.dim(); i < n; ++i) {
    Polynomial x = Polynomial::variable(n, i);
    cs.push_back(x);
    cs.push_back(Polynomial::constant(n, Rational(1)) - x);
    axes.push_back({Rational(0), Rational(1)});
  }
  return Cell(n, std::move(cs), Box(std::move(axes)));
}

Domain pad(const Domain& a, std::size_t extra) {
  std::vector<Cell> cells;
  for (const auto& c : a.cells()) cells.push_back(pad(c, extra));
  return Domain(std::move(cells));
}

Cell translate(const Cell& c, std::size_t axis, const Rational& offset) {
  if (axis >= c.dim()) throw Error(ErrorKind::DimensionMismatch, "translation axis beyond cell dimension");
  std::vector<Polynomial> cs;
  for (const auto& p : c.constraints()) cs.push_back(p.shift(axis, offset));
  std::vector<Interval> axes = c.box().axes();
  axes[axis].lo += offset;
  axes[axis].hi += offset;
  return Cell(c.dim(), std::move(cs), Box(std::move(axes)));
}

Domain translate(const Domain& a, std::size_t axis, const Rational& offset) {
  std::vector<Cell> cells;
  for (const auto& c : a.cells()) cells.push_back(translate(c, axis, offset));
  return Domain(std::move(cells));
}

Cell stretch(const Cell& c, std::size_t axis, const Rational& factor) {
  if (factor.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "stretch factor must be positive");
  if (axis >= c.dim()) throw Error(ErrorKind::DimensionMismatch, "stretch axis beyond cell dimension");
  Rational inv = factor.inverse();
  std::vector<Polynomial> cs;
  for (const auto& p : c.constraints()) cs.push_back(p.scale_axis(axis, inv));
  std::vector<Interval> axes = c.box().axes();
  axes[axis].lo *= factor;
  axes[axis].hi *= factor;
  return Cell(c.dim(), std::move(cs), Box(std::move(axes)));
}

Domain stretch(const Domain& a, std::size_t axis, const Rational& factor) {
  std::vector<Cell> cells;
  for (const auto& c : a.cells()) cells.push_back(stretch(c, axis, factor));
  return Domain(std::move(cells));
}

Domain materialize_single_domain(const Domain& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyDomain, "cannot materialize an empty domain");
  std::size_t n = a.max_dim();
  std::vector<Cell> cells;
  Rational cursor;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Cell c = pad(a.cells()[i], n - a.cells()[i].dim());
    if (i > 0) c = translate(c, 0, cursor - c.box()[0].lo);
    cursor = c.box()[0].hi + Rational(1);
    cells.push_back(std::move(c));
  }
  return Domain(std::move(cells));
}

bool boxes_pairwise_disjoint(const Domain& a) {
  const auto& cells = a.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Box& p = cells[i].box();
      const Box& q = cells[j].box();
      bool separated = false;
      for (std::size_t k = 0; k < std::min(p.dim(), q.dim()) && !separated; ++k) {
        separated = p[k].hi < q[k].lo || q[k].hi < p[k].lo;
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool box_spot_check(const Cell& c, std::uint64_t seed, std::size_t samples) {
  std::vector<double> lo(c.dim()), hi(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    double l = c.box()[i].lo.to_double();
    double h = c.box()[i].hi.to_double();
    double pad_width = std::max(0.5 * (h - l), 0.5);
    lo[i] = l - pad_width;
    hi[i] = h + pad_width;
  }
  PhiloxStream rng(seed, 0xB0C5, 0);
  std::vector<double> x(c.dim());
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < c.dim(); ++i) x[i] = lo[i] + (hi[i] - lo[i]) * rng.next_unit();
    if (c.box().contains(x)) continue;
    bool member = true;
    for (const auto& p : c.constraints()) {
      if (p.eval(std::span<const double>(x)) < 0.0) {
        member = false;
        break;
      }
    }
    if (member) return false;
  }
  return true;
}

}  // namespace periods
