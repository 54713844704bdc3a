#include "periods/witness.hpp"

#include <algorithm>

namespace periods {

const char* provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Dimension: return "dimension";
    case Provenance::Registry: return "registry";
    case Provenance::Arithmetic: return "arithmetic";
  }
  return "unknown";
}

namespace {

const GaussianRational kOne{Rational(1), Rational()};

std::shared_ptr<const PowerNode> leaf_node(unsigned ledger, bool zero, bool algebraic, const Signature& sig) {
  auto node = std::make_shared<PowerNode>();
  node->kind = PowerNode::Kind::Leaf;
  node->ledger = ledger;
  node->zero = zero;
  node->algebraic = algebraic;
  if (auto mono = sig.as_monomial()) node->monomial = mono->second;
  return node;
}

std::shared_ptr<const PowerNode> inner_node(PowerNode::Kind kind, unsigned ledger, bool algebraic, const Signature& sig,
                                            std::shared_ptr<const PowerNode> lhs,
                                            std::shared_ptr<const PowerNode> rhs = nullptr, unsigned exponent = 1) {
  auto node = std::make_shared<PowerNode>();
  node->kind = kind;
  node->ledger = ledger;
  node->algebraic = algebraic;
  if (auto mono = sig.as_monomial()) node->monomial = mono->second;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  node->exponent = exponent;
  return node;
}

unsigned add_saturating(unsigned a, unsigned b) {
  if (a == DegreeBound::kInfinite || b == DegreeBound::kInfinite) return DegreeBound::kInfinite;
  return a + b;
}

void check_size(std::size_t cells) {
  if (cells > PeriodWitness::kMaxCells) {
    throw Error(ErrorKind::TooLarge, "witness would have " + std::to_string(cells) + " cells (limit " +
                                         std::to_string(PeriodWitness::kMaxCells) + ")");
  }
}

Domain unite(std::initializer_list<const Domain*> parts) {
  Domain out;
  for (const Domain* d : parts) out.append(*d);
  return out;
}

std::string rational_atom_arg(const Rational& q) { return q.str(); }

}  // namespace

// ---------------------------------------------------------------- Registry

void Registry::add(const Monomial& m, unsigned bound, std::function<PeriodWitness()> builder) {
  entries_[monomial_key(m)] = Entry{m, bound, std::move(builder)};
}

const Registry::Entry* Registry::find(const Monomial& m) const {
  auto it = entries_.find(monomial_key(m));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<unsigned> Registry::bound_for(const Signature& s) const {
  auto mono = s.as_monomial();
  if (!mono || mono->second.empty()) return std::nullopt;
  if (const Entry* e = find(mono->second)) return e->bound;
  return std::nullopt;
}

const Registry& default_registry() {
  static const Registry registry = [] {
    Registry r;
    r.add({{"log(2)", 1}, {"pi", 1}}, 3, [] { return builtin("pi_log2"); });
    r.add({{"pi", 2}}, 3, [] { return builtin("pi_squared"); });
    return r;
  }();
  return registry;
}

unsigned atom_bound(const std::string& atom) {
  if (atom == "pi") return 2;
  if (atom.rfind("log(", 0) == 0) return 2;
  if (atom.rfind("sqrt(", 0) == 0) return 1;
  throw Error(ErrorKind::UnknownName, "no degree bound known for atom '" + atom + "'");
}

// ---------------------------------------------------------------- PeriodWitness

PeriodWitness::PeriodWitness(Domain re_pos, Domain re_neg, Domain im_pos, Domain im_neg, Signature signature,
                             DegreeBound bound, AlgebraicInfo algebraic, std::shared_ptr<const PowerNode> power)
    : re_pos_(std::move(re_pos)),
      re_neg_(std::move(re_neg)),
      im_pos_(std::move(im_pos)),
      im_neg_(std::move(im_neg)),
      signature_(std::move(signature)),
      bound_(bound),
      algebraic_(std::move(algebraic)),
      power_(std::move(power)) {
  check_size(cell_count());
}

const PowerNode& PeriodWitness::power_node() const {
  static const PowerNode zero_node{PowerNode::Kind::Leaf, 0, true, false, std::nullopt, nullptr, nullptr, 1};
  return power_ ? *power_ : zero_node;
}

bool PeriodWitness::is_zero() const { return cell_count() == 0; }

std::size_t PeriodWitness::cell_count() const {
  return re_pos_.size() + re_neg_.size() + im_pos_.size() + im_neg_.size();
}

std::size_t PeriodWitness::max_dim() const {
  return std::max({re_pos_.max_dim(), re_neg_.max_dim(), im_pos_.max_dim(), im_neg_.max_dim()});
}

PeriodWitness PeriodWitness::with_bound(DegreeBound bound) const {
  PeriodWitness w = *this;
  w.bound_ = bound;
  if (power_) {
    auto node = std::make_shared<PowerNode>(*power_);
    node->ledger = bound.value;
    w.power_ = std::move(node);
  }
  return w;
}

bool operator==(const PeriodWitness& a, const PeriodWitness& b) {
  return a.re_pos_ == b.re_pos_ && a.re_neg_ == b.re_neg_ && a.im_pos_ == b.im_pos_ && a.im_neg_ == b.im_neg_ &&
         a.signature_ == b.signature_ && a.bound_ == b.bound_ && a.algebraic_ == b.algebraic_;
}

// ---------------------------------------------------------------- constructors

PeriodWitness zero_witness() {
  return PeriodWitness({}, {}, {}, {}, Signature::zero(), {0, Provenance::Dimension}, {true, false, GaussianRational{}},
                       leaf_node(0, true, true, Signature::zero()));
}

PeriodWitness make_algebraic(const GaussianRational& q) {
  if (q.is_zero()) return zero_witness();
  auto route = [](const Rational& v, Domain& pos, Domain& neg) {
    if (v.sign() > 0) pos = Domain({interval_cell(Rational(0), v)});
    if (v.sign() < 0) neg = Domain({interval_cell(Rational(0), -v)});
  };
  Domain rp, rn, ip, in;
  route(q.re, rp, rn);
  route(q.im, ip, in);
  Signature sig = Signature::constant(q);
  return PeriodWitness(std::move(rp), std::move(rn), std::move(ip), std::move(in), sig, {1, Provenance::Dimension},
                       {true, true, q}, leaf_node(1, false, true, sig));
}

PeriodWitness make_algebraic(const Rational& q) { return make_algebraic(GaussianRational{q, Rational()}); }

PeriodWitness make_sqrt(unsigned long n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sqrt witness needs n >= 1");
  Polynomial x = Polynomial::variable(1, 0);
  Polynomial nn = Polynomial::constant(1, Rational(static_cast<long>(n)));
  mpz_class root = sqrt(mpz_class(n));
  // box upper corner: smallest integer >= sqrt(n)
  mpz_class upper = root * root == n ? root : root + 1;
  Cell cell(1, {x, nn - x * x}, Box({{Rational(0), Rational(upper, 1)}}));
  AlgebraicInfo info{true, true, std::nullopt};
  Signature sig;
  if (root * root == n) {
    info.exact = GaussianRational{Rational(root, 1), Rational()};
    sig = Signature::constant(*info.exact);
  } else {
    sig = Signature::atom("sqrt(" + std::to_string(n) + ")");
  }
  return PeriodWitness(Domain({cell}), {}, {}, {}, sig, {1, Provenance::Dimension}, info,
                       leaf_node(1, false, true, sig));
}

namespace {

PeriodWitness transcendental_leaf(Cell cell, const Signature& sig) {
  unsigned dim = static_cast<unsigned>(cell.dim());
  return PeriodWitness(Domain({std::move(cell)}), {}, {}, {}, sig, {dim, Provenance::Dimension}, {},
                       leaf_node(dim, false, false, sig));
}

Polynomial disk_radius_sq(std::size_t n) {
  Polynomial x = Polynomial::variable(n, 0);
  Polynomial y = Polynomial::variable(n, 1);
  return x * x + y * y;
}

Box disk_box_with(std::optional<Interval> third) {
  std::vector<Interval> axes{{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}};
  if (third) axes.push_back(*third);
  return Box(std::move(axes));
}

PeriodWitness builtin_pi() {
  Polynomial one = Polynomial::constant(2, Rational(1));
  return transcendental_leaf(Cell(2, {one - disk_radius_sq(2)}, disk_box_with(std::nullopt)), Signature::atom("pi"));
}

PeriodWitness builtin_log(const Rational& q) {
  if (q <= Rational(1)) throw Error(ErrorKind::InvalidArgument, "log(q) requires q > 1, got " + q.str());
  Polynomial x = Polynomial::variable(2, 0);
  Polynomial y = Polynomial::variable(2, 1);
  Polynomial one = Polynomial::constant(2, Rational(1));
  Cell cell(2, {x - one, Polynomial::constant(2, q) - x, y, one - x * y},
            Box({{Rational(1), q}, {Rational(0), Rational(1)}}));
  return transcendental_leaf(std::move(cell), Signature::atom("log(" + rational_atom_arg(q) + ")"));
}

// {x^2+y^2 <= 1, 0 <= z*g(x,y) <= top}
PeriodWitness builtin_solid(const Polynomial& g, const Rational& top, const Signature& sig) {
  Polynomial one = Polynomial::constant(3, Rational(1));
  Polynomial z = Polynomial::variable(3, 2);
  Polynomial zg = z * g;
  Cell cell(3, {one - disk_radius_sq(3), zg, Polynomial::constant(3, top) - zg},
            disk_box_with(Interval{Rational(0), top}));
  return transcendental_leaf(std::move(cell), sig);
}

PeriodWitness builtin_pi_log2() {
  Polynomial g = disk_radius_sq(3) + Polynomial::constant(3, Rational(1));
  return builtin_solid(g, Rational(1), Signature::atom("log(2)") * Signature::atom("pi"));
}

PeriodWitness builtin_pi_squared() {
  Polynomial r2 = disk_radius_sq(3);
  Polynomial g = r2 * r2 + Polynomial::constant(3, Rational(1));
  return builtin_solid(g, Rational(4), Signature::atom("pi").pow(2));
}

PeriodWitness builtin_zeta_even(const Rational& s) {
  if (!s.is_integer() || s.sign() <= 0 || !mpz_even_p(s.numerator().get_mpz_t())) {
    throw Error(ErrorKind::InvalidArgument, "zeta_even needs a positive even integer, got " + s.str());
  }
  long two_k = s.numerator().get_si();
  int k = static_cast<int>(two_k / 2);
  if (k > kMaxBernoulliIndex) throw Error(ErrorKind::OutOfRange, "zeta_even argument too large");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(two_k));
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(two_k - 1));
  Rational factor = Rational(two_pow, fact) * bernoulli(k);
  return scale(factor, power(builtin_pi(), static_cast<unsigned>(two_k)));
}

}  // namespace

PeriodWitness builtin(const std::string& name, const std::vector<Rational>& params) {
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(ErrorKind::InvalidArgument,
                  "builtin '" + name + "' takes " + std::to_string(n) + " parameter(s), got " +
                      std::to_string(params.size()));
    }
  };
  if (name == "pi") { expect(0); return builtin_pi(); }
  if (name == "log") { expect(1); return builtin_log(params[0]); }
  if (name == "pi_log2") { expect(0); return builtin_pi_log2(); }
  if (name == "pi_squared") { expect(0); return builtin_pi_squared(); }
  if (name == "zeta_even") { expect(1); return builtin_zeta_even(params[0]); }
  throw Error(ErrorKind::UnknownName, "unknown builtin '" + name + "'");
}

std::vector<GalleryEntry> gallery() {
  return {
      {"pi", "pi", "area of the unit disk {x^2 + y^2 <= 1}"},
      {"log", "log(q)", "area of {1 <= x <= q, y >= 0, x*y <= 1} for rational q > 1"},
      {"pi_log2", "pi_log2",
       "pi*log(2) as the volume of {x^2 + y^2 <= 1, 0 <= z*(x^2 + y^2 + 1) <= 1}; degree bound 3"},
      {"pi_squared", "pi_squared",
       "pi^2 as the volume of {x^2 + y^2 <= 1, 0 <= z*((x^2 + y^2)^2 + 1) <= 4}; degree bound 3"},
      {"zeta_even", "zeta(2k)", "2^(2k-1) B_k / (2k)! times the best witness for pi^(2k), with B_1 = 1/6"},
      {"sqrt", "sqrt(n)", "length of {x >= 0, n - x^2 >= 0}"},
      {"rational", "p/q", "length of [0, p/q]"},
  };
}

// ---------------------------------------------------------------- algebra

PeriodWitness negate(const PeriodWitness& w) {
  if (w.is_zero()) return w;
  AlgebraicInfo info = w.algebraic();
  if (info.exact) info.exact = -*info.exact;
  Signature sig = -w.signature();
  return PeriodWitness(w.re_neg(), w.re_pos(), w.im_neg(), w.im_pos(), sig, w.bound(), info,
                       inner_node(PowerNode::Kind::Scaled, w.bound().value, info.algebraic, sig, w.power_node_ptr()));
}

namespace {

std::pair<Domain, Domain> signed_stretch(const Rational& r, const Domain& pos, const Domain& neg) {
  if (r.is_zero()) return {};
  Rational m = r.abs();
  Domain p = m == Rational(1) ? pos : stretch(pos, 0, m);
  Domain n = m == Rational(1) ? neg : stretch(neg, 0, m);
  if (r.sign() > 0) return {std::move(p), std::move(n)};
  return {std::move(n), std::move(p)};
}

}  // namespace

PeriodWitness scale(const GaussianRational& q, const PeriodWitness& w) {
  if (q.is_zero() || w.is_zero()) return zero_witness();
  if (w.algebraic().exact) return make_algebraic(q * *w.algebraic().exact);
  // (a + bi)(P + iQ) = (aP - bQ) + i(bP + aQ)
  auto [aP_pos, aP_neg] = signed_stretch(q.re, w.re_pos(), w.re_neg());
  auto [bQ_pos, bQ_neg] = signed_stretch(-q.im, w.im_pos(), w.im_neg());
  auto [bP_pos, bP_neg] = signed_stretch(q.im, w.re_pos(), w.re_neg());
  auto [aQ_pos, aQ_neg] = signed_stretch(q.re, w.im_pos(), w.im_neg());
  Signature sig = w.signature().scaled(q);
  AlgebraicInfo info = w.algebraic();
  return PeriodWitness(unite({&aP_pos, &bQ_pos}), unite({&aP_neg, &bQ_neg}), unite({&bP_pos, &aQ_pos}),
                       unite({&bP_neg, &aQ_neg}), sig, w.bound(), info,
                       inner_node(PowerNode::Kind::Scaled, w.bound().value, info.algebraic, sig, w.power_node_ptr()));
}

PeriodWitness scale(const Rational& q, const PeriodWitness& w) { return scale(GaussianRational{q, Rational()}, w); }

PeriodWitness mul(const PeriodWitness& a, const PeriodWitness& b, const Registry& registry) {
  if (a.is_zero() || b.is_zero()) return zero_witness();
  if (a.algebraic().exact) return scale(*a.algebraic().exact, b);
  if (b.algebraic().exact) return scale(*b.algebraic().exact, a);

  check_size(a.cell_count() * b.cell_count());
  auto P = [](const Domain& x, const Domain& y) { return product(x, y); };
  // (a+ - a- + i(b+ - b-)) (c+ - c- + i(d+ - d-))
  const Domain &ap = a.re_pos(), &an = a.re_neg(), &bp = a.im_pos(), &bn = a.im_neg();
  const Domain &cp = b.re_pos(), &cn = b.re_neg(), &dp = b.im_pos(), &dn = b.im_neg();
  Domain re_pos = P(ap, cp), re_neg = P(ap, cn), im_pos = P(ap, dp), im_neg = P(ap, dn);
  re_pos.append(P(an, cn));
  re_pos.append(P(bp, dn));
  re_pos.append(P(bn, dp));
  re_neg.append(P(an, cp));
  re_neg.append(P(bp, dp));
  re_neg.append(P(bn, dn));
  im_pos.append(P(an, dn));
  im_pos.append(P(bp, cp));
  im_pos.append(P(bn, cn));
  im_neg.append(P(an, dp));
  im_neg.append(P(bp, cn));
  im_neg.append(P(bn, cp));

  Signature sig = a.signature() * b.signature();
  unsigned arith = add_saturating(a.bound().value, b.bound().value);
  if (a.algebraic().algebraic) arith = std::min(arith, b.bound().value);
  if (b.algebraic().algebraic) arith = std::min(arith, a.bound().value);
  DegreeBound bound{arith, Provenance::Arithmetic};
  if (auto reg = registry.bound_for(sig); reg && *reg < arith) bound = {*reg, Provenance::Registry};

  AlgebraicInfo info;
  info.algebraic = a.algebraic().algebraic && b.algebraic().algebraic;
  info.known_nonzero = info.algebraic && a.algebraic().known_nonzero && b.algebraic().known_nonzero;
  return PeriodWitness(std::move(re_pos), std::move(re_neg), std::move(im_pos), std::move(im_neg), sig, bound, info,
                       inner_node(PowerNode::Kind::Product, bound.value, info.algebraic, sig, a.power_node_ptr(),
                                  b.power_node_ptr()));
}

PeriodWitness add(const PeriodWitness& a, const PeriodWitness& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.algebraic().exact && b.algebraic().exact) return make_algebraic(*a.algebraic().exact + *b.algebraic().exact);

  Domain re_pos = a.re_pos(), re_neg = a.re_neg(), im_pos = a.im_pos(), im_neg = a.im_neg();
  re_pos.append(b.re_pos());
  re_neg.append(b.re_neg());
  im_pos.append(b.im_pos());
  im_neg.append(b.im_neg());

  unsigned value = std::max(a.bound().value, b.bound().value);
  // adding a non-zero algebraic number does not change the degree
  const auto& ia = a.algebraic();
  const auto& ib = b.algebraic();
  if (ia.algebraic && ia.known_nonzero && !ib.algebraic) value = b.bound().value;
  if (ib.algebraic && ib.known_nonzero && !ia.algebraic) value = a.bound().value;

  AlgebraicInfo info;
  info.algebraic = ia.algebraic && ib.algebraic;
  Signature sig = a.signature() + b.signature();
  return PeriodWitness(std::move(re_pos), std::move(re_neg), std::move(im_pos), std::move(im_neg), sig,
                       {value, Provenance::Arithmetic}, info,
                       inner_node(PowerNode::Kind::Sum, value, info.algebraic, sig, a.power_node_ptr(),
                                  b.power_node_ptr()));
}

unsigned distance_bound(const PeriodWitness& a, const PeriodWitness& b) { return add(a, negate(b)).bound().value; }

}  // namespace periods
