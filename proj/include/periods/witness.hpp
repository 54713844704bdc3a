#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "periods/domain.hpp"
#include "periods/signature.hpp"

namespace periods {

enum class Provenance { Dimension, Registry, Arithmetic };

const char* provenance_name(Provenance p) noexcept;

/// Upper bound on the degree of a period, with where it came from.
struct DegreeBound {
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();

  unsigned value = 0;
  Provenance provenance = Provenance::Dimension;

  bool infinite() const { return value == kInfinite; }
  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

/// What is known about a witness being an algebraic number.
struct AlgebraicInfo {
  bool algebraic = false;
  bool known_nonzero = false;
  /// Present when the value is a known Gaussian rational.
  std::optional<GaussianRational> exact;

  friend bool operator==(const AlgebraicInfo&, const AlgebraicInfo&) = default;
};

/// Construction history as seen by the power-degree bound: the bound on
/// deg(w^m) can use the shape of w (product, sum, power) as well as the
/// registry.
struct PowerNode {
  enum class Kind { Leaf, Scaled, Product, Sum, Power };

  Kind kind = Kind::Leaf;
  unsigned ledger = 0;
  bool zero = false;
  bool algebraic = false;
  std::optional<Monomial> monomial;
  std::shared_ptr<const PowerNode> lhs;
  std::shared_ptr<const PowerNode> rhs;
  unsigned exponent = 1;
};

class PeriodWitness;

/// Sharp low-dimensional constructions that beat the arithmetic bound.
class Registry {
 public:
  struct Entry {
    Monomial monomial;
    unsigned bound = 0;
    /// Builds a witness whose value is exactly the monomial.
    std::function<PeriodWitness()> builder;
  };

  void add(const Monomial& m, unsigned bound, std::function<PeriodWitness()> builder = {});

  const Entry* find(const Monomial& m) const;
  /// Registry bound for c*M with c != 0.
  std::optional<unsigned> bound_for(const Signature& s) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

/// Contains {pi*log(2) -> 3, pi^2 -> 3}, each with its explicit 3-dim domain.
const Registry& default_registry();

/// Degree bound of a single atom (pi, log(q), sqrt(n)).
unsigned atom_bound(const std::string& atom);

/// Signed complex combination of domains:
/// value = vol(re_pos) - vol(re_neg) + i (vol(im_pos) - vol(im_neg)).
class PeriodWitness {
 public:
  static constexpr std::size_t kMaxCells = 200000;

  PeriodWitness() = default;
  PeriodWitness(Domain re_pos, Domain re_neg, Domain im_pos, Domain im_neg, Signature signature,
                DegreeBound bound, AlgebraicInfo algebraic, std::shared_ptr<const PowerNode> power);

  const Domain& re_pos() const { return re_pos_; }
  const Domain& re_neg() const { return re_neg_; }
  const Domain& im_pos() const { return im_pos_; }
  const Domain& im_neg() const { return im_neg_; }
  const Signature& signature() const { return signature_; }
  const DegreeBound& bound() const { return bound_; }
  const AlgebraicInfo& algebraic() const { return algebraic_; }
  const PowerNode& power_node() const;
  std::shared_ptr<const PowerNode> power_node_ptr() const { return power_; }

  bool is_zero() const;
  std::size_t cell_count() const;
  std::size_t max_dim() const;

  /// Same witness with a different ledger entry.
  PeriodWitness with_bound(DegreeBound bound) const;

  friend bool operator==(const PeriodWitness& a, const PeriodWitness& b);

 private:
  Domain re_pos_, re_neg_, im_pos_, im_neg_;
  Signature signature_;
  DegreeBound bound_;
  AlgebraicInfo algebraic_;
  std::shared_ptr<const PowerNode> power_;
};

PeriodWitness zero_witness();
PeriodWitness make_algebraic(const Rational& q);
PeriodWitness make_algebraic(const GaussianRational& q);
PeriodWitness make_sqrt(unsigned long n);

/// pi, log (params {q}, q > 1), pi_log2, pi_squared, zeta_even (params {2k}).
PeriodWitness builtin(const std::string& name, const std::vector<Rational>& params = {});

struct GalleryEntry {
  std::string name;
  std::string expression;
  std::string description;
};
std::vector<GalleryEntry> gallery();

PeriodWitness mul(const PeriodWitness& a, const PeriodWitness& b, const Registry& registry = default_registry());
PeriodWitness add(const PeriodWitness& a, const PeriodWitness& b);
PeriodWitness negate(const PeriodWitness& w);
PeriodWitness scale(const Rational& q, const PeriodWitness& w);
PeriodWitness scale(const GaussianRational& q, const PeriodWitness& w);
/// w^m built along the best factorization of the power bound.
PeriodWitness power(const PeriodWitness& w, unsigned m, const Registry& registry = default_registry());

/// Bounds b_0..b_M on deg(w^m) (b_0 = 0, b_1 = ledger).
std::vector<unsigned> power_bounds(const PeriodWitness& w, unsigned max_power,
                                   const Registry& registry = default_registry());
unsigned power_bound(const PeriodWitness& w, unsigned m, const Registry& registry = default_registry());

/// Bound on deg(M^k) from atoms and registry pieces; nullopt if the search
/// space is too large.
std::optional<unsigned> monomial_bound(const Monomial& m, const Registry& registry = default_registry());

/// Ledger bound of w1 - w2.
unsigned distance_bound(const PeriodWitness& a, const PeriodWitness& b);

struct TranscendenceReport {
  unsigned bound1 = 0;
  unsigned bound2 = 0;
  std::optional<std::pair<unsigned, unsigned>> asserted;
  bool conditional = true;
  std::string summary;
  std::vector<std::string> conclusions;
  std::string e_plus_pi_note;
};

TranscendenceReport transcendence_report(const PeriodWitness& a, const PeriodWitness& b,
                                         std::optional<std::pair<unsigned, unsigned>> asserted_exact = std::nullopt);

}  // namespace periods
