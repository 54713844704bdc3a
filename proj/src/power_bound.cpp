#include <algorithm>
#include <map>

#include "periods/witness.hpp"

namespace periods {

namespace {

constexpr std::size_t kMaxMonomialStates = 1u << 20;
constexpr unsigned kMaxPowerTable = 4096;
constexpr unsigned kUnset = DegreeBound::kInfinite;

unsigned sat_add(unsigned a, unsigned b) {
  if (a == kUnset || b == kUnset) return kUnset;
  return a + b;
}

/// DP over exponent vectors E <= top: cheapest way to write x^E as a product
/// of atoms and registry monomials.
class MonomialTable {
 public:
  MonomialTable(const Monomial& top, const Registry& registry) {
    for (const auto& [atom, e] : top) {
      atoms_.push_back(atom);
      top_.push_back(e);
    }
    std::size_t states = 1;
    strides_.resize(top_.size());
    for (std::size_t i = 0; i < top_.size(); ++i) {
      strides_[i] = states;
      states *= top_[i] + 1;
      if (states > kMaxMonomialStates) return;
    }
    struct Piece {
      std::vector<unsigned> e;
      std::size_t offset;
      unsigned cost;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      std::vector<unsigned> e(atoms_.size(), 0);
      e[i] = 1;
      pieces.push_back({e, strides_[i], atom_bound(atoms_[i])});
    }
    for (const auto& [key, entry] : registry.entries()) {
      std::vector<unsigned> e(atoms_.size(), 0);
      bool fits = !entry.monomial.empty();
      std::size_t offset = 0;
      for (const auto& [atom, p] : entry.monomial) {
        auto it = std::find(atoms_.begin(), atoms_.end(), atom);
        if (it == atoms_.end()) {
          fits = false;
          break;
        }
        std::size_t i = static_cast<std::size_t>(it - atoms_.begin());
        e[i] = p;
        offset += p * strides_[i];
      }
      if (fits) pieces.push_back({e, offset, entry.bound});
    }

    cost_.assign(states, kUnset);
    cost_[0] = 0;
    std::vector<unsigned> digits(top_.size(), 0);
    for (std::size_t idx = 1; idx < states; ++idx) {
      for (std::size_t i = 0; i < digits.size(); ++i) {  // mixed-radix increment
        if (++digits[i] <= top_[i]) break;
        digits[i] = 0;
      }
      unsigned best = kUnset;
      for (const auto& piece : pieces) {
        bool fits = true;
        for (std::size_t i = 0; i < digits.size() && fits; ++i) fits = piece.e[i] <= digits[i];
        if (fits) best = std::min(best, sat_add(cost_[idx - piece.offset], piece.cost));
      }
      cost_[idx] = best;
    }
    valid_ = true;
  }

  bool valid() const { return valid_; }

  /// Bound for (base)^k where base's exponents are top/scale.
  unsigned at(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      auto it = m.find(atoms_[i]);
      idx += (it == m.end() ? 0 : it->second) * strides_[i];
    }
    return cost_.at(idx);
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<unsigned> top_;
  std::vector<std::size_t> strides_;
  std::vector<unsigned> cost_;
  bool valid_ = false;
};

Monomial raise(const Monomial& m, unsigned k) {
  Monomial out = m;
  for (auto& [atom, p] : out) p *= k;
  return out;
}

std::vector<unsigned> table_for(const PowerNode& node, unsigned max_power, const Registry& registry) {
  std::vector<unsigned> b(max_power + 1, 0);
  if (node.zero || max_power == 0) return b;
  b[1] = node.ledger;
  if (node.algebraic) {
    // powers of an algebraic number stay algebraic
    std::fill(b.begin() + 1, b.end(), std::min(node.ledger, 1u));
    return b;
  }

  std::vector<unsigned> structural(max_power + 1, kUnset);
  using Kind = PowerNode::Kind;
  switch (node.kind) {
    case Kind::Leaf:
      break;
    case Kind::Scaled:
      structural = table_for(*node.lhs, max_power, registry);
      break;
    case Kind::Product: {
      auto lhs = table_for(*node.lhs, max_power, registry);
      auto rhs = table_for(*node.rhs, max_power, registry);
      for (unsigned k = 1; k <= max_power; ++k) {
        if (node.lhs->algebraic) {
          structural[k] = rhs[k];
        } else if (node.rhs->algebraic) {
          structural[k] = lhs[k];
        } else {
          structural[k] = sat_add(lhs[k], rhs[k]);
        }
      }
      break;
    }
    case Kind::Sum: {
      // (p + q)^k is a rational combination of p^j q^(k-j)
      auto lhs = table_for(*node.lhs, max_power, registry);
      auto rhs = table_for(*node.rhs, max_power, registry);
      for (unsigned k = 1; k <= max_power; ++k) {
        unsigned worst = 0;
        for (unsigned j = 0; j <= k; ++j) worst = std::max(worst, sat_add(lhs[j], rhs[k - j]));
        structural[k] = worst;
      }
      break;
    }
    case Kind::Power: {
      unsigned need = max_power * node.exponent;
      if (need <= kMaxPowerTable) {
        auto base = table_for(*node.lhs, need, registry);
        for (unsigned k = 1; k <= max_power; ++k) structural[k] = base[k * node.exponent];
      }
      break;
    }
  }

  std::optional<MonomialTable> mono;
  if (node.monomial && !node.monomial->empty() && max_power >= 2) {
    mono.emplace(raise(*node.monomial, max_power), registry);
    if (!mono->valid()) mono.reset();
  }

  for (unsigned k = 2; k <= max_power; ++k) {
    unsigned best = structural[k];
    if (mono) best = std::min(best, mono->at(raise(*node.monomial, k)));
    for (unsigned i = 1; i <= k / 2; ++i) best = std::min(best, sat_add(b[i], b[k - i]));
    b[k] = best;
  }
  return b;
}

}  // namespace

std::optional<unsigned> monomial_bound(const Monomial& m, const Registry& registry) {
  if (m.empty()) return 1u;
  MonomialTable table(m, registry);
  if (!table.valid()) return std::nullopt;
  return table.at(m);
}

std::vector<unsigned> power_bounds(const PeriodWitness& w, unsigned max_power, const Registry& registry) {
  return table_for(w.power_node(), max_power, registry);
}

unsigned power_bound(const PeriodWitness& w, unsigned m, const Registry& registry) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "power_bound needs m >= 1");
  return power_bounds(w, m, registry)[m];
}

PeriodWitness power(const PeriodWitness& w, unsigned m, const Registry& registry) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 1");
  if (m == 1) return w;
  if (w.is_zero()) return w;
  const std::vector<unsigned> table = power_bounds(w, m, registry);
  auto mono = w.signature().as_monomial();

  std::map<unsigned, PeriodWitness> memo;
  std::function<PeriodWitness(unsigned)> build = [&](unsigned k) -> PeriodWitness {
    if (k == 1) return w;
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    PeriodWitness out;
    bool done = false;
    if (mono && !mono->second.empty()) {
      const Registry::Entry* entry = registry.find(raise(mono->second, k));
      if (entry && entry->builder && entry->bound <= table[k]) {
        GaussianRational c{Rational(1), Rational()};
        for (unsigned i = 0; i < k; ++i) c = c * mono->first;
        out = scale(c, entry->builder());
        done = true;
      }
    }
    if (!done) {
      unsigned split = 1;
      for (unsigned i = 1; i <= k / 2; ++i) {
        if (table[i] + table[k - i] < table[split] + table[k - split]) split = i;
      }
      out = mul(build(split), build(k - split), registry);
    }
    memo.emplace(k, out);
    return out;
  };

  PeriodWitness built = build(m);
  DegreeBound bound = built.bound();
  if (table[m] < bound.value) bound = {table[m], Provenance::Registry};
  auto node = std::make_shared<PowerNode>();
  node->kind = PowerNode::Kind::Power;
  node->ledger = bound.value;
  node->algebraic = built.algebraic().algebraic;
  if (auto s = built.signature().as_monomial()) node->monomial = s->second;
  node->lhs = w.power_node_ptr();
  node->exponent = m;
  return PeriodWitness(built.re_pos(), built.re_neg(), built.im_pos(), built.im_neg(), built.signature(), bound,
                       built.algebraic(), std::move(node));
}

TranscendenceReport transcendence_report(const PeriodWitness& a, const PeriodWitness& b,
                                         std::optional<std::pair<unsigned, unsigned>> asserted_exact) {
  TranscendenceReport r;
  r.bound1 = a.bound().value;
  r.bound2 = b.bound().value;
  r.asserted = asserted_exact;
  r.e_plus_pi_note =
      "deg(pi) = 2, so an exact proof that deg(e) >= 3 would make e + pi transcendental";
  if (asserted_exact) {
    r.conditional = false;
    auto [d1, d2] = *asserted_exact;
    if (d1 == d2) {
      r.summary = "no conclusion: the asserted degrees are equal";
      return r;
    }
    if (d1 > 1 && d2 > 1) {
      r.conclusions = {"sum transcendental", "quotient transcendental",
                       "linearly independent over the algebraic numbers"};
      r.summary = "sum and quotient transcendental; linearly independent";
    } else {
      r.conclusions = {"linearly independent over the algebraic numbers"};
      r.summary = "linearly independent";
    }
    return r;
  }
  r.conditional = true;
  if (r.bound1 != r.bound2 && r.bound1 > 1 && r.bound2 > 1) {
    r.summary = "conditional: if the exact degrees equal the ledger bounds (" + std::to_string(r.bound1) + ", " +
                std::to_string(r.bound2) +
                "), the sum and quotient are transcendental and the two are linearly independent; the bounds alone "
                "prove nothing";
  } else {
    r.summary = "conditional: the ledger bounds (" + std::to_string(r.bound1) + ", " + std::to_string(r.bound2) +
                ") are upper bounds only and would give no conclusion even if exact";
  }
  return r;
}

}  // namespace periods
