// Copyright 2026 The serfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "serfact/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "serfact/error.hpp"

namespace serfact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::QuotientGeneratorsNotTwoSided: return "QuotientGeneratorsNotTwoSided";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ImproperMember: return "ImproperMember";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::NotTwoSided: return "NotTwoSided";
    case ErrorCode::NotUniserial: return "NotUniserial";
    case ErrorCode::NotAnOverideal: return "NotAnOverideal";
    case ErrorCode::NotFactorizable: return "NotFactorizable";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::NoInjectionFound: return "NoInjectionFound";
    case ErrorCode::ProfileViolation: return "ProfileViolation";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::FactorBudgetExceeded: return "FactorBudgetExceeded";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::InvertibleInput: return "InvertibleInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::zmod(std::int64_t n) {
  RingSpec s;
  s.kind_ = Kind::ZMod;
  s.modulus_ = n;
  return s;
}

RingSpec RingSpec::matrix(std::size_t size, RingSpec base) {
  RingSpec s;
  s.kind_ = Kind::Matrix;
  s.size_ = size;
  s.children_.push_back(std::move(base));
  return s;
}

RingSpec RingSpec::triangular(std::size_t size, RingSpec base) {
  RingSpec s;
  s.kind_ = Kind::Triangular;
  s.size_ = size;
  s.children_.push_back(std::move(base));
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind_ = Kind::Product;
  s.children_ = std::move(factors);
  return s;
}

RingSpec RingSpec::quotient(RingSpec base, std::vector<Elem> ideal_generators) {
  RingSpec s;
  s.kind_ = Kind::Quotient;
  s.children_.push_back(std::move(base));
  s.ideal_generators_ = std::move(ideal_generators);
  return s;
}

std::string RingSpec::to_string() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::ZMod:
      out << "Z/" << modulus_;
      break;
    case Kind::Matrix:
      out << "M" << size_ << "(" << base().to_string() << ")";
      break;
    case Kind::Triangular:
      out << "T" << size_ << "(" << base().to_string() << ")";
      break;
    case Kind::Product:
      out << "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out << " x ";
        out << children_[i].to_string();
      }
      out << ")";
      break;
    case Kind::Quotient:
      out << base().to_string() << "/<";
      for (std::size_t i = 0; i < ideal_generators_.size(); ++i) {
        if (i) out << ",";
        out << ideal_generators_[i];
      }
      out << ">";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Structures

namespace {

class Structure {
 public:
  virtual ~Structure() = default;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual std::vector<Elem> decode(Elem x) const = 0;
  virtual Elem encode(std::span<const Elem> digits) const = 0;
  virtual std::string format(Elem x) const = 0;
};

void require_digits(std::span<const Elem> digits, std::size_t n) {
  if (digits.size() != n) {
    throw Error(ErrorCode::OutOfRange, "expected " + std::to_string(n) +
                                           " digits, got " +
                                           std::to_string(digits.size()));
  }
}

class ZModStructure final : public Structure {
 public:
  explicit ZModStructure(std::uint64_t n) : n_(n) {}
  Elem add(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} + b) % n_);
  }
  Elem neg(Elem a) const override {
    return static_cast<Elem>((n_ - a) % n_);
  }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} * b) % n_);
  }
  std::vector<Elem> decode(Elem x) const override { return {x}; }
  Elem encode(std::span<const Elem> digits) const override {
    require_digits(digits, 1);
    return static_cast<Elem>(digits[0] % n_);
  }
  std::string format(Elem x) const override { return std::to_string(x); }

 private:
  std::uint64_t n_;
};

class ProductStructure final : public Structure {
 public:
  explicit ProductStructure(std::vector<Ring> factors)
      : factors_(std::move(factors)) {}

  Elem add(Elem a, Elem b) const override {
    return combine(a, b, [](const Ring& r, Elem x, Elem y) { return r.add(x, y); });
  }
  Elem mul(Elem a, Elem b) const override {
    return combine(a, b, [](const Ring& r, Elem x, Elem y) { return r.mul(x, y); });
  }
  Elem neg(Elem a) const override {
    Elem out = 0;
    Elem scale = 1;
    for (const Ring& f : factors_) {
      const auto q = static_cast<Elem>(f.order());
      out += f.neg(a % q) * scale;
      a /= q;
      scale *= q;
    }
    return out;
  }
  std::vector<Elem> decode(Elem x) const override {
    std::vector<Elem> digits;
    digits.reserve(factors_.size());
    for (const Ring& f : factors_) {
      const auto q = static_cast<Elem>(f.order());
      digits.push_back(x % q);
      x /= q;
    }
    return digits;
  }
  Elem encode(std::span<const Elem> digits) const override {
    require_digits(digits, factors_.size());
    Elem out = 0;
    Elem scale = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto q = static_cast<Elem>(factors_[i].order());
      if (digits[i] >= q) throw Error(ErrorCode::OutOfRange, "product digit");
      out += digits[i] * scale;
      scale *= q;
    }
    return out;
  }
  std::string format(Elem x) const override {
    std::string s = "(";
    const auto digits = decode(x);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) s += ",";
      s += factors_[i].format(digits[i]);
    }
    return s + ")";
  }

 private:
  template <class Op>
  Elem combine(Elem a, Elem b, Op op) const {
    Elem out = 0;
    Elem scale = 1;
    for (const Ring& f : factors_) {
      const auto q = static_cast<Elem>(f.order());
      out += op(f, a % q, b % q) * scale;
      a /= q;
      b /= q;
      scale *= q;
    }
    return out;
  }

  std::vector<Ring> factors_;
};

// Full or upper triangular k x k matrices over a base ring.
class MatrixStructure final : public Structure {
 public:
  MatrixStructure(Ring base, std::size_t k, bool triangular)
      : base_(std::move(base)), k_(k), q_(static_cast<Elem>(base_.order())) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (triangular && j < i) continue;
        positions_.push_back(i * k + j);
      }
    }
  }

  Elem add(Elem a, Elem b) const override {
    Elem out = 0;
    Elem scale = 1;
    for (std::size_t p = 0; p < positions_.size(); ++p) {
      out += base_.add(a % q_, b % q_) * scale;
      a /= q_;
      b /= q_;
      scale *= q_;
    }
    return out;
  }
  Elem neg(Elem a) const override {
    Elem out = 0;
    Elem scale = 1;
    for (std::size_t p = 0; p < positions_.size(); ++p) {
      out += base_.neg(a % q_) * scale;
      a /= q_;
      scale *= q_;
    }
    return out;
  }
  Elem mul(Elem a, Elem b) const override {
    const auto x = full(a);
    const auto y = full(b);
    std::vector<Elem> z(k_ * k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t l = 0; l < k_; ++l) {
        const Elem xil = x[i * k_ + l];
        if (xil == 0) continue;
        for (std::size_t j = 0; j < k_; ++j) {
          const Elem ylj = y[l * k_ + j];
          if (ylj == 0) continue;
          z[i * k_ + j] = base_.add(z[i * k_ + j], base_.mul(xil, ylj));
        }
      }
    }
    Elem out = 0;
    Elem scale = 1;
    for (std::size_t pos : positions_) {
      out += z[pos] * scale;
      scale *= q_;
    }
    return out;
  }
  std::vector<Elem> decode(Elem x) const override {
    std::vector<Elem> digits(positions_.size());
    for (auto& d : digits) {
      d = x % q_;
      x /= q_;
    }
    return digits;
  }
  Elem encode(std::span<const Elem> digits) const override {
    require_digits(digits, positions_.size());
    Elem out = 0;
    Elem scale = 1;
    for (Elem d : digits) {
      if (d >= q_) throw Error(ErrorCode::OutOfRange, "matrix entry");
      out += d * scale;
      scale *= q_;
    }
    return out;
  }
  std::string format(Elem x) const override {
    const auto m = full(x);
    std::string s = "[";
    for (std::size_t i = 0; i < k_; ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < k_; ++j) {
        if (j) s += ",";
        s += base_.format(m[i * k_ + j]);
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::vector<Elem> full(Elem x) const {
    std::vector<Elem> m(k_ * k_, 0);
    for (std::size_t pos : positions_) {
      m[pos] = x % q_;
      x /= q_;
    }
    return m;
  }

  Ring base_;
  std::size_t k_;
  Elem q_;
  std::vector<std::size_t> positions_;
};

class QuotientStructure final : public Structure {
 public:
  QuotientStructure(Ring base, std::vector<Elem> labels, std::vector<Elem> reps)
      : base_(std::move(base)), labels_(std::move(labels)), reps_(std::move(reps)) {}

  Elem add(Elem a, Elem b) const override {
    return labels_[base_.add(reps_[a], reps_[b])];
  }
  Elem neg(Elem a) const override { return labels_[base_.neg(reps_[a])]; }
  Elem mul(Elem a, Elem b) const override {
    return labels_[base_.mul(reps_[a], reps_[b])];
  }
  std::vector<Elem> decode(Elem x) const override { return {reps_[x]}; }
  Elem encode(std::span<const Elem> digits) const override {
    require_digits(digits, 1);
    if (digits[0] >= labels_.size()) throw Error(ErrorCode::OutOfRange, "coset");
    return labels_[digits[0]];
  }
  std::string format(Elem x) const override {
    return "[" + base_.format(reps_[x]) + "]";
  }

 private:
  Ring base_;
  std::vector<Elem> labels_;
  std::vector<Elem> reps_;
};

class TableStructure final : public Structure {
 public:
  TableStructure(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), neg_(n, 0) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (add_[a * n + b] == 0) {
          neg_[a] = static_cast<Elem>(b);
          break;
        }
      }
    }
  }
  Elem add(Elem a, Elem b) const override { return add_[a * n_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * n_ + b]; }
  std::vector<Elem> decode(Elem x) const override { return {x}; }
  Elem encode(std::span<const Elem> digits) const override {
    require_digits(digits, 1);
    return digits[0];
  }
  std::string format(Elem x) const override { return std::to_string(x); }

 private:
  std::size_t n_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
};

}  // namespace

namespace detail {

struct RingNode {
  std::size_t order = 0;
  Elem one = 0;
  std::optional<RingSpec> spec;
  std::string name;
  std::size_t cap = kDefaultCap;
  std::unique_ptr<Structure> structure;
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;
  std::vector<Elem> neg_table;
  std::vector<Elem> additive_generators;
  mutable RingMemo memo;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring

std::size_t Ring::order() const { return node_->order; }
Elem Ring::one() const { return node_->one; }

Elem Ring::add(Elem a, Elem b) const {
  const auto& n = *node_;
  if (!n.add_table.empty()) return n.add_table[a * n.order + b];
  return n.structure->add(a, b);
}

Elem Ring::neg(Elem a) const {
  const auto& n = *node_;
  if (!n.neg_table.empty()) return n.neg_table[a];
  return n.structure->neg(a);
}

Elem Ring::mul(Elem a, Elem b) const {
  const auto& n = *node_;
  if (!n.mul_table.empty()) return n.mul_table[a * n.order + b];
  return n.structure->mul(a, b);
}

std::vector<Elem> Ring::decode(Elem x) const {
  if (x >= order()) throw Error(ErrorCode::OutOfRange, "element index");
  return node_->structure->decode(x);
}

Elem Ring::encode(std::span<const Elem> digits) const {
  return node_->structure->encode(digits);
}

std::string Ring::format(Elem x) const { return node_->structure->format(x); }

const std::optional<RingSpec>& Ring::spec() const { return node_->spec; }

std::string Ring::name() const {
  return node_->spec ? node_->spec->to_string() : node_->name;
}

std::size_t Ring::cap() const { return node_->cap; }

std::span<const Elem> Ring::additive_generators() const {
  return node_->additive_generators;
}

detail::RingMemo& Ring::memo() const { return node_->memo; }

Ring Ring::from_tables(std::size_t order, Elem one, std::vector<Elem> add,
                       std::vector<Elem> mul, std::string name) {
  if (order == 0 || add.size() != order * order || mul.size() != order * order) {
    throw Error(ErrorCode::MalformedSpec, "operation tables must be order x order");
  }
  auto node = std::make_shared<detail::RingNode>();
  node->order = order;
  node->one = one;
  node->name = std::move(name);
  node->cap = std::max(order, kDefaultCap);
  node->structure = std::make_unique<TableStructure>(order, std::move(add), std::move(mul));
  // Tables may violate the group axioms, so the only safe spanning set is
  // the whole carrier.
  node->additive_generators.resize(order);
  std::iota(node->additive_generators.begin(), node->additive_generators.end(), Elem{0});
  return Ring(std::move(node));
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupBuilder::SubgroupBuilder(const Ring& ring)
    : ring_(&ring), members_(ring.order()) {
  members_.insert(0);
  elements_.push_back(0);
}

SubgroupBuilder::SubgroupBuilder(const Ring& ring, const Subgroup& start)
    : ring_(&ring),
      members_(start.members),
      elements_(start.elements),
      basis_(start.basis) {}

bool SubgroupBuilder::add(Elem y) {
  if (members_.contains(y)) return false;
  basis_.push_back(y);
  const std::size_t h = elements_.size();
  Elem c = y;
  while (!members_.contains(c)) {
    for (std::size_t i = 0; i < h; ++i) {
      const Elem e = ring_->add(elements_[i], c);
      members_.insert(e);
      elements_.push_back(e);
    }
    c = ring_->add(c, y);
  }
  return true;
}

Subgroup SubgroupBuilder::finish() && {
  std::sort(elements_.begin(), elements_.end());
  return Subgroup{std::move(members_), std::move(elements_), std::move(basis_)};
}

Subgroup additive_span(const Ring& ring, std::span<const Elem> generators) {
  SubgroupBuilder b(ring);
  for (Elem g : generators) b.add(g);
  return std::move(b).finish();
}

Subgroup subgroup_from_members(const Ring& ring, const ElementSet& members) {
  SubgroupBuilder b(ring);
  members.for_each([&](Elem x) { b.add(x); });
  return std::move(b).finish();
}

std::vector<Elem> coset_labels(const Ring& base, const Subgroup& subgroup) {
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> labels(base.order(), kUnset);
  Elem next = 0;
  for (Elem x = 0; x < base.order(); ++x) {
    if (labels[x] != kUnset) continue;
    for (Elem h : subgroup.elements) labels[base.add(x, h)] = next;
    ++next;
  }
  return labels;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t limit) {
  if (a == 0 || b == 0) return 0;
  if (a > limit / b) return limit + 1;
  return std::min(a * b, limit + 1);
}

void fill_tables(detail::RingNode& node, std::size_t threshold) {
  const std::size_t n = node.order;
  if (n > threshold) return;
  std::vector<Elem> add(n * n), mul(n * n), neg(n);
  for (Elem a = 0; a < n; ++a) {
    neg[a] = node.structure->neg(a);
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = node.structure->add(a, b);
      mul[a * n + b] = node.structure->mul(a, b);
    }
  }
  node.add_table = std::move(add);
  node.mul_table = std::move(mul);
  node.neg_table = std::move(neg);
}

std::shared_ptr<detail::RingNode> make_node(std::size_t order, Elem one,
                                            std::optional<RingSpec> spec,
                                            std::unique_ptr<Structure> structure,
                                            const BuildOptions& options) {
  auto node = std::make_shared<detail::RingNode>();
  node->order = order;
  node->one = one;
  node->spec = std::move(spec);
  node->cap = options.cap;
  node->structure = std::move(structure);
  fill_tables(*node, options.table_threshold);
  return node;
}

void require_order(std::size_t order, const BuildOptions& options, const RingSpec& spec) {
  if (order > options.cap) {
    throw Error(ErrorCode::CapExceeded, spec.to_string() + " exceeds the element cap of " +
                                            std::to_string(options.cap));
  }
}

}  // namespace

Ring build_ring(const RingSpec& spec, const BuildOptions& options) {
  using Kind = RingSpec::Kind;
  std::shared_ptr<detail::RingNode> node;
  switch (spec.kind()) {
    case Kind::ZMod: {
      if (spec.modulus() < 2) {
        throw Error(ErrorCode::MalformedSpec, "zmod modulus must be at least 2");
      }
      if (static_cast<std::uint64_t>(spec.modulus()) > options.cap) {
        throw Error(ErrorCode::CapExceeded, spec.to_string() + " exceeds the element cap of " +
                                                std::to_string(options.cap));
      }
      const auto n = static_cast<std::size_t>(spec.modulus());
      node = make_node(n, 1, spec, std::make_unique<ZModStructure>(n), options);
      break;
    }
    case Kind::Product: {
      if (spec.factors().empty()) {
        throw Error(ErrorCode::MalformedSpec, "product needs at least one factor");
      }
      std::vector<Ring> factors;
      std::size_t order = 1;
      for (const auto& f : spec.factors()) {
        factors.push_back(build_ring(f, options));
        order = saturating_mul(order, factors.back().order(), options.cap);
        require_order(order, options, spec);
      }
      std::vector<Elem> one_digits;
      for (const auto& f : factors) one_digits.push_back(f.one());
      auto structure = std::make_unique<ProductStructure>(factors);
      const Elem one = structure->encode(one_digits);
      node = make_node(order, one, spec, std::move(structure), options);
      break;
    }
    case Kind::Matrix:
    case Kind::Triangular: {
      const std::size_t k = spec.size();
      if (k < 1) throw Error(ErrorCode::MalformedSpec, "matrix size must be at least 1");
      const bool triangular = spec.kind() == Kind::Triangular;
      const std::size_t entries = triangular ? k * (k + 1) / 2 : k * k;
      Ring base = build_ring(spec.base(), options);
      std::size_t order = 1;
      for (std::size_t i = 0; i < entries; ++i) {
        order = saturating_mul(order, base.order(), options.cap);
        require_order(order, options, spec);
      }
      auto structure = std::make_unique<MatrixStructure>(base, k, triangular);
      std::vector<Elem> id(entries, 0);
      {
        std::size_t slot = 0;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            if (triangular && j < i) continue;
            if (i == j) id[slot] = base.one();
            ++slot;
          }
        }
      }
      const Elem one = structure->encode(id);
      node = make_node(order, one, spec, std::move(structure), options);
      break;
    }
    case Kind::Quotient: {
      Ring base = build_ring(spec.base(), options);
      for (Elem g : spec.ideal_generators()) {
        if (g >= base.order()) {
          throw Error(ErrorCode::MalformedSpec, "quotient generator " + std::to_string(g) +
                                                    " outside the base carrier");
        }
      }
      // Right ideal generated by the listed elements: span of g*t over an
      // additive generating set t of the base.
      SubgroupBuilder ideal(base);
      for (Elem g : spec.ideal_generators()) {
        for (Elem t : base.additive_generators()) ideal.add(base.mul(g, t));
      }
      Subgroup closed = std::move(ideal).finish();
      for (Elem r : base.additive_generators()) {
        for (Elem a : closed.basis) {
          if (!closed.members.contains(base.mul(r, a))) {
            throw Error(ErrorCode::QuotientGeneratorsNotTwoSided,
                        "left multiple " + base.format(r) + " * " + base.format(a) +
                            " leaves the generated right ideal");
          }
        }
      }
      Ring q = quotient_ring(base, closed.members, options);
      auto mutable_node = std::const_pointer_cast<detail::RingNode>(q.node_);
      mutable_node->spec = spec;
      node = std::move(mutable_node);
      break;
    }
  }

  // Greedy additive generating set in index order.
  if (node->additive_generators.empty()) {
    Ring tmp(node);
    SubgroupBuilder b(tmp);
    for (Elem x = 0; x < node->order && b.size() < node->order; ++x) {
      if (b.add(x)) node->additive_generators.push_back(x);
    }
  }
  return Ring(std::move(node));
}

Ring quotient_ring(const Ring& base, const ElementSet& ideal, const BuildOptions& options) {
  const Subgroup sub = subgroup_from_members(base, ideal);
  if (sub.elements.size() == base.order()) {
    throw Error(ErrorCode::MalformedSpec, "quotient by the whole ring has 1 = 0");
  }
  std::vector<Elem> labels = coset_labels(base, sub);
  std::vector<Elem> reps;
  for (Elem x = 0; x < base.order(); ++x) {
    if (labels[x] == reps.size()) reps.push_back(x);
  }
  const std::size_t order = reps.size();
  const Elem one = labels[base.one()];
  auto structure = std::make_unique<QuotientStructure>(base, std::move(labels), std::move(reps));
  std::vector<Elem> gens(sub.basis.begin(), sub.basis.end());
  std::optional<RingSpec> spec;
  if (base.spec()) spec = RingSpec::quotient(*base.spec(), std::move(gens));
  auto node = make_node(order, one, std::move(spec), std::move(structure), options);
  if (!node->spec) node->name = base.name() + "/I";
  if (node->additive_generators.empty()) {
    Ring tmp(node);
    SubgroupBuilder b(tmp);
    for (Elem x = 0; x < node->order && b.size() < node->order; ++x) {
      if (b.add(x)) node->additive_generators.push_back(x);
    }
  }
  return Ring(std::move(node));
}

void require_within_cap(const Ring& ring) {
  if (ring.order() > ring.cap()) {
    throw Error(ErrorCode::CapExceeded, ring.name() + " has " + std::to_string(ring.order()) +
                                            " elements, above the cap of " +
                                            std::to_string(ring.cap()));
  }
}

// ---------------------------------------------------------------------------
// Predicates and reports

bool is_commutative(const Ring& ring) {
  const auto gens = ring.additive_generators();
  for (Elem a : gens)
    for (Elem b : gens)
      if (ring.mul(a, b) != ring.mul(b, a)) return false;
  return true;
}

bool is_field(const Ring& ring) {
  if (!is_commutative(ring)) return false;
  for (Elem a = 1; a < ring.order(); ++a) {
    bool unit = false;
    for (Elem b = 1; b < ring.order() && !unit; ++b) unit = ring.mul(a, b) == ring.one();
    if (!unit) return false;
  }
  return true;
}

namespace {

void collect_triangular_notes(const RingSpec& spec, const BuildOptions& options,
                              std::vector<std::string>& notes) {
  if (spec.kind() == RingSpec::Kind::Triangular) {
    if (!is_field(build_ring(spec.base(), options))) {
      notes.push_back("upper triangular matrices over non-field base " +
                      spec.base().to_string());
    }
  }
  for (const auto& child : spec.factors()) collect_triangular_notes(child, options, notes);
}

}  // namespace

AxiomReport ring_axioms_report(const Ring& ring) {
  AxiomReport report;
  report.order = ring.order();
  const Elem n = static_cast<Elem>(ring.order());
  auto fail = [&](std::string axiom, std::vector<Elem> witness) {
    report.ok = false;
    report.first_violation = AxiomViolation{std::move(axiom), std::move(witness)};
  };

  if (ring.spec()) {
    BuildOptions options;
    options.cap = ring.cap();
    collect_triangular_notes(*ring.spec(), options, report.notes);
  }

  for (Elem a = 0; a < n && report.ok; ++a)
    for (Elem b = 0; b < n && report.ok; ++b)
      if (ring.add(a, b) >= n || ring.mul(a, b) >= n) fail("closure", {a, b});
  if (!report.ok) return report;

  for (Elem a = 0; a < n && report.ok; ++a)
    if (ring.add(0, a) != a || ring.add(a, 0) != a) fail("additive identity", {a});
  for (Elem a = 0; a < n && report.ok; ++a)
    if (ring.add(a, ring.neg(a)) != 0) fail("additive inverse", {a});
  for (Elem a = 0; a < n && report.ok; ++a)
    for (Elem b = 0; b < n && report.ok; ++b)
      if (ring.add(a, b) != ring.add(b, a)) fail("additive commutativity", {a, b});
  for (Elem a = 0; a < n && report.ok; ++a)
    for (Elem b = 0; b < n && report.ok; ++b) {
      const Elem ab = ring.add(a, b);
      for (Elem c = 0; c < n && report.ok; ++c)
        if (ring.add(ab, c) != ring.add(a, ring.add(b, c)))
          fail("additive associativity", {a, b, c});
    }
  if (!report.ok) return report;

  if (ring.one() == 0) {
    fail("one distinct from zero", {ring.one()});
    return report;
  }
  for (Elem a = 0; a < n && report.ok; ++a)
    if (ring.mul(ring.one(), a) != a || ring.mul(a, ring.one()) != a)
      fail("multiplicative identity", {a});
  for (Elem a = 0; a < n && report.ok; ++a)
    for (Elem b = 0; b < n && report.ok; ++b) {
      const Elem ab = ring.mul(a, b);
      for (Elem c = 0; c < n && report.ok; ++c)
        if (ring.mul(ab, c) != ring.mul(a, ring.mul(b, c))) fail("associativity", {a, b, c});
    }
  for (Elem a = 0; a < n && report.ok; ++a)
    for (Elem b = 0; b < n && report.ok; ++b)
      for (Elem c = 0; c < n && report.ok; ++c)
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
          fail("left distributivity", {a, b, c});
  for (Elem a = 0; a < n && report.ok; ++a)
    for (Elem b = 0; b < n && report.ok; ++b)
      for (Elem c = 0; c < n && report.ok; ++c)
        if (ring.mul(ring.add(b, c), a) != ring.add(ring.mul(b, a), ring.mul(c, a)))
          fail("right distributivity", {a, b, c});
  return report;
}

CentralIdempotentSet central_idempotents(const Ring& ring) {
  require_within_cap(ring);
  CentralIdempotentSet out;
  const auto gens = ring.additive_generators();
  for (Elem e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) != e) continue;
    bool central = true;
    for (Elem t : gens) {
      if (ring.mul(e, t) != ring.mul(t, e)) {
        central = false;
        break;
      }
    }
    if (central) out.all.push_back(e);
  }
  // Atoms of the Boolean algebra of central idempotents, ordered by ef = f.
  for (Elem e : out.all) {
    if (e == 0) continue;
    bool atom = true;
    for (Elem f : out.all) {
      if (f != 0 && f != e && ring.mul(e, f) == f) {
        atom = false;
        break;
      }
    }
    if (atom) out.primitive.push_back(e);
  }
  return out;
}

}  // namespace serfact
