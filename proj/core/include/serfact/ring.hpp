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

/**
 * @file ring.hpp
 * @brief Finite unital rings with a canonical element index.
 *
 * Every ring is built from a RingSpec constructor tree and numbers its
 * elements 0..order-1:
 *
 *  - ZMod(n): the index is the residue.
 *  - Product(R_1, ..., R_k): mixed radix, first factor least significant.
 *  - MatrixRing(k, S) / UpperTriangular(k, S): base-|S| digits over the
 *    stored entries in row-major order, first entry least significant.
 *  - Quotient(S, I): rank of the minimal-index representative of the coset.
 *
 * Rings are immutable and cheap to copy (shared handle). Arithmetic is
 * structural; small carriers additionally get memoized operation tables.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "serfact/element_set.hpp"

namespace serfact {

inline constexpr std::size_t kDefaultCap = 4096;
inline constexpr std::size_t kDefaultTableThreshold = 512;

struct BuildOptions {
  std::size_t cap = kDefaultCap;
  // Operation tables are memoized when order <= table_threshold.
  std::size_t table_threshold = kDefaultTableThreshold;
};

class RingSpec {
 public:
  enum class Kind { ZMod, Matrix, Triangular, Product, Quotient };

  static RingSpec zmod(std::int64_t n);
  static RingSpec matrix(std::size_t size, RingSpec base);
  static RingSpec triangular(std::size_t size, RingSpec base);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec quotient(RingSpec base, std::vector<Elem> ideal_generators);

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return size_; }
  const RingSpec& base() const { return children_.front(); }
  const std::vector<RingSpec>& factors() const { return children_; }
  const std::vector<Elem>& ideal_generators() const { return ideal_generators_; }

  // Short human-readable form, e.g. "T2(Z/2)" or "Z/2 x Z/4".
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec() = default;

  Kind kind_ = Kind::ZMod;
  std::int64_t modulus_ = 0;
  std::size_t size_ = 0;
  std::vector<RingSpec> children_;
  std::vector<Elem> ideal_generators_;
};

class Ring;

// An additive subgroup of a ring, kept in three views: membership bitset,
// sorted element list, and a small additive generating set.
struct Subgroup {
  ElementSet members;
  std::vector<Elem> elements;
  std::vector<Elem> basis;
};

// Incrementally grows an additive subgroup. Each insertion of a new element y
// appends the cosets H + y, H + 2y, ... until a multiple of y falls back in H.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Ring& ring);
  SubgroupBuilder(const Ring& ring, const Subgroup& start);

  // Returns true if the span grew.
  bool add(Elem y);
  bool contains(Elem y) const { return members_.contains(y); }
  std::size_t size() const { return elements_.size(); }
  Subgroup finish() &&;

 private:
  const Ring* ring_;
  ElementSet members_;
  std::vector<Elem> elements_;
  std::vector<Elem> basis_;
};

Subgroup additive_span(const Ring& ring, std::span<const Elem> generators);
// Reconstructs the basis and element list of a set known to be a subgroup.
Subgroup subgroup_from_members(const Ring& ring, const ElementSet& members);

namespace detail {
struct RingNode;
struct RingMemo {
  std::once_flag lattice_once;
  std::shared_ptr<const void> lattice;
};
}  // namespace detail

class Ring {
 public:
  std::size_t order() const;
  Elem zero() const { return 0; }
  Elem one() const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;

  // Structural digits: [residue] for ZMod, component indices for Product,
  // stored base entries for matrix rings, [minimal base representative] for
  // quotients.
  std::vector<Elem> decode(Elem x) const;
  Elem encode(std::span<const Elem> digits) const;
  std::string format(Elem x) const;

  const std::optional<RingSpec>& spec() const;
  std::string name() const;
  std::size_t cap() const;

  // Small additive generating set of the whole carrier.
  std::span<const Elem> additive_generators() const;

  bool same_as(const Ring& other) const { return node_ == other.node_; }

  // Builds a ring from explicit operation tables (row-major, order x order).
  // No axioms are checked: used for fixtures and for ring_axioms_report.
  static Ring from_tables(std::size_t order, Elem one, std::vector<Elem> add,
                          std::vector<Elem> mul, std::string name = "table");

  detail::RingMemo& memo() const;

 private:
  friend Ring build_ring(const RingSpec&, const BuildOptions&);
  friend Ring quotient_ring(const Ring&, const ElementSet&,
                            const BuildOptions&);
  explicit Ring(std::shared_ptr<const detail::RingNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::RingNode> node_;
};

// Throws Error{CapExceeded, QuotientGeneratorsNotTwoSided, MalformedSpec}.
Ring build_ring(const RingSpec& spec, const BuildOptions& options = {});

// R/I for a two-sided ideal I given by its member set. The caller is
// responsible for two-sidedness; improper I is rejected (MalformedSpec).
Ring quotient_ring(const Ring& base, const ElementSet& ideal,
                   const BuildOptions& options = {kDefaultCap, 0});

// Labels every base element with the index of its coset in the quotient;
// the same numbering quotient_ring uses.
std::vector<Elem> coset_labels(const Ring& base, const Subgroup& subgroup);

bool is_field(const Ring& ring);
bool is_commutative(const Ring& ring);

struct AxiomViolation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct AxiomReport {
  std::size_t order = 0;
  bool ok = true;
  std::optional<AxiomViolation> first_violation;
  std::vector<std::string> notes;
};

// Exhaustive check of the ring axioms; reports the first violation found.
AxiomReport ring_axioms_report(const Ring& ring);

struct CentralIdempotentSet {
  std::vector<Elem> all;
  // Centrally primitive idempotents, sorted by element index.
  std::vector<Elem> primitive;
};

CentralIdempotentSet central_idempotents(const Ring& ring);

// Raises CapExceeded when an exhaustive scan over `ring` is not allowed.
void require_within_cap(const Ring& ring);

}  // namespace serfact
