#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace powq {

/// Element index inside a finite group or power quandle carrier.
using Index = std::uint32_t;

/// Finite group given by its elements 0..k-1 with the identity at index 0.
///
/// Two storage modes share one interface. Groups read from files or built by
/// the catalog carry a full k x k multiplication table whose group axioms were
/// checked exhaustively. Groups produced by coset enumeration carry the right
/// regular action of a generating set together with a spanning tree of words;
/// a product a*b is then computed by tracing the word of b from a. Small
/// enumerated groups get their table materialized as well.
///
/// Instances are immutable and cheap to copy (shared storage).
class FiniteGroup {
 public:
  /// Groups whose order does not exceed this bound always carry a table.
  static constexpr std::size_t kTableLimit = 1024;

  /// Trivial group.
  FiniteGroup();

  /// Validates `mul` (row-major, k*k entries) and throws GroupError naming a
  /// witness on failure. Associativity is checked on all k^3 triples.
  static FiniteGroup from_table(std::size_t order, std::vector<Index> mul,
                                std::vector<std::string> names = {});

  /// Same storage as from_table without the axiom checks. Only for tables that
  /// are groups by construction (products, quotients, subgroups).
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Index> mul,
                                        std::vector<std::string> names = {});

  /// Builds a group from the right regular action of `num_gens` generators.
  /// `right[g * order + x]` is x*s_g and `right_inv[g * order + x]` is
  /// x*s_g^-1. The action must be regular with element 0 the identity; this is
  /// what a completed coset table over the trivial subgroup provides.
  static FiniteGroup from_right_action(std::size_t order, std::size_t num_gens,
                                       std::vector<Index> right, std::vector<Index> right_inv);

  std::size_t order() const noexcept;
  bool has_table() const noexcept;
  /// Row-major multiplication table; empty when has_table() is false.
  std::span<const Index> table() const noexcept;
  const std::vector<std::string>& names() const noexcept;

  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  /// a^n for any integer n.
  Index pow(Index a, std::int64_t n) const;
  Index conj(Index a, Index b) const { return mul(mul(a, b), inv(a)); }
  Index commutator(Index a, Index b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  std::uint64_t element_order(Index a) const;

  /// A generating sequence: the greedy minimal generating sequence for table
  /// groups, the enumeration generators (deduplicated, identity dropped) otherwise.
  std::span<const Index> generators() const noexcept;

 private:
  struct Storage;
  explicit FiniteGroup(std::shared_ptr<const Storage> s);
  std::shared_ptr<const Storage> s_;
};

/// Sorted member set of a subgroup of `parent`.
struct Subgroup {
  FiniteGroup parent;
  std::vector<Index> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Index a) const;
};

/// Homomorphism given by its values on every source element.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Index> image;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_m, d_i | d_{i+1}, d_i >= 2.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  std::size_t free_rank = 0;

  bool is_finite() const noexcept { return free_rank == 0; }
  /// Product of the torsion factors.
  std::uint64_t torsion_order() const noexcept;
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Exponent -> number of solutions of a^n = e, for each divisor n of the exponent.
using PowerFingerprint = std::map<std::uint64_t, std::uint64_t>;

FiniteGroup validate_group(std::size_t order, std::vector<Index> mul,
                           std::vector<std::string> names = {});

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> gens);
Subgroup whole_group(const FiniteGroup& g);
bool is_normal(const Subgroup& n);
/// Greedy: repeatedly append the smallest element outside the generated subgroup.
std::vector<Index> min_generating_sequence(const FiniteGroup& g);
/// The subgroup as a group in its own right, plus the embedding into the parent.
std::pair<FiniteGroup, GroupHom> subgroup_as_group(const Subgroup& h);
/// Elements present in both subgroups of the same parent.
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by the union.
Subgroup join(const Subgroup& a, const Subgroup& b);

Subgroup center(const FiniteGroup& g);
/// Classes ordered by smallest member; each class sorted; {0} comes first.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);
/// Coset group G/N and the projection. Throws NotNormal.
std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const Subgroup& n);
Subgroup commutator_subgroup(const FiniteGroup& g);
std::pair<AbelianInvariants, GroupHom> abelianization(const FiniteGroup& g);
/// Invariants of G/N for a normal N containing [G,G]; works without
/// materializing the quotient table.
AbelianInvariants abelian_quotient_invariants(const FiniteGroup& g, const Subgroup& n);
/// Invariants of G/[G,G] without the projection.
AbelianInvariants abelian_invariants(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
std::uint64_t exponent(const FiniteGroup& g);
PowerFingerprint power_fingerprint(const FiniteGroup& g);
/// Sorted multiset of element orders.
std::vector<std::uint64_t> order_profile(const FiniteGroup& g);
AbelianInvariants abelian_from_fingerprint(const PowerFingerprint& fp, std::uint64_t order);

/// True when image[] defines a homomorphism (checked on generators of the source).
bool is_hom(const FiniteGroup& source, const FiniteGroup& target, std::span<const Index> image);
/// Isomorphism G -> H as an image array, if one exists.
std::optional<std::vector<Index>> group_iso(const FiniteGroup& g, const FiniteGroup& h);
std::uint64_t count_group_homs(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace powq
