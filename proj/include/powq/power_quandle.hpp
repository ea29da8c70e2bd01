#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powq/group.hpp"
#include "powq/int_matrix.hpp"

namespace powq {

/// Finite power quandle (P, conj, pi, e) with a residual power action.
///
/// The carrier is 0..k-1. `conj(a, b)` is a |> b. The action of the
/// multiplicative monoid of integers is stored as N maps tau_0..tau_{N-1}
/// with pi^n = tau_{n mod N} for n != 0 and pi^0 the constant map to the unit.
/// So tau_0 is pi^N, not pi^0.
///
/// Instances are only created through validation and are immutable.
class PowerQuandle {
 public:
  /// Checks axioms A1..A9 and throws AxiomViolation for the first failure
  /// (axiom order, then lexicographically least witness):
  ///   A1 a|>a = a
  ///   A2 lambda_a bijective and a|>(b|>c) = (a|>b)|>(a|>c)
  ///   A3 e|>b = b and a|>e = e
  ///   A4 tau_{1 mod N} = id
  ///   A5 tau_r tau_s = tau_{rs mod N}
  ///   A6 tau_r(e) = e
  ///   A7 a|>tau_r(b) = tau_r(a|>b)
  ///   A8 tau_r(a)|>b = lambda_a^r(b) for 0 < r < N, tau_0(a)|>b = b
  ///   A9 lambda_a^N = id
  /// Index ranges are checked first (ParseError).
  static PowerQuandle validate(std::size_t size, Index unit, std::size_t exponent,
                               std::vector<Index> conj, std::vector<Index> pow);

  std::size_t size() const noexcept { return k_; }
  Index unit() const noexcept { return unit_; }
  std::size_t exponent() const noexcept { return n_; }

  Index conj(Index a, Index b) const { return conj_[static_cast<std::size_t>(a) * k_ + b]; }
  /// tau_r for 0 <= r < N.
  Index tau(std::size_t r, Index a) const { return pow_[r * k_ + a]; }
  /// pi^n for any integer n.
  Index power(std::int64_t n, Index a) const;

  std::span<const Index> conj_table() const noexcept { return conj_; }
  std::span<const Index> pow_table() const noexcept { return pow_; }

  friend bool operator==(const PowerQuandle&, const PowerQuandle&) = default;

 private:
  PowerQuandle() = default;
  std::size_t k_ = 0;
  Index unit_ = 0;
  std::size_t n_ = 1;
  std::vector<Index> conj_;
  std::vector<Index> pow_;
};

/// A surjective morphism onto a power quandle with trivial conjugation.
struct OrbitPq {
  PowerQuandle quotient;
  std::vector<Index> surjection;         // carrier element -> orbit index
  std::vector<std::vector<Index>> classes;  // orbit index -> sorted members
};

struct ElementSignature {
  std::size_t orbit_size = 0;
  std::vector<std::size_t> cycle_type;       // cycle lengths of lambda_a, ascending
  std::size_t power_order = 0;               // least r >= 1 with pi^r(a) = e; 0 if none
  std::vector<std::size_t> power_orbit_sizes;  // r -> orbit size of tau_r(a)
  std::vector<bool> power_fixed;             // r -> tau_r(a) == a

  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

/// Isomorphism invariants of a power quandle, computed on the canonical exponent.
struct PqFingerprint {
  std::size_t size = 0;
  std::size_t exponent = 0;
  std::size_t num_orbits = 0;
  std::size_t center_size = 0;
  /// |{a != e : pi^2(a) = e}|.
  std::size_t involutions = 0;
  std::vector<ElementSignature> elements;
  /// r -> orbit index of tau_r(a), per element. Informational; orbit indices
  /// are not isomorphism invariant and take no part in comparisons.
  std::vector<std::vector<Index>> power_orbits;
  std::vector<ElementSignature> sorted_signatures;

  bool same_invariants(const PqFingerprint& other) const;
};

/// Free abelian group on Or(P) with the induced pi action as integer matrices
/// (column j = orbit j; entry 1 in the row of the image orbit).
struct AbelianPresentation {
  std::size_t rank = 0;
  std::size_t exponent = 1;
  std::vector<IntMatrix> action;  // action[r] represents tau_r
  std::vector<std::vector<Index>> orbits;
};

PowerQuandle validate_pq(std::size_t size, Index unit, std::size_t exponent,
                         std::vector<Index> conj, std::vector<Index> pow);
/// a|>b = aba^-1, N = exponent(G), tau_r(a) = a^r, unit 0.
PowerQuandle pq_of_group(const FiniteGroup& g);
/// Same semantics with the smallest period N' dividing N.
PowerQuandle canonical_exponent(const PowerQuandle& p);
OrbitPq orbits(const PowerQuandle& p);
/// {a : lambda_a = id}, ascending.
std::vector<Index> pq_center(const PowerQuandle& p);
PqFingerprint fingerprint(const PowerQuandle& p);
/// Exhaustive check that image[] preserves e, |> and every pi^n.
bool is_pq_morphism(const PowerQuandle& p, const PowerQuandle& q, std::span<const Index> image);
std::optional<std::vector<Index>> pq_iso(const PowerQuandle& p, const PowerQuandle& q);
std::uint64_t count_pq_morphisms(const PowerQuandle& p, const PowerQuandle& q);
AbelianPresentation pq_abelianization(const PowerQuandle& p);

}  // namespace powq
