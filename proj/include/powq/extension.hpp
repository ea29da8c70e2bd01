#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powq/group.hpp"
#include "powq/homology.hpp"
#include "powq/presentation.hpp"

namespace powq {

/// Surjection proj: total -> base with central kernel and a normalized set
/// theoretic section.
struct CentralExtension {
  FiniteGroup total;
  GroupHom proj;
  Subgroup kernel;
  std::vector<Index> section;  // base element -> total element

  const FiniteGroup& base() const noexcept { return proj.target; }
};

/// Checks that proj is a surjective hom, section is normalized with
/// proj(section(g)) = g, and the kernel is central. Throws KernelNotCentral
/// for a non-central kernel and Error otherwise.
CentralExtension make_extension(const FiniteGroup& total, const FiniteGroup& base,
                                std::vector<Index> proj, std::vector<Index> section);

/// E = Gr Pq(G) with the co-unit eps: sigma(a) -> a, kernel A(G) and section
/// sigma. Throws LimitExceeded, and CentralityFailure if A(G) is not central.
CentralExtension gr_pq(const FiniteGroup& g, std::size_t limit = kDefaultCosetLimit);

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct FiveTermReport {
  std::size_t e_order = 0;
  std::size_t a_order = 0;
  std::size_t a_cap_commutator = 0;  // |A(G) n [E,E]|
  AbelianInvariants ab_e;             // abelianization(E)
  AbelianInvariants b;                // b_group(G)
  AbelianInvariants h1;               // abelianization(G)
  AbelianInvariants coker;            // E / (A [E,E])
  std::optional<AbelianInvariants> h2;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// The exact-sequence checks H2 -> A -> B -> H1 -> 0:
///   ab_e_is_b        Ab(E) = B(G)
///   coker_is_h1      coker(A -> Ab(E)) = H1(G)
///   exact_at_a       |A| |H1| = |A n [E,E]| |B|
///   schur_image      |A n [E,E]| divides |H2(G)|, skipped when |G| > h2_bound
FiveTermReport verify_five_term(const FiniteGroup& g, const CentralExtension& ext,
                                std::size_t h2_bound = kBarHomologyBound);

/// The unique hom Gr Pq(G) -> target.total sending sigma(g) to s(g), where
/// `universal` is gr_pq(G) and `target` an extension of the same G. Checks
/// that s is a normalized section and a power quandle morphism
/// Pq(G) -> Pq(target.total) (SectionNotPqMorphism), that target's kernel is
/// central (KernelNotCentral), and that the result commutes with projections.
GroupHom extend_section(const CentralExtension& universal, const CentralExtension& target,
                        std::span<const Index> s);

/// Searches for a hom section of proj; generator images are tried in the
/// fiber, starting with the recorded section and then by ascending index.
/// A found section is verified to give E = G x kernel: (g, a) -> s(g) a is
/// checked bijective, and for |E| <= kSplitIsoCheckLimit an isomorphism
/// E -> G x kernel is also found by group_iso.
std::optional<GroupHom> check_split(const CentralExtension& ext);

inline constexpr std::size_t kSplitIsoCheckLimit = 512;

}  // namespace powq
