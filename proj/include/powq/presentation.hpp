#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "powq/group.hpp"
#include "powq/power_quandle.hpp"

namespace powq {

/// Word in the generators: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::size_t num_generators = 0;
  std::vector<Word> relators;
};

/// Default bound on live cosets during enumeration.
inline constexpr std::size_t kDefaultCosetLimit = 2'000'000;

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t max_live = 0;
  std::size_t coincidences = 0;
};

/// Group presented by generators and relators, fully enumerated.
struct EnumeratedGroup {
  FiniteGroup group;               // element 0 is the identity
  std::vector<Index> gen_images;   // element represented by each generator
  std::vector<Word> rep_words;     // shortest positive word per element
  EnumerationStats stats;
};

/// Free reduction of a word.
Word free_reduce(const Word& w);

/// Gr(P): one generator sigma(a) per carrier element and relators, in order,
/// sigma(a)sigma(b)sigma(a)^-1 sigma(a|>b)^-1 for all (a,b); sigma(a)^N;
/// sigma(a)^r sigma(tau_r(a))^-1 for 0 < r < N; sigma(tau_0(a)); sigma(e).
/// Relators are freely reduced, empty ones dropped and repeats removed.
Presentation presentation_of_pq(const PowerQuandle& p);

/// Coset enumeration over the trivial subgroup (HLT: relator scanning from
/// each live coset in order, union-find coincidence processing). The result is
/// renumbered breadth-first from the identity so it is independent of the
/// enumeration history. Throws LimitExceeded when more than `limit` cosets are
/// live at once.
EnumeratedGroup todd_coxeter(const Presentation& pres, std::size_t limit = kDefaultCosetLimit);

/// Element of `g` represented by `w` when generator i maps to images[i].
Index evaluate_word(const FiniteGroup& g, std::span<const Index> images, const Word& w);

/// Debug format: one relator per line as space-separated signed integers.
std::string to_text(const Presentation& p);

}  // namespace powq
