#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "powq/group.hpp"

namespace powq {

/// Named families: cyclic(n), dihedral(2n), dicyclic(4n), symmetric(n<=5),
/// alternating(n<=5), klein, heisenberg(p<=5). Dihedral and dicyclic take the
/// group order. Throws UnknownName or UnsupportedSize.
FiniteGroup catalog(const std::string& name, std::span<const long> params);

/// Direct product with element (g, h) at index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Parses expressions such as "dihedral(8)", "klein" or
/// "product(cyclic(2),cyclic(2),cyclic(4))".
FiniteGroup catalog_from_string(const std::string& expr);

struct CatalogEntry {
  std::string label;
  FiniteGroup group;
};

/// Family names covered by sweep_catalog, for report headers.
std::vector<std::string> catalog_families();

/// The curated sweep list: every catalog family member of order <= max_order,
/// every non-cyclic abelian group in invariant-factor form, and a handful of
/// non-abelian direct products. Sorted by order, then label. Not a complete
/// classification of groups of each order.
std::vector<CatalogEntry> sweep_catalog(std::size_t max_order);

}  // namespace powq
