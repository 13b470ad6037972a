#pragma once

#include <vector>

#include "subnil/families.hpp"

namespace subnil {

// The built-in default catalog: symmetric(1..6), dihedral(3..12),
// cyclic(2..16), the Frobenius instances whose preconditions hold,
// PSL(2,5), PSL(2,7) and the Galois family at k = 2.
std::vector<FamilySpec> default_catalog_specs();

std::vector<Group> build_default_catalog();

} // namespace subnil
