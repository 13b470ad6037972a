#include "subnil/catalog.hpp"

namespace subnil {

std::vector<FamilySpec> default_catalog_specs() {
  using Kind = FamilySpec::Kind;
  std::vector<FamilySpec> specs;
  for (unsigned n = 1; n <= 6; ++n)
    specs.push_back({Kind::symmetric, {n}});
  for (unsigned n = 3; n <= 12; ++n)
    specs.push_back({Kind::dihedral, {n}});
  for (unsigned n = 2; n <= 16; ++n)
    specs.push_back({Kind::cyclic, {n}});
  const unsigned frob[][3] = {{3, 1, 2},  {5, 1, 2}, {7, 1, 3},
                              {13, 1, 3}, {2, 2, 3}, {3, 2, 2}};
  for (auto &[p, k, q] : frob)
    if (frobenius_admissible(p, k, q))
      specs.push_back({Kind::frobenius, {p, k, q}});
  specs.push_back({Kind::psl2, {5}});
  specs.push_back({Kind::psl2, {7}});
  specs.push_back({Kind::galois, {2}});
  return specs;
}

std::vector<Group> build_default_catalog() {
  std::vector<Group> catalog;
  for (const FamilySpec &spec : default_catalog_specs())
    catalog.push_back(spec.build());
  return catalog;
}

} // namespace subnil
