#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subnil/group.hpp"

namespace subnil {

// On-disk group description: JSON with a degree, a generator list (image
// arrays or cycle strings on input; image arrays on output) and an optional
// name. Serialization is deterministic and round-trips exactly.
struct GroupFile {
  unsigned degree = 0;
  std::vector<Perm> generators;
  std::string name;

  static GroupFile parse(const std::string &json_text);
  static GroupFile load(const std::string &path);

  std::string serialize() const;
  void save(const std::string &path) const;

  Group build(std::size_t element_cap = Group::default_element_cap) const;
};

} // namespace subnil
