#include "subnil/groupfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subnil/error.hpp"

namespace subnil {

using json = nlohmann::ordered_json;

GroupFile GroupFile::parse(const std::string &json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw Error(std::string("group file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") ||
      !doc.contains("generators"))
    throw Error("group file: expected an object with degree and generators");

  GroupFile gf;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw Error("group file: name must be a string");
    gf.name = doc["name"].get<std::string>();
  }
  if (!doc["degree"].is_number_unsigned())
    throw Error("group file: degree must be a nonnegative integer");
  gf.degree = doc["degree"].get<unsigned>();
  if (gf.degree < 1 || gf.degree > Perm::max_degree)
    throw Error("group file: degree out of range");

  if (!doc["generators"].is_array())
    throw Error("group file: generators must be an array");
  for (const json &entry : doc["generators"]) {
    if (entry.is_string()) {
      gf.generators.push_back(
          Perm::parse_cycles(gf.degree, entry.get<std::string>()));
    } else if (entry.is_array()) {
      std::vector<Perm::Point> images;
      for (const json &img : entry) {
        if (!img.is_number_unsigned())
          throw Error("group file: image entries must be nonnegative");
        unsigned value = img.get<unsigned>();
        if (value >= gf.degree)
          throw Error("group file: image exceeds degree");
        images.push_back(static_cast<Perm::Point>(value));
      }
      if (images.size() != gf.degree)
        throw Error("group file: image array length must equal degree");
      gf.generators.push_back(Perm(std::move(images)));
    } else {
      throw Error("group file: generator must be a cycle string or an "
                  "image array");
    }
  }
  return gf;
}

GroupFile GroupFile::load(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("group file: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string GroupFile::serialize() const {
  json doc;
  if (!name.empty())
    doc["name"] = name;
  doc["degree"] = degree;
  json gens = json::array();
  for (const Perm &p : generators) {
    json images = json::array();
    for (Perm::Point img : p.images())
      images.push_back(img);
    gens.push_back(std::move(images));
  }
  doc["generators"] = std::move(gens);
  return doc.dump(2) + "\n";
}

void GroupFile::save(const std::string &path) const {
  std::ofstream out(path);
  if (!out)
    throw Error("group file: cannot write " + path);
  out << serialize();
}

Group GroupFile::build(std::size_t element_cap) const {
  return Group::closure(degree, generators, element_cap, name);
}

} // namespace subnil
