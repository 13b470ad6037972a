#include "subnil/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "subnil/error.hpp"

namespace subnil {

Perm::Perm(unsigned degree) : _images(degree) {
  if (degree > max_degree)
    throw Error("permutation degree too large");
  std::iota(_images.begin(), _images.end(), Point(0));
}

Perm::Perm(std::vector<Point> images) : _images(std::move(images)) {
  if (_images.size() > max_degree)
    throw Error("permutation degree too large");
  std::vector<bool> seen(_images.size(), false);
  for (Point img : _images) {
    if (img >= _images.size() || seen[img])
      throw Error("image sequence is not a permutation");
    seen[img] = true;
  }
}

Perm Perm::parse_cycles(unsigned degree, std::string_view text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point(0));

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
      ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error("cycle notation: expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
        throw Error("cycle notation: expected point or ')'");
      unsigned long value = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value >= degree)
          throw Error("cycle notation: point exceeds degree");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.size() > 1) {
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        Point from = cycle[j];
        Point to = cycle[(j + 1) % cycle.size()];
        if (images[from] != from)
          throw Error("cycle notation: point repeated across cycles");
        images[from] = to;
      }
      // The repeated-point guard above only catches points moved twice;
      // re-validate via the constructor below.
    }
    skip_space();
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    throw Error("composing permutations of different degree");
  std::vector<Point> images(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    images[i] = _images[rhs._images[i]];
  Perm result(0u);
  result._images = std::move(images); // known bijection, skip validation
  return result;
}

Perm Perm::inverse() const {
  std::vector<Point> images(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    images[_images[i]] = static_cast<Point>(i);
  Perm result(0u);
  result._images = std::move(images);
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Perm::Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<Point>(j));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &cycle : cs) {
    os << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j)
        os << ' ';
      os << cycle[j];
    }
    os << ')';
  }
  return os.str();
}

std::size_t PermHash::operator()(const Perm &p) const {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Perm::Point img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace subnil
