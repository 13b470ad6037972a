#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subnil {

// A permutation of {0, ..., degree-1}, stored as its image sequence.
class Perm {
public:
  using Point = std::uint16_t;
  static constexpr unsigned max_degree = 65535;

  explicit Perm(unsigned degree); // identity
  explicit Perm(std::vector<Point> images);

  // Parses cycle notation like "(0 1)(2 3)" or "(0,1,2)"; "()" is the
  // identity. Points are 0-based and must be below the degree.
  static Perm parse_cycles(unsigned degree, std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }
  Point operator[](Point p) const { return _images[p]; }
  const std::vector<Point> &images() const { return _images; }

  bool is_identity() const;

  // Function composition: (a * b)(p) = a(b(p)), b applied first.
  Perm operator*(const Perm &rhs) const;
  Perm inverse() const;

  // Order as lcm of cycle lengths.
  std::uint64_t order() const;

  // Nontrivial cycles, each rotated to start at its least point, sorted.
  std::vector<std::vector<Point>> cycles() const;
  std::string cycle_string() const;

  bool operator==(const Perm &o) const { return _images == o._images; }
  bool operator!=(const Perm &o) const { return _images != o._images; }
  bool operator<(const Perm &o) const { return _images < o._images; }

private:
  std::vector<Point> _images;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const;
};

} // namespace subnil
