#include "subnil/families.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

#include "subnil/error.hpp"
#include "subnil/numeric.hpp"
#include "subnil/structure.hpp"
#include "subnil/sylow.hpp"

namespace subnil {

namespace {

using Poly = std::vector<unsigned>; // coefficients, little endian, over Z/p

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly &m, unsigned p) {
  a = trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    // a -= lead(a)/lead(m) * x^(da-dm) * m; m is monic.
    unsigned c = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      unsigned sub = (c * m[i]) % p;
      a[i + shift] = (a[i + shift] + p - sub) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_mul_mod(const Poly &a, const Poly &b, const Poly &m, unsigned p) {
  if (a.empty() || b.empty())
    return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

Poly decode_poly(unsigned value, unsigned p) {
  Poly coeffs;
  while (value) {
    coeffs.push_back(value % p);
    value /= p;
  }
  return coeffs;
}

unsigned encode_poly(const Poly &a, unsigned p) {
  unsigned value = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    value = value * p + a[i];
  return value;
}

bool poly_irreducible(const Poly &m, unsigned p) {
  const std::size_t deg = m.size() - 1;
  if (deg == 0)
    return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (unsigned t = 0; t < count; ++t) {
      Poly div = decode_poly(t, p);
      div.resize(d + 1, 0);
      div[d] = 1;
      if (trim(poly_mod(m, div, p)).empty())
        return false;
    }
  }
  return true;
}

} // namespace

GaloisField::GaloisField(unsigned p, unsigned k) : _p(p), _k(k) {
  if (!is_prime(p))
    throw Error("GaloisField: characteristic must be prime");
  if (k < 1)
    throw Error("GaloisField: extension degree must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= p;
    if (size > (1u << 20))
      throw Error("GaloisField: field too large");
  }
  _size = static_cast<unsigned>(size);

  if (k == 1) {
    _modulus = {0, 1}; // x
  } else {
    // Least monic irreducible of degree k, ordering coefficient vectors as
    // base-p numbers.
    unsigned pk = _size;
    bool found = false;
    for (unsigned t = 1; t < pk && !found; ++t) {
      Poly m = decode_poly(t, p);
      m.resize(k + 1, 0);
      m[k] = 1;
      if (poly_irreducible(m, p)) {
        _modulus = m;
        found = true;
      }
    }
    if (!found)
      throw Error("GaloisField: no irreducible modulus found");
    assert(poly_irreducible(_modulus, p));
  }

  // Multiplicative generator; its existence doubles as the cyclicity check.
  for (unsigned a = 1; a < _size; ++a) {
    unsigned x = a;
    unsigned order = 1;
    while (x != 1) {
      x = mul(x, a);
      ++order;
    }
    if (order == _size - 1) {
      _generator = a;
      break;
    }
  }
  if (_generator == 0 && _size > 2)
    throw Error("GaloisField: multiplicative group is not cyclic");
  if (_size == 2)
    _generator = 1;

  // Frobenius x -> x^p: additive and multiplicative automorphism of
  // order k.
  for (unsigned a = 0; a < _size; ++a)
    for (unsigned b = 0; b < _size; ++b) {
      if (frobenius(add(a, b)) != add(frobenius(a), frobenius(b)))
        throw Error("GaloisField: Frobenius is not additive");
      if (frobenius(mul(a, b)) != mul(frobenius(a), frobenius(b)))
        throw Error("GaloisField: Frobenius is not multiplicative");
    }
  unsigned probe = _generator;
  for (unsigned j = 1; j < k; ++j) {
    probe = frobenius(probe);
    if (probe == _generator)
      throw Error("GaloisField: Frobenius order is below the degree");
  }
  if (frobenius(probe) != _generator)
    throw Error("GaloisField: Frobenius order exceeds the degree");
}

unsigned GaloisField::add(unsigned a, unsigned b) const {
  if (_p == 2)
    return a ^ b;
  unsigned result = 0, mult = 1;
  while (a || b) {
    result += ((a % _p) + (b % _p)) % _p * mult;
    a /= _p;
    b /= _p;
    mult *= _p;
  }
  return result;
}

unsigned GaloisField::neg(unsigned a) const {
  if (_p == 2)
    return a;
  unsigned result = 0, mult = 1;
  while (a) {
    result += (_p - a % _p) % _p * mult;
    a /= _p;
    mult *= _p;
  }
  return result;
}

unsigned GaloisField::mul(unsigned a, unsigned b) const {
  return encode_poly(
      poly_mul_mod(decode_poly(a, _p), decode_poly(b, _p), _modulus, _p), _p);
}

unsigned GaloisField::pow(unsigned a, std::uint64_t e) const {
  unsigned result = 1;
  while (e) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

unsigned GaloisField::inv(unsigned a) const {
  if (a == 0)
    throw Error("GaloisField: inverse of zero");
  return pow(a, _size - 2);
}

std::uint64_t zsigmondy_prime(unsigned n) {
  if (n < 2)
    throw Error("zsigmondy: n must be at least 2");
  if (n > 62)
    throw Error("zsigmondy: n too large");
  const std::uint64_t m = (std::uint64_t(1) << n) - 1;
  for (auto &[p, e] : factorize(m)) {
    bool primitive = true;
    for (unsigned l = 1; l < n; ++l)
      if (((std::uint64_t(1) << l) - 1) % p == 0) {
        primitive = false;
        break;
      }
    if (primitive)
      return p;
  }
  throw Error("zsigmondy: no such prime for n=" + std::to_string(n));
}

Group symmetric_group(unsigned n) {
  if (n < 1 || n > 8)
    throw Error("symmetric: n must be in 1..8");
  std::string name = "S" + std::to_string(n);
  if (n == 1)
    return Group::closure(1, {}, Group::default_element_cap, name);
  std::vector<Perm> gens;
  gens.push_back(Perm::parse_cycles(n, "(0 1)"));
  if (n > 2) {
    std::vector<Perm::Point> cycle(n);
    for (unsigned i = 0; i < n; ++i)
      cycle[i] = static_cast<Perm::Point>((i + 1) % n);
    gens.push_back(Perm(std::move(cycle)));
  }
  Group g = Group::closure(n, std::move(gens), Group::default_element_cap,
                           name);
  std::uint64_t expected = 1;
  for (unsigned i = 2; i <= n; ++i)
    expected *= i;
  if (g.order() != expected)
    throw Error("symmetric: unexpected order");
  return g;
}

Group cyclic_group(unsigned n) {
  if (n < 1)
    throw Error("cyclic: n must be positive");
  std::string name = "C" + std::to_string(n);
  if (n == 1)
    return Group::closure(1, {}, Group::default_element_cap, name);
  std::vector<Perm::Point> cycle(n);
  for (unsigned i = 0; i < n; ++i)
    cycle[i] = static_cast<Perm::Point>((i + 1) % n);
  Group g = Group::closure(n, {Perm(std::move(cycle))},
                           Group::default_element_cap, name);
  assert(g.order() == n);
  return g;
}

Group dihedral_group(unsigned n) {
  if (n < 3)
    throw Error("dihedral: n must be at least 3");
  std::vector<Perm::Point> rotation(n), reflection(n);
  for (unsigned i = 0; i < n; ++i) {
    rotation[i] = static_cast<Perm::Point>((i + 1) % n);
    reflection[i] = static_cast<Perm::Point>((n - i) % n);
  }
  Group g = Group::closure(n, {Perm(std::move(rotation)),
                               Perm(std::move(reflection))},
                           Group::default_element_cap,
                           "D" + std::to_string(n));
  if (g.order() != 2ull * n)
    throw Error("dihedral: unexpected order");
  return g;
}

Group psl2(unsigned p) {
  if (!is_prime(p) || p < 5 || p > 13)
    throw Error("psl2: p must be a prime in 5..13");
  const unsigned degree = p + 1; // field points 0..p-1, infinity = p
  const unsigned inf = p;

  std::vector<Perm::Point> shift(degree), flip(degree);
  for (unsigned z = 0; z < p; ++z)
    shift[z] = static_cast<Perm::Point>((z + 1) % p);
  shift[inf] = static_cast<Perm::Point>(inf);

  flip[0] = static_cast<Perm::Point>(inf);
  flip[inf] = 0;
  for (unsigned z = 1; z < p; ++z)
    flip[z] = static_cast<Perm::Point>(
        (p - mod_inv(z, p)) % p); // z -> -1/z

  Group g = Group::closure(degree, {Perm(std::move(shift)),
                                    Perm(std::move(flip))},
                           Group::default_element_cap,
                           "PSL(2," + std::to_string(p) + ")");

  const std::uint64_t expected =
      std::uint64_t(p) * (std::uint64_t(p) * p - 1) / 2;
  if (g.order() != expected)
    throw Error("psl2: unexpected order");
  const SylowSystem &sys = sylow_system(g, p);
  if (sys.representative.order() != p || sys.n_p() != p + 1)
    throw Error("psl2: unexpected Sylow p-structure");
  if (o_p(g, p).order() != 1)
    throw Error("psl2: O_p should be trivial");
  return g;
}

bool frobenius_admissible(unsigned p, unsigned k, unsigned q,
                          std::string *why) {
  auto reject = [&](const std::string &reason) {
    if (why)
      *why = reason;
    return false;
  };
  if (!is_prime(p))
    return reject("p is not prime");
  if (!is_prime(q))
    return reject("q is not prime");
  if (k < 1)
    return reject("k must be at least 1");
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) {
    pk *= p;
    if (pk > (1u << 20))
      return reject("p^k too large");
  }
  if ((pk - 1) % q != 0)
    return reject("q does not divide p^k - 1");
  std::uint64_t pl = 1;
  for (unsigned l = 1; l < k; ++l) {
    pl *= p;
    if ((pl - 1) % q == 0)
      return reject("q divides p^l - 1 for l=" + std::to_string(l));
  }
  return true;
}

Group frobenius_group(unsigned p, unsigned k, unsigned q) {
  std::string why;
  if (!frobenius_admissible(p, k, q, &why))
    throw Error("frobenius: " + why);

  GaloisField field(p, k);
  const unsigned size = field.size();
  if (size > Perm::max_degree)
    throw Error("frobenius: degree too large");

  std::vector<Perm> gens;
  unsigned basis = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Perm::Point> images(size);
    for (unsigned v = 0; v < size; ++v)
      images[v] = static_cast<Perm::Point>(field.add(v, basis));
    gens.push_back(Perm(std::move(images)));
    basis *= p;
  }
  const unsigned a0 = field.pow(field.generator(), (size - 1) / q);
  std::vector<Perm::Point> mult_images(size);
  for (unsigned v = 0; v < size; ++v)
    mult_images[v] = static_cast<Perm::Point>(field.mul(v, a0));
  Perm multiplier(std::move(mult_images));
  gens.push_back(multiplier);

  std::ostringstream name;
  name << "Frob(" << p << "," << k << "," << q << ")";
  Group g = Group::closure(size, std::move(gens),
                           Group::default_element_cap, name.str());

  if (g.order() != std::uint64_t(size) * q)
    throw Error("frobenius: unexpected order");

  // Kernel = translations; complement acts fixed point freely on it.
  std::vector<Idx> kernel_members;
  std::vector<Idx> kernel_gens;
  for (unsigned t = 0; t < size; ++t) {
    std::vector<Perm::Point> images(size);
    for (unsigned v = 0; v < size; ++v)
      images[v] = static_cast<Perm::Point>(field.add(v, t));
    kernel_members.push_back(g.index_of(Perm(std::move(images))));
  }
  SubgroupSet kernel(g, kernel_members);
  const Idx x = g.index_of(multiplier);
  for (Idx v : kernel.members())
    if (v != 0 && g.conj(v, x) == v)
      throw Error("frobenius: complement has a fixed point on the kernel");
  if (!fitting(g).same_members(kernel))
    throw Error("frobenius: Fitting subgroup is not the kernel");
  return g;
}

SubgroupSet translation_subgroup(const Group &g, const GaloisField &field) {
  const unsigned size = field.size();
  std::vector<Idx> members;
  std::vector<Idx> gens;
  for (unsigned t = 0; t < size; ++t) {
    std::vector<Perm::Point> images(size);
    for (unsigned v = 0; v < size; ++v)
      images[v] = static_cast<Perm::Point>(field.add(v, t));
    members.push_back(g.index_of(Perm(std::move(images))));
  }
  return SubgroupSet(g, std::move(members));
}

Group galois_semidirect_family(unsigned k, bool allow_large) {
  if (k != 2 && k != 3)
    throw Error("galois family: k must be 2, or 3 with the large override");
  if (k == 3 && !allow_large)
    throw Error("galois family: k=3 requires the large override");

  const unsigned n = 1u << k;
  GaloisField field(2, n);
  const unsigned size = field.size(); // 2^n
  const std::uint64_t p = zsigmondy_prime(n);

  std::vector<Perm> gens;
  for (unsigned i = 0; i < n; ++i) {
    const unsigned basis = 1u << i;
    std::vector<Perm::Point> images(size);
    for (unsigned v = 0; v < size; ++v)
      images[v] = static_cast<Perm::Point>(field.add(v, basis));
    gens.push_back(Perm(std::move(images)));
  }
  const unsigned a0 =
      field.pow(field.generator(), (size - 1) / static_cast<unsigned>(p));
  std::vector<Perm::Point> mult_images(size);
  for (unsigned v = 0; v < size; ++v)
    mult_images[v] = static_cast<Perm::Point>(field.mul(v, a0));
  Perm multiplier(std::move(mult_images));
  gens.push_back(multiplier);

  std::vector<Perm::Point> frob_images(size);
  for (unsigned v = 0; v < size; ++v)
    frob_images[v] = static_cast<Perm::Point>(field.frobenius(v));
  Perm frob(std::move(frob_images));
  gens.push_back(frob);

  Group g = Group::closure(size, std::move(gens),
                           Group::default_element_cap,
                           "Galois(" + std::to_string(k) + ")");

  const std::uint64_t expected = (std::uint64_t(1) << (n + k)) * p;
  if (g.order() != expected)
    throw Error("galois family: unexpected order");

  for (Idx i = 0; i < g.order(); ++i) {
    const std::uint64_t order = g.element_order(i);
    if (!is_p_power(order, 2) && !is_p_power(order, p))
      throw Error("galois family: element of mixed order found");
  }
  if (center(g).order() != 1)
    throw Error("galois family: center is not trivial");

  const Idx a = g.index_of(multiplier);
  const Idx s = g.index_of(frob);
  for (unsigned j = 1; j < n; ++j) {
    const Idx sj = g.power(s, j);
    if (sj == 0)
      continue; // only nontrivial field automorphisms
    for (std::uint64_t i = 1; i < p; ++i) {
      const Idx ai = g.power(a, i);
      if (g.conj(ai, sj) == ai)
        throw Error("galois family: Galois action on P has a fixed point");
    }
  }

  SubgroupSet v = translation_subgroup(g, field);
  if (!o_p(g, 2).same_members(v))
    throw Error("galois family: O_2 is not the translation subgroup");

  const SylowSystem &sys = sylow_system(g, 2);
  if (sys.n_p() != p)
    throw Error("galois family: Sylow 2-subgroups are not self-normalizing");
  for (std::size_t i = 0; i < sys.conjugates.size(); ++i)
    for (std::size_t j = i + 1; j < sys.conjugates.size(); ++j)
      if (!sys.conjugates[i].intersect(sys.conjugates[j]).same_members(v))
        throw Error("galois family: Sylow 2-intersection is not V");

  return g;
}

FamilySpec FamilySpec::parse(const std::string &text) {
  std::string kind_word;
  std::vector<unsigned> nums;
  std::size_t i = 0;
  while (i < text.size() &&
         std::isalpha(static_cast<unsigned char>(text[i]))) {
    kind_word.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(text[i]))));
    ++i;
  }
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      unsigned value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        ++i;
      }
      nums.push_back(value);
    } else {
      ++i;
    }
  }

  FamilySpec spec;
  auto need = [&](std::size_t count, const char *what) {
    if (nums.size() != count)
      throw Error(std::string("family: ") + what + " expects " +
                  std::to_string(count) + " parameter(s)");
  };
  if (kind_word == "s" || kind_word == "sym" || kind_word == "symmetric") {
    spec.kind = Kind::symmetric;
    need(1, "symmetric");
  } else if (kind_word == "c" || kind_word == "cyc" ||
             kind_word == "cyclic") {
    spec.kind = Kind::cyclic;
    need(1, "cyclic");
  } else if (kind_word == "d" || kind_word == "dih" ||
             kind_word == "dihedral") {
    spec.kind = Kind::dihedral;
    need(1, "dihedral");
  } else if (kind_word == "psl") {
    spec.kind = Kind::psl2;
    if (nums.size() != 2 || nums[0] != 2)
      throw Error("family: psl2 expects the form psl2_<p>");
    nums.erase(nums.begin());
  } else if (kind_word == "frob" || kind_word == "frobenius") {
    spec.kind = Kind::frobenius;
    need(3, "frobenius");
  } else if (kind_word == "galois" || kind_word == "gal") {
    spec.kind = Kind::galois;
    need(1, "galois");
  } else {
    throw Error("family: unknown kind '" + kind_word + "'");
  }
  spec.params = std::move(nums);
  return spec;
}

std::string FamilySpec::display_name() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::symmetric:
    os << "S" << params[0];
    break;
  case Kind::cyclic:
    os << "C" << params[0];
    break;
  case Kind::dihedral:
    os << "D" << params[0];
    break;
  case Kind::psl2:
    os << "PSL(2," << params[0] << ")";
    break;
  case Kind::frobenius:
    os << "Frob(" << params[0] << "," << params[1] << "," << params[2] << ")";
    break;
  case Kind::galois:
    os << "Galois(" << params[0] << ")";
    break;
  }
  return os.str();
}

std::string FamilySpec::token() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::symmetric:
    os << "s" << params[0];
    break;
  case Kind::cyclic:
    os << "c" << params[0];
    break;
  case Kind::dihedral:
    os << "d" << params[0];
    break;
  case Kind::psl2:
    os << "psl2_" << params[0];
    break;
  case Kind::frobenius:
    os << "frob_" << params[0] << "_" << params[1] << "_" << params[2];
    break;
  case Kind::galois:
    os << "galois_" << params[0];
    break;
  }
  return os.str();
}

Group FamilySpec::build(bool allow_large) const {
  switch (kind) {
  case Kind::symmetric:
    return symmetric_group(params[0]);
  case Kind::cyclic:
    return cyclic_group(params[0]);
  case Kind::dihedral:
    return dihedral_group(params[0]);
  case Kind::psl2:
    return psl2(params[0]);
  case Kind::frobenius:
    return frobenius_group(params[0], params[1], params[2]);
  case Kind::galois:
    return galois_semidirect_family(params[0], allow_large);
  }
  throw Error("family: invalid spec");
}

} // namespace subnil
