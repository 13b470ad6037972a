#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subnil/group.hpp"

namespace subnil {

// GF(p^k) with elements encoded as integers in [0, p^k): the base-p digits
// of an element are the coefficients of its polynomial representative. The
// modulus is the lexicographically least irreducible monic polynomial of
// degree k (coefficient vector read as a base-p number), so the encoding is
// deterministic. Construction verifies irreducibility, cyclicity of the
// multiplicative group, and that x -> x^p is an automorphism of order k.
class GaloisField {
public:
  GaloisField(unsigned p, unsigned k);

  unsigned characteristic() const { return _p; }
  unsigned extension_degree() const { return _k; }
  unsigned size() const { return _size; }
  const std::vector<unsigned> &modulus() const { return _modulus; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned pow(unsigned a, std::uint64_t e) const;
  unsigned inv(unsigned a) const;
  unsigned frobenius(unsigned a) const { return pow(a, _p); }

  // Least generator of the multiplicative group.
  unsigned generator() const { return _generator; }

private:
  unsigned _p, _k, _size;
  std::vector<unsigned> _modulus; // coefficients c0..ck, ck = 1
  unsigned _generator = 0;
};

// Least prime dividing 2^n - 1 but no 2^l - 1 for 1 <= l < n.
// Throws Error when none exists (n = 6) or n < 2.
std::uint64_t zsigmondy_prime(unsigned n);

Group symmetric_group(unsigned n); // 1 <= n <= 8
Group cyclic_group(unsigned n);    // n >= 1
Group dihedral_group(unsigned n);  // n >= 3, order 2n

// PSL(2,p) acting on the projective line (p+1 points), generated by
// z -> z+1 and z -> -1/z. 5 <= p <= 13 prime. Construction verifies
// |G| = p(p^2-1)/2, Sylow-p order p, n_p = p+1 and O_p = 1.
Group psl2(unsigned p);

// Frobenius group of affine maps v -> v*a + t on GF(p^k), with a ranging
// over the order-q subgroup of the multiplicative group. Requires
// q | p^k - 1 and q not dividing p^l - 1 for l < k. Construction verifies
// |G| = p^k q, the fixed-point-freeness of the complement and F(G) = N.
Group frobenius_group(unsigned p, unsigned k, unsigned q);

// True iff (p, k, q) satisfies the frobenius_group preconditions; on
// failure *why names the first violated condition.
bool frobenius_admissible(unsigned p, unsigned k, unsigned q,
                          std::string *why = nullptr);

// The sequence member G = (V x| P) x| Gal over GF(2^n) with n = 2^k:
// V the additive group, P the order-p multiplicative subgroup for the
// Zsigmondy prime p of n, and the Galois group acting by field
// automorphisms, realized on the 2^n field elements. k = 2 by default;
// k = 3 (|G| = 34816) requires allow_large. Construction asserts the
// expected order 2^(n+k) p, that every element is a 2-element or a
// p-element, trivial center, the fixed-point-free Galois action on P,
// O_2(G) = V, self-normalizing Sylow 2-subgroups, and that distinct Sylow
// 2-subgroups intersect exactly in V.
Group galois_semidirect_family(unsigned k, bool allow_large = false);

// Members of V (the translation subgroup) inside galois_semidirect_family.
SubgroupSet translation_subgroup(const Group &g, const GaloisField &field);

struct FamilySpec {
  enum class Kind { symmetric, cyclic, dihedral, psl2, frobenius, galois };

  Kind kind;
  std::vector<unsigned> params;

  // Accepts "s4", "c12", "d6", "psl2_5", "frob_7_1_3", "galois_2" and the
  // spelled-out forms "symmetric 4", "frobenius 7 1 3", ...
  static FamilySpec parse(const std::string &text);

  std::string display_name() const; // "S4", "PSL(2,5)", "Frob(7,1,3)", ...
  std::string token() const;        // "s4", "psl2_5", ...
  Group build(bool allow_large = false) const;
};

} // namespace subnil
