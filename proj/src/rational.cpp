#include "subnil/rational.hpp"

#include <ostream>

namespace subnil {

namespace mp = boost::multiprecision;

Ratio::Ratio(BigInt num, BigInt den) : _num(std::move(num)), _den(std::move(den)) {
  if (_den == 0)
    throw Error("Ratio: zero denominator");
  normalize();
}

Ratio Ratio::of_counts(std::uint64_t num, std::uint64_t den) {
  return Ratio(BigInt(num), BigInt(den));
}

void Ratio::normalize() {
  if (_den < 0) {
    _num = -_num;
    _den = -_den;
  }
  BigInt g = mp::gcd(_num, _den);
  if (g > 1) {
    _num /= g;
    _den /= g;
  }
  if (_num == 0)
    _den = 1;
}

Ratio Ratio::operator+(const Ratio &o) const {
  return Ratio(_num * o._den + o._num * _den, _den * o._den);
}

Ratio Ratio::operator-(const Ratio &o) const {
  return Ratio(_num * o._den - o._num * _den, _den * o._den);
}

Ratio Ratio::operator*(const Ratio &o) const {
  return Ratio(_num * o._num, _den * o._den);
}

Ratio Ratio::operator/(const Ratio &o) const {
  if (o._num == 0)
    throw Error("Ratio: division by zero");
  return Ratio(_num * o._den, _den * o._num);
}

std::string Ratio::str() const {
  if (_den == 1)
    return _num.str();
  return _num.str() + "/" + _den.str();
}

double Ratio::to_double() const {
  return static_cast<double>(mp::cpp_rational(_num, _den));
}

std::ostream &operator<<(std::ostream &os, const Ratio &r) {
  return os << r.str();
}

} // namespace subnil
