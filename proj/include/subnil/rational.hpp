#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "subnil/error.hpp"

namespace subnil {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always stored in lowest terms with a positive
// denominator; every probability in this library is one of these.
class Ratio {
public:
  Ratio() : _num(0), _den(1) {}
  Ratio(long long n) : _num(n), _den(1) {} // NOLINT: implicit by design
  Ratio(BigInt num, BigInt den);

  static Ratio of_counts(std::uint64_t num, std::uint64_t den);

  const BigInt &num() const { return _num; }
  const BigInt &den() const { return _den; }

  bool is_integer() const { return _den == 1; }

  Ratio operator+(const Ratio &o) const;
  Ratio operator-(const Ratio &o) const;
  Ratio operator*(const Ratio &o) const;
  Ratio operator/(const Ratio &o) const;
  Ratio &operator+=(const Ratio &o) { return *this = *this + o; }

  bool operator==(const Ratio &o) const {
    return _num == o._num && _den == o._den;
  }
  bool operator!=(const Ratio &o) const { return !(*this == o); }
  bool operator<(const Ratio &o) const { return _num * o._den < o._num * _den; }
  bool operator>(const Ratio &o) const { return o < *this; }
  bool operator<=(const Ratio &o) const { return !(o < *this); }
  bool operator>=(const Ratio &o) const { return !(*this < o); }

  // "a/b", or plain "a" for integers.
  std::string str() const;

  double to_double() const;

private:
  void normalize();

  BigInt _num;
  BigInt _den;
};

std::ostream &operator<<(std::ostream &os, const Ratio &r);

} // namespace subnil
