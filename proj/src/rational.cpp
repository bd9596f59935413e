#include "ultraball/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace ub {

namespace {

constexpr __int128 kMin = INT64_MIN;
constexpr __int128 kMax = INT64_MAX;

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

void Rat::assign(__int128 n, __int128 d) {
  if (d == 0) throw Error("zero-denominator", "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n < kMin || n > kMax || d > kMax)
    throw Error("overflow", "rational value out of 64-bit range");
  num_ = static_cast<long long>(n);
  den_ = static_cast<long long>(d);
}

Rat Rat::parse(std::string_view s) {
  auto bad = [&] {
    return parse_error("bad-number",
                       "cannot parse number: '" + std::string(s) + "'");
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) -> __int128 {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw bad();
    __int128 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > static_cast<__int128>(kMax) * 1000000) throw bad();
      ++pos;
    }
    return v;
  };
  __int128 intpart = digits(i);
  if (i == s.size()) {
    Rat r;
    r.assign(neg ? -intpart : intpart, 1);
    return r;
  }
  if (s[i] == '/') {
    ++i;
    __int128 q = digits(i);
    if (i != s.size() || q == 0) throw bad();
    Rat r;
    r.assign(neg ? -intpart : intpart, q);
    return r;
  }
  if (s[i] == '.') {
    ++i;
    std::size_t start = i;
    __int128 fracpart = digits(i);
    if (i != s.size()) throw bad();
    std::size_t k = i - start;
    __int128 scale = 1;
    for (std::size_t j = 0; j < k; ++j) {
      scale *= 10;
      if (scale > kMax) throw bad();
    }
    __int128 n = intpart * scale + fracpart;
    Rat r;
    r.assign(neg ? -n : n, scale);
    return r;
  }
  throw bad();
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  // A terminating decimal exists iff the reduced denominator is 2^a * 5^b.
  long long d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return frac();
  int k = twos > fives ? twos : fives;
  __int128 scale = 1;
  for (int j = 0; j < k; ++j) scale *= 10;
  __int128 n = static_cast<__int128>(num_ < 0 ? -num_ : num_) * (scale / den_);
  __int128 whole = n / scale;
  __int128 rem = n % scale;
  std::string digits;
  for (int j = 0; j < k; ++j) {
    digits.insert(digits.begin(), static_cast<char>('0' + (int)(rem % 10)));
    rem /= 10;
  }
  std::string out = num_ < 0 ? "-" : "";
  out += std::to_string(static_cast<long long>(whole));
  out += '.';
  out += digits;
  return out;
}

std::string Rat::frac() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator+(const Rat& o) const {
  Rat r;
  r.assign(static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_,
           static_cast<__int128>(den_) * o.den_);
  return r;
}

Rat Rat::operator-(const Rat& o) const {
  Rat r;
  r.assign(static_cast<__int128>(num_) * o.den_ -
               static_cast<__int128>(o.num_) * den_,
           static_cast<__int128>(den_) * o.den_);
  return r;
}

Rat Rat::operator/(long long k) const {
  Rat r;
  r.assign(num_, static_cast<__int128>(den_) * k);
  return r;
}

}  // namespace ub
