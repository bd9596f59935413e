#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "ultraball/error.hpp"

namespace ub {

// Exact rational on 64-bit components, always reduced, denominator > 0.
// Intermediate products go through __int128 so comparisons never overflow;
// arithmetic that would leave the 64-bit range throws instead of wrapping.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) { assign(n, d); }

  // Accepts "12", "-3", "1.25" and "3/4".
  static Rat parse(std::string_view s);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool negative() const { return num_ < 0; }

  // Decimal string when the expansion terminates, otherwise "p/q".
  std::string str() const;
  // Always "p" or "p/q" in lowest terms; used where string equality must
  // coincide with value equality.
  std::string frac() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
           : l > r ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator/(long long k) const;

 private:
  void assign(__int128 n, __int128 d);
  long long num_;
  long long den_;
};

}  // namespace ub
