#pragma once

#include <compare>
#include <string>

#include "isoreg/bigint.hpp"

namespace isoreg {

// Exact real number (a + b*sqrt(d)) / c with c > 0 and d squarefree.
// Rational values are stored with b = 0 and d = 0.
class Surd {
 public:
  Surd() = default;
  Surd(Int value);  // NOLINT: implicit from integers is intended
  Surd(Int a, Int b, Int d, Int c);

  static Surd rational(Int num, Int den) { return Surd(std::move(num), 0, 0, std::move(den)); }

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& d() const noexcept { return d_; }
  const Int& c() const noexcept { return c_; }

  bool is_rational() const noexcept { return b_ == 0; }
  bool is_integer() const noexcept { return b_ == 0 && c_ == 1; }
  int sign() const;

  Surd operator-() const;
  Surd inverse() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y) { return x * y.inverse(); }

  friend bool operator==(const Surd& x, const Surd& y) = default;
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

  // "5/2", "-3", "(-1+sqrt(5))/2", "(1-3*sqrt(2))/4"
  std::string to_string() const;

 private:
  Int a_ = 0, b_ = 0, d_ = 0, c_ = 1;
  void normalise();
};

}  // namespace isoreg
