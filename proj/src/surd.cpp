#include "isoreg/surd.hpp"

#include "isoreg/graph.hpp"

namespace isoreg {

namespace {

const Int& common_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw Error("surd arithmetic with different radicands");
}

int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

Surd::Surd(Int value) : a_(std::move(value)) {}

Surd::Surd(Int a, Int b, Int d, Int c) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  if (c_ == 0) throw Error("surd with zero denominator");
  if (d_ < 0) throw Error("surd with negative radicand");
  auto [f, sf] = squarefree_split(d_);
  b_ *= f;
  d_ = sf;
  normalise();
}

void Surd::normalise() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (d_ == 0 || b_ == 0) {
    b_ = 0;
    d_ = 0;
  }
  Int g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

int Surd::sign() const {
  int sa = sign_of(a_), sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(d) have opposite signs
  Int lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Surd Surd::operator-() const {
  Surd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Surd Surd::inverse() const {
  Int norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) throw Error("inverse of zero surd");
  Surd r;
  r.a_ = c_ * a_;
  r.b_ = -c_ * b_;
  r.d_ = d_;
  r.c_ = norm;
  r.normalise();
  return r;
}

Surd operator+(const Surd& x, const Surd& y) {
  Surd r;
  r.d_ = common_radicand(x, y);
  r.a_ = x.a_ * y.c_ + y.a_ * x.c_;
  r.b_ = x.b_ * y.c_ + y.b_ * x.c_;
  r.c_ = x.c_ * y.c_;
  r.normalise();
  return r;
}

Surd operator*(const Surd& x, const Surd& y) {
  Surd r;
  r.d_ = common_radicand(x, y);
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * r.d_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.c_ = x.c_ * y.c_;
  r.normalise();
  return r;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Surd::to_string() const {
  if (b_ == 0) return c_ == 1 ? a_.str() : a_.str() + "/" + c_.str();
  std::string num;
  if (a_ != 0) num = a_.str();
  Int babs = abs(b_);
  std::string root = (babs == 1 ? std::string() : babs.str() + "*") + "sqrt(" + d_.str() + ")";
  if (b_ < 0)
    num += "-" + root;
  else
    num += (a_ != 0 ? "+" : "") + root;
  if (c_ == 1) return num;
  return "(" + num + ")/" + c_.str();
}

}  // namespace isoreg
