#pragma once

#include <string>

#include "preord/rational.hpp"

namespace preord {

// The radicand D of the ambient real quadratic field Q(sqrt D). Process-wide:
// weight entries from different fields never meet in one computation, and the
// wire format carries D so mixing is rejected at the boundary.  Must be a
// squarefree integer >= 2; defaults to 2.
namespace field {
long d();
void set_d(long d);          // throws Errc::field_mismatch unless squarefree >= 2
bool is_valid_d(long d);
}  // namespace field

// RAII restore, for code that needs a different field temporarily (tests, CLI setup).
class ScopedFieldD {
 public:
  explicit ScopedFieldD(long d) : saved_(field::d()) { field::set_d(d); }
  ~ScopedFieldD() { field::set_d(saved_); }
  ScopedFieldD(const ScopedFieldD&) = delete;
  ScopedFieldD& operator=(const ScopedFieldD&) = delete;

 private:
  long saved_;
};

// a + b*sqrt(D), exact.  Sign decisions never leave rational arithmetic: when
// the two parts disagree in sign the comparison of a^2 against D*b^2 settles
// it (equality is impossible for b != 0 since D is squarefree).
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0) {}
  QuadExt(const Rat& a) : a_(a), b_(0) {}           // NOLINT: implicit by design
  QuadExt(long a) : a_(a), b_(0) {}                 // NOLINT
  QuadExt(const Rat& a, const Rat& b) : a_(a), b_(b) {}

  static QuadExt sqrt_d() { return QuadExt(Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  QuadExt inverse() const;   // throws Errc::zero_input on 0
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  // Human-facing: "0", "-3/2", "sqrt2", "1-1/2*sqrt2", ...
  std::string str() const;

 private:
  Rat a_, b_;
};

inline int sign(const QuadExt& x) { return x.sign(); }

using QVec = std::vector<QuadExt>;

inline QuadExt dot(const RatVec& u, const QVec& w) {
  if (u.size() != w.size()) fail(Errc::dimension_mismatch, "dot: length mismatch");
  Rat sa = 0, sb = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sa += u[i] * w[i].a();
    sb += u[i] * w[i].b();
  }
  return QuadExt(sa, sb);
}

inline QVec to_qvec(const RatVec& v) {
  QVec w;
  w.reserve(v.size());
  for (const Rat& x : v) w.emplace_back(x);
  return w;
}

}  // namespace preord
