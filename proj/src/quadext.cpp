#include "preord/quadext.hpp"

#include <cctype>

namespace preord {

namespace field {

namespace {
long current_d = 2;
}

bool is_valid_d(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

long d() { return current_d; }

void set_d(long d) {
  if (!is_valid_d(d)) {
    fail(Errc::field_mismatch, "field radicand must be a squarefree integer >= 2, got " + std::to_string(d));
  }
  current_d = d;
}

}  // namespace field

int QuadExt::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Parts disagree: |a| vs |b|*sqrt(D) decided by a^2 vs D*b^2.
  Rat lhs = a_ * a_;
  Rat rhs = Rat(field::d()) * b_ * b_;
  int c = cmp(lhs, rhs);
  if (c == 0) fail(Errc::precondition_failed, "sqrt(D) rational: field radicand not squarefree");
  return c > 0 ? sa : sb;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rat d(field::d());
  Rat na = a_ * o.a_ + d * b_ * o.b_;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) fail(Errc::zero_input, "inverse of zero field element");
  // (a + b sqrt D)^-1 = (a - b sqrt D) / (a^2 - D b^2); the norm is nonzero
  // because sqrt(D) is irrational.
  Rat norm = a_ * a_ - Rat(field::d()) * b_ * b_;
  return QuadExt(a_ / norm, -b_ / norm);
}

std::string QuadExt::str() const {
  auto rat_part = [](const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
  };
  std::string root = "sqrt" + std::to_string(field::d());
  if (is_zero()) return "0";
  std::string out;
  if (sgn(a_) != 0) out = rat_part(a_);
  if (sgn(b_) != 0) {
    std::string coef;
    if (b_ == 1) {
      coef = root;
    } else if (b_ == -1) {
      coef = "-" + root;
    } else {
      coef = rat_part(b_) + "*" + root;
    }
    if (!out.empty() && coef[0] != '-') out += "+";
    out += coef;
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  auto bad = [&]() { fail(Errc::malformed_input, "not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  Int n(num), d(den);
  if (d == 0) bad();
  return make_rat(n, d);
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace preord
