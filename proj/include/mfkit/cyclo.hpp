#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mfkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Element of Q(e) where e is a primitive cube root of unity, e^2 = -1 - e.
/// Stored as re + im*e with exact rational components.
struct CycNum {
  Rat re;
  Rat im;

  CycNum() = default;
  CycNum(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  CycNum(long r) : re(r) {}            // NOLINT(google-explicit-constructor)
  CycNum(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CycNum eps() { return CycNum(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  // Arbitrary total order, used only for canonical sorting.
  friend bool operator<(const CycNum& a, const CycNum& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    return CycNum(a.re + b.re, a.im + b.im);
  }
  friend CycNum operator-(const CycNum& a, const CycNum& b) {
    return CycNum(a.re - b.re, a.im - b.im);
  }
  friend CycNum operator-(const CycNum& a) { return CycNum(-a.re, -a.im); }

  // (a + b e)(c + d e) = ac + (ad + bc) e + bd e^2,  e^2 = -1 - e.
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    Rat cross = a.re * b.im + a.im * b.re;
    Rat ee = a.im * b.im;
    return CycNum(a.re * b.re - ee, cross - ee);
  }

  CycNum inv() const {
    // Norm (a + b e)(a + b e~) with e~ = e^2 = -1 - e.
    Rat n = re * re - re * im + im * im;
    if (n == 0) throw Error("CycNum: division by zero");
    return CycNum((re - im) / n, -im / n);
  }

  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  CycNum pow(unsigned k) const {
    CycNum r(1);
    CycNum base = *this;
    for (; k; k >>= 1) {
      if (k & 1) r = r * base;
      base = base * base;
    }
    return r;
  }

  /// Canonical text form: "p/q", "e", "-2*e", "(1/2-3*e)".
  std::string str() const;
};

inline std::string rat_str(const Rat& r) {
  return r.str();
}

inline std::string CycNum::str() const {
  if (im == 0) return rat_str(re);
  std::string epart;
  if (im == 1)
    epart = "e";
  else if (im == -1)
    epart = "-e";
  else
    epart = rat_str(im) + "*e";
  if (re == 0) return epart;
  std::string s = "(" + rat_str(re);
  if (epart[0] != '-') s += "+";
  s += epart + ")";
  return s;
}

/// The three solutions of x^3 = -1 in Q(e): -1, -e, -e^2 = 1 + e.
inline std::vector<CycNum> cube_roots_of_minus_one() {
  CycNum e = CycNum::eps();
  return {CycNum(-1), -e, -(e * e)};
}

/// The two primitive cube roots of unity: e and e^2 = -1 - e.
inline std::vector<CycNum> primitive_cube_roots_of_unity() {
  CycNum e = CycNum::eps();
  return {e, e * e};
}

}  // namespace mfkit
