#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <sstream>
#include <string>

namespace qlandau {

/// Exact rational scalar used by the verification paths.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Complex number with exact rational real and imaginary parts.
struct CRat {
  Rat re{0};
  Rat im{0};

  CRat() = default;
  CRat(int v) : re(v) {}                     // NOLINT(google-explicit-constructor)
  CRat(Rat r) : re(std::move(r)) {}          // NOLINT(google-explicit-constructor)
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CRat unit_i() { return CRat{Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  CRat conj() const { return CRat{re, -im}; }

  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  CRat& operator+=(const CRat& o) { return *this = *this + o; }
  CRat& operator-=(const CRat& o) { return *this = *this - o; }
  CRat& operator*=(const CRat& o) { return *this = *this * o; }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  std::string str() const {
    std::ostringstream os;
    os << "(" << re;
    os << (im < 0 ? "-" : "+");
    Rat a = im < 0 ? Rat(-im) : im;
    os << a << "i)";
    return os.str();
  }
};

}  // namespace qlandau
