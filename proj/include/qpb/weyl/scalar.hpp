#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace qpb::weyl {

/// a + b i with a, b exact rationals.
struct GaussRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussRational() = default;
  GaussRational(mpq_class re_, mpq_class im_ = 0);
  GaussRational(long re_) : GaussRational(mpq_class(re_)) {}

  static GaussRational i() { return GaussRational(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return GaussRational(re, -im); }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b);
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b);
  friend GaussRational operator-(const GaussRational& a);
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b);
  friend bool operator==(const GaussRational& a, const GaussRational& b);
};

/// Polynomial in hbar with Gaussian-rational coefficients, stored sparsely
/// (no zero coefficients).
class HbarPoly {
 public:
  HbarPoly() = default;
  HbarPoly(GaussRational c, unsigned hbar_power = 0);
  HbarPoly(long c) : HbarPoly(GaussRational(c)) {}

  static HbarPoly i_hbar() { return HbarPoly(GaussRational::i(), 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<unsigned, GaussRational>& terms() const { return terms_; }
  HbarPoly conj() const;
  std::complex<double> evaluate(double hbar) const;

  HbarPoly& operator+=(const HbarPoly& other);
  HbarPoly& operator-=(const HbarPoly& other);
  friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
  friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
  friend HbarPoly operator-(const HbarPoly& a);
  friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b);
  friend bool operator==(const HbarPoly& a, const HbarPoly& b) = default;

 private:
  void add_term(unsigned power, const GaussRational& c);
  std::map<unsigned, GaussRational> terms_;
};

/// One printable scalar of the expression grammar: value [*i] [*hbar^k],
/// value >= 0, with the sign carried separately.
struct ScalarTerm {
  bool negative = false;
  mpq_class value{1};
  bool imaginary = false;
  unsigned hbar_power = 0;
};

std::vector<ScalarTerm> scalar_terms(const HbarPoly& c);
std::string scalar_text(const mpq_class& value, bool imaginary, unsigned hbar_power);

}  // namespace qpb::weyl
