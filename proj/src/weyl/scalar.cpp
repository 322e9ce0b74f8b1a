#include "qpb/weyl/scalar.hpp"

#include <cmath>

namespace qpb::weyl {

GaussRational::GaussRational(mpq_class re_, mpq_class im_) : re(std::move(re_)), im(std::move(im_)) {
  re.canonicalize();
  im.canonicalize();
}

GaussRational operator+(const GaussRational& a, const GaussRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussRational operator-(const GaussRational& a, const GaussRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussRational operator-(const GaussRational& a) {
  return {-a.re, -a.im};
}

GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool operator==(const GaussRational& a, const GaussRational& b) {
  return a.re == b.re && a.im == b.im;
}

HbarPoly::HbarPoly(GaussRational c, unsigned hbar_power) {
  add_term(hbar_power, c);
}

void HbarPoly::add_term(unsigned power, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HbarPoly HbarPoly::conj() const {
  HbarPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

std::complex<double> HbarPoly::evaluate(double hbar) const {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [k, c] : terms_) s += c.to_complex() * std::pow(hbar, static_cast<int>(k));
  return s;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

HbarPoly operator-(const HbarPoly& a) {
  HbarPoly out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
  HbarPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

std::vector<ScalarTerm> scalar_terms(const HbarPoly& c) {
  std::vector<ScalarTerm> out;
  for (const auto& [k, g] : c.terms()) {
    if (sgn(g.re) != 0) out.push_back({sgn(g.re) < 0, abs(g.re), false, k});
    if (sgn(g.im) != 0) out.push_back({sgn(g.im) < 0, abs(g.im), true, k});
  }
  return out;
}

std::string scalar_text(const mpq_class& value, bool imaginary, unsigned hbar_power) {
  std::string out;
  auto join = [&](const std::string& part) {
    if (!out.empty()) out += '*';
    out += part;
  };
  if (value != 1 || (!imaginary && hbar_power == 0)) join(value.get_str());
  if (imaginary) join("i");
  if (hbar_power == 1) join("hbar");
  if (hbar_power > 1) join("hbar^" + std::to_string(hbar_power));
  return out;
}

}  // namespace qpb::weyl
