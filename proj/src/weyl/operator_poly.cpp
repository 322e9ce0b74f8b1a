#include "qpb/weyl/operator_poly.hpp"

#include <algorithm>

#include "qpb/errors.hpp"

namespace qpb::weyl {
namespace {

Register merge(Register a, Register b) {
  if (a == Register::none) return b;
  if (b == Register::none || a == b) return a;
  throw IncompatibleOperandsError("cannot mix the X,P and H,T registers in one expression");
}

mpq_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return mpq_class(f);
}

std::string word_text(const Word& w) {
  std::string out;
  const std::string& s = w.letters();
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += ' ';
    out += s[i];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string_view to_string(Register reg) {
  switch (reg) {
    case Register::none: return "none";
    case Register::xp: return "XP";
    case Register::ht: return "HT";
  }
  return "unknown";
}

Register register_of(char letter) {
  switch (letter) {
    case 'X':
    case 'P': return Register::xp;
    case 'H':
    case 'T': return Register::ht;
    default: throw ConfigurationError(std::string("unknown operator letter '") + letter + "'");
  }
}

char first_letter(Register reg) {
  return reg == Register::ht ? 'H' : 'X';
}

char second_letter(Register reg) {
  return reg == Register::ht ? 'T' : 'P';
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) reg_ = merge(reg_, register_of(c));
}

Word Word::power(char letter, unsigned exponent) {
  return Word(std::string(exponent, letter));
}

Word Word::reversed() const {
  return Word(std::string(letters_.rbegin(), letters_.rend()));
}

Word operator*(const Word& a, const Word& b) {
  return Word(a.letters_ + b.letters_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_.compare(b.letters_) <=> 0;
}

OperatorPoly::OperatorPoly(const Word& w, HbarPoly c) {
  add_term(w, c);
}

OperatorPoly OperatorPoly::scalar(HbarPoly c) {
  return OperatorPoly(Word(), std::move(c));
}

std::size_t OperatorPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void OperatorPoly::absorb_register(Register r) {
  reg_ = merge(reg_, r);
}

void OperatorPoly::add_term(const Word& w, const HbarPoly& c) {
  if (c.is_zero()) return;
  absorb_register(w.reg());
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly OperatorPoly::adjoint() const {
  OperatorPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w.reversed(), c.conj());
  return out;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& other) {
  absorb_register(other.reg_);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& other) {
  absorb_register(other.reg_);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

OperatorPoly operator-(const OperatorPoly& a) {
  OperatorPoly out;
  out.reg_ = a.reg_;
  for (const auto& [w, c] : a.terms_) out.add_term(w, -c);
  return out;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  out.absorb_register(merge(a.reg_, b.reg_));
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

OperatorPoly operator*(const HbarPoly& c, const OperatorPoly& a) {
  OperatorPoly out;
  out.reg_ = a.reg_;
  for (const auto& [w, ca] : a.terms_) out.add_term(w, c * ca);
  return out;
}

bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
  return normal_order(a).terms_ == normal_order(b).terms_;
}

OperatorPoly normal_order(const OperatorPoly& p) {
  OperatorPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (w.reg() == Register::none) {
      out.add_term(w, c);
      continue;
    }
    const char first = first_letter(w.reg());
    const char second = second_letter(w.reg());
    // (a, b) -> coefficient of first^a second^b. Appending a letter on the
    // right: first^a second^b first = first^(a+1) second^b - i hbar b first^a second^(b-1).
    std::map<std::pair<unsigned, unsigned>, HbarPoly> state{{{0U, 0U}, c}};
    for (char letter : w.letters()) {
      std::map<std::pair<unsigned, unsigned>, HbarPoly> next;
      for (const auto& [ab, coeff] : state) {
        const auto [a, b] = ab;
        if (letter == second) {
          next[{a, b + 1}] += coeff;
        } else {
          next[{a + 1, b}] += coeff;
          if (b > 0) next[{a, b - 1}] -= HbarPoly(GaussRational(0, b), 1) * coeff;
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      state = std::move(next);
    }
    for (const auto& [ab, coeff] : state) {
      out.add_term(Word::power(first, ab.first) * Word::power(second, ab.second), coeff);
    }
  }
  return out;
}

OperatorPoly weyl_symmetrize(const Word& w, std::size_t bound) {
  if (w.size() > bound) {
    throw ResourceBoundError("word of length " + std::to_string(w.size()) +
                             " exceeds the symmetrization bound " + std::to_string(bound));
  }
  std::string letters = w.letters();
  std::sort(letters.begin(), letters.end());
  std::vector<std::string> orderings;
  do {
    orderings.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));

  const HbarPoly weight(GaussRational(mpq_class(1, static_cast<unsigned long>(orderings.size()))));
  OperatorPoly out;
  for (const auto& o : orderings) out.add_term(Word(o), weight);
  return out;
}

OperatorPoly weyl_symmetrize_recursive(const Word& w) {
  if (w.size() <= 1) return OperatorPoly(w);
  const std::string& s = w.letters();
  const HbarPoly weight(GaussRational(mpq_class(1, static_cast<unsigned long>(s.size()))));
  OperatorPoly out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::string rest = s;
    rest.erase(k, 1);
    out += weight * (OperatorPoly::letter(s[k]) * weyl_symmetrize_recursive(Word(rest)));
  }
  return out;
}

OperatorPoly weyl_symmetrize(const OperatorPoly& p, std::size_t bound) {
  OperatorPoly out;
  for (const auto& [w, c] : p.terms()) out += c * weyl_symmetrize(w, bound);
  return out;
}

OperatorPoly commutator_poly(const OperatorPoly& a, const OperatorPoly& b) {
  return normal_order(a * b - b * a);
}

OperatorPoly taylor_operator(const std::map<std::pair<unsigned, unsigned>, HbarPoly>& table,
                             unsigned order_cap, Register reg, std::size_t bound) {
  if (reg == Register::none) throw ConfigurationError("taylor_operator needs an operator register");
  const char first = first_letter(reg);
  const char second = second_letter(reg);
  OperatorPoly out;
  for (const auto& [nm, c] : table) {
    const auto [n, m] = nm;
    if (n + m > order_cap) continue;
    const Word w = Word::power(first, n) * Word::power(second, m);
    const mpq_class denom = factorial(n) * factorial(m);
    const HbarPoly scale(GaussRational(mpq_class(1) / denom));
    out += (scale * c) * weyl_symmetrize(w, bound);
  }
  return out;
}

std::string to_string(const OperatorPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    for (const ScalarTerm& t : scalar_terms(c)) {
      const bool unit = t.value == 1 && !t.imaginary && t.hbar_power == 0;
      std::string text;
      if (w.empty()) {
        text = scalar_text(t.value, t.imaginary, t.hbar_power);
      } else if (unit) {
        text = word_text(w);
      } else {
        text = scalar_text(t.value, t.imaginary, t.hbar_power) + ' ' + word_text(w);
      }
      if (out.empty()) {
        out = (t.negative ? "-" : "") + text;
      } else {
        out += (t.negative ? " - " : " + ") + text;
      }
    }
  }
  return out;
}

}  // namespace qpb::weyl
