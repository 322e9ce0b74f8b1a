#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "qpb/weyl/scalar.hpp"

namespace qpb::weyl {

/// Operator alphabet. Each register is a canonical pair (first, second) with
/// [first, second] = i hbar: (X, P) for position/momentum and (H, T) for
/// energy/time. Registers never mix.
enum class Register { none, xp, ht };

std::string_view to_string(Register reg);
Register register_of(char letter);
char first_letter(Register reg);
char second_letter(Register reg);

/// Finite sequence of letters read left to right as an operator product.
/// The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);

  static Word power(char letter, unsigned exponent);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Register reg() const noexcept { return reg_; }

  Word reversed() const;
  friend Word operator*(const Word& a, const Word& b);

  // Shorter words first, then lexicographic: identity leads every listing.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  Register reg_ = Register::none;
};

/// Sparse sum of words with HbarPoly coefficients (no zero coefficients).
/// Equality compares normal forms, so XP - PX == i hbar.
class OperatorPoly {
 public:
  using Terms = std::map<Word, HbarPoly>;

  OperatorPoly() = default;
  OperatorPoly(const Word& w, HbarPoly c = HbarPoly(1));
  static OperatorPoly scalar(HbarPoly c);
  static OperatorPoly letter(char l) { return OperatorPoly(Word(std::string(1, l))); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Register reg() const noexcept { return reg_; }
  // Longest word length (0 for scalars and the zero poly).
  std::size_t degree() const;

  void add_term(const Word& w, const HbarPoly& c);

  // Reverse every word and conjugate every coefficient.
  OperatorPoly adjoint() const;

  OperatorPoly& operator+=(const OperatorPoly& other);
  OperatorPoly& operator-=(const OperatorPoly& other);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator-(const OperatorPoly& a);
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator*(const HbarPoly& c, const OperatorPoly& a);

  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b);
  // Term-by-term comparison without normal ordering.
  bool structurally_equal(const OperatorPoly& other) const { return terms_ == other.terms_; }

 private:
  void absorb_register(Register r);

  Terms terms_;
  Register reg_ = Register::none;
};

/// Rewrites every word to first^a second^b using second*first = first*second - i hbar.
OperatorPoly normal_order(const OperatorPoly& p);

inline constexpr std::size_t kDefaultSymmetrizationBound = 10;

/// Average over all orderings of the word's letters: the distinct
/// permutations of the multiset, each weighted by prod(count!) / n!.
/// Throws ResourceBoundError when the word is longer than `bound`.
OperatorPoly weyl_symmetrize(const Word& w, std::size_t bound = kDefaultSymmetrizationBound);

/// Leading-letter recursion S{w} = (1/n) sum_k w_k S{w without w_k}, with
/// S of a single letter the letter itself. Factorial cost; kept as an
/// independent oracle for the closed form above.
OperatorPoly weyl_symmetrize_recursive(const Word& w);

// Linear extension over the terms of p.
OperatorPoly weyl_symmetrize(const OperatorPoly& p,
                             std::size_t bound = kDefaultSymmetrizationBound);

/// normal_order(ab - ba).
OperatorPoly commutator_poly(const OperatorPoly& a, const OperatorPoly& b);

/// sum over the table of c_{nm} S{first^n second^m} / (n! m!) for n + m <= order_cap,
/// where c_{nm} is the mixed derivative of the classical function at the origin.
OperatorPoly taylor_operator(const std::map<std::pair<unsigned, unsigned>, HbarPoly>& table,
                             unsigned order_cap, Register reg = Register::xp,
                             std::size_t bound = kDefaultSymmetrizationBound);

/// Human-readable form in the expression grammar, e.g. "X P - i*hbar".
std::string to_string(const OperatorPoly& p);

}  // namespace qpb::weyl
