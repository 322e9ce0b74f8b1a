#include "qpb/weyl/parser.hpp"

#include <cctype>
#include <optional>

#include "qpb/errors.hpp"

namespace qpb::weyl {
namespace {

enum class Tok {
  uint, letter, weyl_s, imag, hbar, plus, minus, star, slash, caret,
  lbrace, rbrace, lbracket, rbracket, comma, lparen, rparen, end
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::uint, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::islower(c)) {
      while (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) ++i;
      const std::string word(s.substr(start, i - start));
      if (word == "i") {
        out.push_back({Tok::imag, start, word});
      } else if (word == "hbar") {
        out.push_back({Tok::hbar, start, word});
      } else {
        throw ParseError(start, {"'i'", "'hbar'"}, "'" + word + "'");
      }
      continue;
    }
    // U+2212 MINUS SIGN
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({Tok::minus, start, "-"});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case 'X':
      case 'P':
      case 'H':
      case 'T': kind = Tok::letter; break;
      case 'S': kind = Tok::weyl_s; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(start, {"operator letter", "scalar", "'S{'", "'['", "'('"},
                         "'" + std::string(1, static_cast<char>(c)) + "'");
    }
    out.push_back({kind, start, std::string(1, static_cast<char>(c))});
    ++i;
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  AstPtr parse_all() {
    AstPtr e = expr();
    if (peek().kind != Tok::end) fail({"'+'", "'-'", "end of input"});
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), describe(peek()));
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail({what});
    return take();
  }

  static bool starts_atom(Tok k) {
    switch (k) {
      case Tok::letter:
      case Tok::weyl_s:
      case Tok::uint:
      case Tok::imag:
      case Tok::hbar:
      case Tok::lbracket:
      case Tok::lparen: return true;
      default: return false;
    }
  }

  AstPtr expr() {
    std::vector<std::pair<bool, AstPtr>> terms;
    const bool lead = accept(Tok::minus);
    terms.emplace_back(lead, term());
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool neg = take().kind == Tok::minus;
      terms.emplace_back(neg, term());
    }
    if (terms.size() == 1 && !terms.front().first) return terms.front().second;
    return make_sum(std::move(terms));
  }

  AstPtr term() {
    std::vector<AstPtr> factors{factor()};
    while (starts_atom(peek().kind)) factors.push_back(factor());
    if (factors.size() == 1) return factors.front();
    return make_product(std::move(factors));
  }

  AstPtr factor() {
    AstPtr a = atom();
    if (accept(Tok::caret)) a = make_power(std::move(a), uint_value());
    return a;
  }

  unsigned uint_value() {
    const Token& t = expect(Tok::uint, "unsigned integer");
    try {
      return static_cast<unsigned>(std::stoul(t.text));
    } catch (const std::exception&) {
      throw ParseError(t.pos, {"unsigned integer"}, "'" + t.text + "'");
    }
  }

  AstPtr atom() {
    switch (peek().kind) {
      case Tok::letter: {
        const Token& t = take();
        check_register(t);
        return make_symbol(t.text[0]);
      }
      case Tok::weyl_s: {
        take();
        expect(Tok::lbrace, "'{'");
        AstPtr body = expr();
        expect(Tok::rbrace, "'}'");
        return make_weyl(std::move(body));
      }
      case Tok::lbracket: {
        take();
        AstPtr l = expr();
        expect(Tok::comma, "','");
        AstPtr r = expr();
        expect(Tok::rbracket, "']'");
        return make_commutator(std::move(l), std::move(r));
      }
      case Tok::lparen: {
        take();
        AstPtr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::uint:
      case Tok::imag:
      case Tok::hbar: return scalar();
      default:
        fail({"'X'", "'P'", "'H'", "'T'", "scalar", "'S{'", "'['", "'('"});
    }
  }

  AstPtr scalar() {
    mpq_class value = 1;
    bool any = false, imaginary = false, star_pending = false;
    unsigned hbar_power = 0;
    if (peek().kind == Tok::uint) {
      const Token& num = take();
      mpz_class numerator(num.text);
      mpz_class denominator = 1;
      if (accept(Tok::slash)) {
        const Token& den = expect(Tok::uint, "denominator");
        denominator = mpz_class(den.text);
        if (denominator == 0) throw ParseError(den.pos, {"nonzero denominator"}, "'0'");
      }
      value = mpq_class(numerator, denominator);
      value.canonicalize();
      any = true;
      if (peek().kind == Tok::star &&
          (peek(1).kind == Tok::imag || peek(1).kind == Tok::hbar)) {
        take();
        star_pending = true;
      }
    }
    if (accept(Tok::imag)) {
      imaginary = true;
      any = true;
      star_pending = false;
      if (peek().kind == Tok::star && peek(1).kind == Tok::hbar) {
        take();
        star_pending = true;
      }
    }
    if (peek().kind == Tok::hbar && (star_pending || !any)) {
      take();
      hbar_power = 1;
      if (accept(Tok::caret)) hbar_power = uint_value();
      star_pending = false;
    }
    if (star_pending) fail({"'i'", "'hbar'"});
    return make_scalar(std::move(value), imaginary, hbar_power);
  }

  void check_register(const Token& t) {
    const Register r = register_of(t.text[0]);
    if (reg_ == Register::none) {
      reg_ = r;
    } else if (reg_ != r) {
      const std::string a(1, first_letter(reg_)), b(1, second_letter(reg_));
      throw ParseError(t.pos, {"'" + a + "'", "'" + b + "'"}, describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Register reg_ = Register::none;
};

template <class T>
const T* as(const Ast& a) {
  return std::get_if<T>(&a.value);
}

std::string wrap(const Ast& a) {
  return "(" + print(a) + ")";
}

}  // namespace

bool operator==(const Ast& a, const Ast& b) {
  if (a.value.index() != b.value.index()) return false;
  auto same = [](const AstPtr& x, const AstPtr& y) { return *x == *y; };
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, node::Symbol>) {
          return x.letter == y.letter;
        } else if constexpr (std::is_same_v<T, node::Scalar>) {
          return x.value == y.value && x.imaginary == y.imaginary && x.hbar_power == y.hbar_power;
        } else if constexpr (std::is_same_v<T, node::Sum>) {
          if (x.terms.size() != y.terms.size()) return false;
          for (std::size_t i = 0; i < x.terms.size(); ++i) {
            if (x.terms[i].first != y.terms[i].first || !same(x.terms[i].second, y.terms[i].second))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          if (x.factors.size() != y.factors.size()) return false;
          for (std::size_t i = 0; i < x.factors.size(); ++i)
            if (!same(x.factors[i], y.factors[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, node::Power>) {
          return x.exponent == y.exponent && same(x.base, y.base);
        } else if constexpr (std::is_same_v<T, node::Commutator>) {
          return same(x.left, y.left) && same(x.right, y.right);
        } else {
          return same(x.body, y.body);
        }
      },
      a.value);
}

AstPtr make_symbol(char letter) {
  register_of(letter);
  return std::make_shared<const Ast>(Ast{node::Symbol{letter}});
}

AstPtr make_scalar(mpq_class value, bool imaginary, unsigned hbar_power) {
  value.canonicalize();
  return std::make_shared<const Ast>(Ast{node::Scalar{std::move(value), imaginary, hbar_power}});
}

AstPtr make_sum(std::vector<std::pair<bool, AstPtr>> terms) {
  return std::make_shared<const Ast>(Ast{node::Sum{std::move(terms)}});
}

AstPtr make_product(std::vector<AstPtr> factors) {
  return std::make_shared<const Ast>(Ast{node::Product{std::move(factors)}});
}

AstPtr make_power(AstPtr base, unsigned exponent) {
  return std::make_shared<const Ast>(Ast{node::Power{std::move(base), exponent}});
}

AstPtr make_commutator(AstPtr left, AstPtr right) {
  return std::make_shared<const Ast>(Ast{node::Commutator{std::move(left), std::move(right)}});
}

AstPtr make_weyl(AstPtr body) {
  return std::make_shared<const Ast>(Ast{node::WeylS{std::move(body)}});
}

AstPtr parse(std::string_view text) {
  return Parser(tokenize(text)).parse_all();
}

std::string print(const Ast& ast) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Symbol>) {
          return std::string(1, x.letter);
        } else if constexpr (std::is_same_v<T, node::Scalar>) {
          return scalar_text(x.value, x.imaginary, x.hbar_power);
        } else if constexpr (std::is_same_v<T, node::Sum>) {
          std::string out;
          for (std::size_t i = 0; i < x.terms.size(); ++i) {
            const auto& [neg, t] = x.terms[i];
            const std::string text = as<node::Sum>(*t) ? wrap(*t) : print(*t);
            if (i == 0) {
              out = (neg ? "-" : "") + text;
            } else {
              out += (neg ? " - " : " + ") + text;
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          std::string out;
          for (std::size_t i = 0; i < x.factors.size(); ++i) {
            const Ast& f = *x.factors[i];
            // A scalar after another factor could fuse with it ("2 i"), so
            // only the leading factor may be a bare scalar.
            const bool parens = as<node::Sum>(f) || as<node::Product>(f) ||
                                (i > 0 && as<node::Scalar>(f));
            if (i > 0) out += ' ';
            out += parens ? wrap(f) : print(f);
          }
          return out;
        } else if constexpr (std::is_same_v<T, node::Power>) {
          const Ast& b = *x.base;
          const bool bare = as<node::Symbol>(b) || as<node::Commutator>(b) || as<node::WeylS>(b);
          return (bare ? print(b) : wrap(b)) + "^" + std::to_string(x.exponent);
        } else if constexpr (std::is_same_v<T, node::Commutator>) {
          return "[" + print(*x.left) + ", " + print(*x.right) + "]";
        } else {
          return "S{" + print(*x.body) + "}";
        }
      },
      ast.value);
}

OperatorPoly evaluate(const Ast& ast, std::size_t bound) {
  return std::visit(
      [&](const auto& x) -> OperatorPoly {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Symbol>) {
          return OperatorPoly::letter(x.letter);
        } else if constexpr (std::is_same_v<T, node::Scalar>) {
          const GaussRational c = x.imaginary ? GaussRational(0, x.value) : GaussRational(x.value);
          return OperatorPoly::scalar(HbarPoly(c, x.hbar_power));
        } else if constexpr (std::is_same_v<T, node::Sum>) {
          OperatorPoly out;
          for (const auto& [neg, t] : x.terms) {
            if (neg) {
              out -= evaluate(*t, bound);
            } else {
              out += evaluate(*t, bound);
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          OperatorPoly out = OperatorPoly::scalar(HbarPoly(1));
          for (const auto& f : x.factors) out = out * evaluate(*f, bound);
          return out;
        } else if constexpr (std::is_same_v<T, node::Power>) {
          const OperatorPoly base = evaluate(*x.base, bound);
          OperatorPoly out = OperatorPoly::scalar(HbarPoly(1));
          for (unsigned k = 0; k < x.exponent; ++k) out = out * base;
          return out;
        } else if constexpr (std::is_same_v<T, node::Commutator>) {
          const OperatorPoly a = evaluate(*x.left, bound);
          const OperatorPoly b = evaluate(*x.right, bound);
          return a * b - b * a;
        } else {
          return weyl_symmetrize(evaluate(*x.body, bound), bound);
        }
      },
      ast.value);
}

}  // namespace qpb::weyl
