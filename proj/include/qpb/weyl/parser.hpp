#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpb/weyl/operator_poly.hpp"

namespace qpb::weyl {

// Expression grammar (whitespace between tokens is ignored):
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor factor*              juxtaposition, noncommutative
//   factor := atom ('^' UINT)?
//   atom   := 'X' | 'P' | 'H' | 'T' | scalar | 'S{' expr '}'
//           | '[' expr ',' expr ']' | '(' expr ')'
//   scalar := rational ('*')? ('i')? ('*' 'hbar' ('^' UINT)?)?
//
// e.g. 1/2, i*hbar, 3*i*hbar^2. The rational may be omitted when 'i' or
// 'hbar' is present. U+2212 is accepted as '-'.

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

namespace node {
struct Symbol {
  char letter;
};
struct Scalar {
  mpq_class value;
  bool imaginary = false;
  unsigned hbar_power = 0;
};
struct Sum {
  // (negated, term)
  std::vector<std::pair<bool, AstPtr>> terms;
};
struct Product {
  std::vector<AstPtr> factors;
};
struct Power {
  AstPtr base;
  unsigned exponent;
};
struct Commutator {
  AstPtr left;
  AstPtr right;
};
struct WeylS {
  AstPtr body;
};
}  // namespace node

struct Ast {
  std::variant<node::Symbol, node::Scalar, node::Sum, node::Product, node::Power,
               node::Commutator, node::WeylS>
      value;
};

bool operator==(const Ast& a, const Ast& b);

AstPtr make_symbol(char letter);
AstPtr make_scalar(mpq_class value, bool imaginary = false, unsigned hbar_power = 0);
AstPtr make_sum(std::vector<std::pair<bool, AstPtr>> terms);
AstPtr make_product(std::vector<AstPtr> factors);
AstPtr make_power(AstPtr base, unsigned exponent);
AstPtr make_commutator(AstPtr left, AstPtr right);
AstPtr make_weyl(AstPtr body);

/// Throws ParseError carrying the byte offset and the expected-token set.
AstPtr parse(std::string_view text);

/// Canonical text; parse(print(a)) == a.
std::string print(const Ast& ast);

/// Exact value of the expression (not normal ordered).
OperatorPoly evaluate(const Ast& ast, std::size_t symmetrization_bound = kDefaultSymmetrizationBound);

}  // namespace qpb::weyl
