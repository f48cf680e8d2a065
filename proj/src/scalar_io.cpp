#include "hopfcoh/scalar_io.hpp"

#include "lexer.hpp"

namespace hopfcoh {
namespace detail {

namespace {

// term := rational ['*' zetapow] | zetapow ;  rational := int ['/' int]
CycNum parse_term(Lexer& lex) {
  Rational coeff(1);
  bool have_coeff = false;
  if (lex.kind() == Lexer::Kind::Int) {
    long num = static_cast<long>(lex.int_value());
    lex.advance();
    Rational r(num);
    if (lex.accept_punct('/')) {
      if (lex.kind() != Lexer::Kind::Int) lex.fail("expected denominator");
      long den = static_cast<long>(lex.int_value());
      if (den == 0) lex.fail("zero denominator");
      lex.advance();
      r = Rational(num) / Rational(den);
    }
    coeff = r;
    have_coeff = true;
    if (!lex.accept_punct('*')) return CycNum::from_rational(coeff);
  }
  if (lex.kind() != Lexer::Kind::Ident || lex.ident() != "zeta")
    lex.fail(have_coeff ? "expected zeta(...) after '*'" : "expected number or zeta(...)");
  lex.advance();
  lex.expect_punct('(');
  long long order = lex.expect_int();
  if (order < 1) lex.fail("zeta order must be positive");
  lex.expect_punct(')');
  long long power = 1;
  if (lex.accept_punct('^')) power = lex.expect_int();
  CycNum z = CycNum::root_of_unity(static_cast<unsigned long>(order), power);
  return CycNum::from_rational(coeff) * z;
}

}  // namespace

CycNum parse_scalar_tokens(Lexer& lex) {
  bool neg = lex.accept_punct('-');
  CycNum acc = parse_term(lex);
  if (neg) acc = -acc;
  while (true) {
    if (lex.accept_punct('+')) {
      acc = acc + parse_term(lex);
    } else if (lex.accept_punct('-')) {
      acc = acc - parse_term(lex);
    } else {
      return acc;
    }
  }
}

}  // namespace detail

CycNum parse_scalar(std::string_view text) {
  detail::Lexer lex(text);
  CycNum v = detail::parse_scalar_tokens(lex);
  if (lex.kind() != detail::Lexer::Kind::End) lex.fail("trailing input after scalar");
  return v;
}

}  // namespace hopfcoh
