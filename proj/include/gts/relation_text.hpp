#pragma once

#include "gts/classifier.hpp"

#include <cctype>
#include <string>

namespace gts {

namespace detail {

/// Recursive-descent parser for relation strings in the table notation:
/// sums of implicit products, variables x,y,z,w (or x1..xn), exponents
/// written ^5 or ^{13}, parenthesized subexpressions.
class RelationParser {
 public:
  RelationParser(const std::string& text, std::size_t n) : s_(text), n_(n) {}

  GenPoly parse() {
    GenPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    p.normalize();
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("relation parse error at position " + std::to_string(pos_) +
                                ": " + why + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::int64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  std::int64_t exponent() {
    if (!eat('^')) return 1;
    if (eat('{')) {
      std::int64_t e = number();
      if (!eat('}')) fail("expected '}'");
      return e;
    }
    return number();
  }

  static GenPoly constant(std::size_t n, const Int& c) {
    GenPoly p;
    p.terms.push_back({c, std::vector<std::int64_t>(n, 0)});
    return p;
  }

  static GenPoly multiply(const GenPoly& a, const GenPoly& b) {
    GenPoly out;
    for (const auto& ta : a.terms)
      for (const auto& tb : b.terms) {
        GenPoly::Term t;
        t.coeff = ta.coeff * tb.coeff;
        t.exps = ta.exps;
        for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] += tb.exps[i];
        out.terms.push_back(std::move(t));
      }
    out.normalize();
    return out;
  }

  static GenPoly power(const GenPoly& a, std::int64_t e) {
    GenPoly out = constant(a.terms.empty() ? 0 : a.terms[0].exps.size(), 1);
    for (std::int64_t i = 0; i < e; ++i) out = multiply(out, a);
    return out;
  }

  std::size_t variable_index() {
    char c = peek();
    if (n_ == 4) {
      static const std::string letters = "xyzw";
      auto at = letters.find(c);
      if (at == std::string::npos) fail("expected one of x,y,z,w");
      ++pos_;
      return at;
    }
    if (c != 'x') fail("expected x<k>");
    ++pos_;
    std::int64_t k = number();
    if (k < 1 || static_cast<std::size_t>(k) > n_) fail("variable index out of range");
    return static_cast<std::size_t>(k - 1);
  }

  GenPoly factor() {
    char c = peek();
    if (c == '(') {
      eat('(');
      GenPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return power(inner, exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(n_, Int(number()));
    std::size_t v = variable_index();
    std::int64_t e = exponent();
    GenPoly p;
    GenPoly::Term t;
    t.coeff = 1;
    t.exps.assign(n_, 0);
    t.exps[v] = e;
    p.terms.push_back(std::move(t));
    return p;
  }

  GenPoly term() {
    GenPoly p = factor();
    for (;;) {
      char c = peek();
      if (c == '(' || c == 'x' || (n_ == 4 && (c == 'y' || c == 'z' || c == 'w')) ||
          std::isdigit(static_cast<unsigned char>(c)))
        p = multiply(p, factor());
      else
        return p;
    }
  }

  GenPoly expr() {
    bool neg = eat('-');
    GenPoly p = term();
    if (neg)
      for (auto& t : p.terms) t.coeff = -t.coeff;
    for (;;) {
      if (eat('+')) {
        GenPoly q = term();
        for (auto& t : q.terms) p.terms.push_back(t);
      } else if (eat('-')) {
        GenPoly q = term();
        for (auto& t : q.terms) p.terms.push_back({-t.coeff, t.exps});
      } else {
        p.normalize();
        return p;
      }
    }
  }

  const std::string& s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GenPoly parse_relation(const std::string& text, std::size_t n) {
  return detail::RelationParser(text, n).parse();
}

}  // namespace gts
