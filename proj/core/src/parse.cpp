#include "cubiclab/parse.hpp"

#include <cctype>
#include <string>

#include "cubiclab/error.hpp"

namespace cubiclab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t base)
      : text_(text), ring_(ring), base_(base) {}

  Polynomial run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      first = false;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Term term() {
    Scalar coeff = Scalar::one(ring_->field());
    std::vector<int> exps(ring_->arity(), 0);
    while (true) {
      skip_space();
      if (at_end()) fail("expected coefficient or variable");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = integer();
        mpz_class den = 1;
        skip_space();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_space();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected denominator");
          }
          den = integer();
          if (den == 0) fail("division by zero");
        }
        coeff *= Scalar::fraction(num, den, ring_->field());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto index = ring_->variable_index(name);
        if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", base_ + start);
        long e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          const std::size_t exp_pos = pos_;
          const mpz_class v = integer();
          if (v > kMaxExponent) throw ParseError("exponent too large", base_ + exp_pos);
          e = v.get_si();
        }
        exps[*index] += static_cast<int>(e);
        if (exps[*index] > kMaxExponent) fail("exponent too large");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
    }
    return {Monomial::from_exponents(exps), coeff};
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, 0).run();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(",\n#", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view entry = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < entry.size() && std::isspace(static_cast<unsigned char>(entry[lead]))) ++lead;
    if (lead < entry.size()) out.push_back(Parser(entry.substr(lead), ring, start + lead).run());
    if (end < text.size() && text[end] == '#') {
      end = text.find('\n', end);
      if (end == std::string_view::npos) break;
    }
    start = end + 1;
  }
  return out;
}

}  // namespace cubiclab
