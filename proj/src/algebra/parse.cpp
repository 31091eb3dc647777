#include "cpx/algebra/parse.hpp"

#include "cpx/errors.hpp"

#include <cctype>
#include <string>

namespace cpx {

namespace {

class Reader {
 public:
  Reader(std::string_view text, char var) : var_(var) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  IntLaurent run() {
    if (s_.empty()) fail("empty input");
    IntLaurent acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = s_[pos_++] == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected + or -");
      }
      acc += term() * Int(sign);
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  Int number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Int(s_.substr(start, pos_ - start));
  }

  IntLaurent term() {
    Int c = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_number = true;
      if (peek() == '*') {
        ++pos_;
      } else {
        return IntLaurent(c);
      }
    }
    if (peek() != var_) fail(have_number ? "expected the variable after *" : "expected a term");
    ++pos_;
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      }
      e = sign * static_cast<int>(number());
    }
    return IntLaurent::monomial(c, e);
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

IntLaurent parse_laurent(std::string_view text, char var) { return Reader(text, var).run(); }

ZPoly parse_zpoly(std::string_view text, char var) {
  IntLaurent p = parse_laurent(text, var);
  if (!p.is_zero() && p.low() < 0) throw Error(Errc::ParseError, "negative exponent in a polynomial");
  auto [s, poly] = p.split();
  return poly * ZPoly::monomial(1, s);
}

}  // namespace cpx
