#include "spschub/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "spschub/error.hpp"
#include "spschub/qbasis.hpp"
#include "spschub/symplectic.hpp"

namespace spschub {

namespace {

constexpr unsigned kMaxExponent = 255;

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  MultiPoly parse() {
    MultiPoly out = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { error_at(pos_, what); }

  [[noreturn]] void error_at(std::size_t pos, const std::string& what) const {
    fail(ErrorCode::Parse, "syntax error at position " + std::to_string(pos + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) error("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int small_integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    const bool negative = allow_sign && accept('-');
    const Integer v = integer();
    if (!v.fits_sint_p() || v > 1000) error_at(start, "number too large");
    const int out = static_cast<int>(v.get_si());
    return negative ? -out : out;
  }

  MultiPoly expr() {
    MultiPoly out = term();
    for (;;) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  MultiPoly term() {
    MultiPoly out = unary();
    while (accept('*')) out = out * unary();
    return out;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const MultiPoly e = unary();
    if (e.is_zero()) return MultiPoly::constant(n_, 1);
    if (e.degree() != 0 || e.size() != 1) error_at(at, "exponent must be a constant");
    const Integer k = e.terms().begin()->second;
    if (k < 0) error_at(at, "exponent must be nonnegative");
    if (k > kMaxExponent) error_at(at, "exponent too large");
    return base.pow(static_cast<unsigned>(k.get_ui()));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Integers separated by commas or blanks, up to the closing delimiter.
  std::vector<int> int_list(char close, bool allow_sign) {
    std::vector<int> out;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != close) {
      out.push_back(small_integer(allow_sign));
      accept(',');
      skip_space();
    }
    return out;
  }

  SignedPermutation permutation(std::vector<int> entries, std::size_t at) {
    if (static_cast<int>(entries.size()) > n_)
      error_at(at, "permutation has more than " + std::to_string(n_) + " entries");
    try {
      return embed(SignedPermutation(std::move(entries)), n_);
    } catch (const Error& e) {
      error_at(at, e.what());
    }
  }

  MultiPoly call(const std::string& name, std::size_t at) {
    expect('(');
    const std::size_t args_at = pos_;
    MultiPoly out;
    if (name == "e" || name == "e2") {
      const int k = small_integer(false);
      out = name == "e" ? elementary(k, n_) : elementary_squares(k, n_);
    } else if (name == "qtilde") {
      std::vector<int> parts = int_list(')', false);
      for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) error_at(args_at, "partition parts must be weakly decreasing");
      const Partition lambda(std::move(parts));
      if (lambda.largest() > n_) error_at(args_at, "partition part exceeds the rank");
      out = qtilde(lambda, n_);
    } else if (name == "schubA") {
      const auto w = permutation(int_list(')', false), args_at);
      if (!w.is_unsigned()) error_at(args_at, "schubA needs an unsigned permutation");
      out = schubert_a(w);
    } else if (name == "schubC") {
      out = schubert_c(permutation(int_list(')', true), args_at));
    } else {
      error_at(at, "unknown function '" + name + "'");
    }
    expect(')');
    return out;
  }

  MultiPoly bracket() {
    // C[ entries ] or C[ parts ; entries ]
    skip_space();
    const std::size_t inner = pos_;
    const std::size_t close = text_.find(']', inner);
    if (close == std::string_view::npos) error("expected ']'");
    const std::size_t semi = text_.find(';', inner);
    MultiPoly out;
    if (semi != std::string_view::npos && semi < close) {
      std::vector<int> parts;
      while (skip_space(), pos_ < semi) {
        parts.push_back(small_integer(false));
        accept(',');
      }
      pos_ = semi + 1;
      for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) error_at(inner, "partition parts must be weakly decreasing");
      const Partition lambda(std::move(parts));
      if (lambda.largest() > n_) error_at(inner, "partition part exceeds the rank");
      const auto pi = permutation(int_list(']', false), semi + 1);
      if (!pi.is_unsigned()) error_at(semi + 1, "the second index must be unsigned");
      out = c_pair(lambda, pi);
    } else {
      out = schubert_c(permutation(int_list(']', true), inner));
    }
    expect(']');
    return out;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(n_, integer());
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'x' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const Integer i = integer();
      if (i < 1 || i > n_) error_at(at, "unknown variable x" + i.get_str() + " (rank " +
                                            std::to_string(n_) + ")");
      return MultiPoly::variable(n_, static_cast<int>(i.get_si()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      if (name == "C") {
        expect('[');
        return bracket();
      }
      return call(name, at);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int n) {
  require(n >= 1 && n <= kMaxRank, "rank must be in 1.." + std::to_string(kMaxRank));
  return Parser(text, n).parse();
}

}  // namespace spschub
