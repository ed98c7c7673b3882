#include "polygf/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

namespace polygf {

namespace {

class Parser {
 public:
  Parser(const std::string& s, std::optional<Complex> tau) : s_(s), tau_(tau) {}

  Complex run() {
    Complex v = sum();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail("value is not finite");
    return v;
  }

 private:
  const std::string& s_;
  std::optional<Complex> tau_;
  std::size_t p_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("cannot parse '" + s_ + "': " + what);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  bool starts_primary() {
    skip();
    if (p_ >= s_.size()) return false;
    char c = s_[p_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  Complex sum() {
    Complex v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }
  Complex product() {
    Complex v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Complex d = unary();
        if (d == Complex(0)) fail("division by zero");
        v /= d;
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }
  Complex unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Complex power() {
    Complex b = primary();
    if (eat('^')) {
      Complex e = unary();
      if (e.imag() == 0 && e.real() == std::round(e.real()) && std::abs(e.real()) < 64) {
        Complex r = 1;
        int n = static_cast<int>(std::abs(e.real()));
        for (int k = 0; k < n; ++k) r *= b;
        return e.real() < 0 ? Complex(1) / r : r;
      }
      return std::pow(b, e);
    }
    return b;
  }
  Complex primary() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end");
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      Complex v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t q = p_;
      while (q < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[q])) || s_[q] == '.')) ++q;
      if (q < s_.size() && (s_[q] == 'e' || s_[q] == 'E')) {
        std::size_t r = q + 1;
        if (r < s_.size() && (s_[r] == '+' || s_[r] == '-')) ++r;
        if (r < s_.size() && std::isdigit(static_cast<unsigned char>(s_[r]))) {
          q = r;
          while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        }
      }
      double x = 0;
      auto res = std::from_chars(s_.data() + p_, s_.data() + q, x);
      if (res.ec != std::errc() || res.ptr != s_.data() + q) fail("bad number");
      p_ = q;
      return Complex(Real(x), 0);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t q = p_;
      while (q < s_.size() && std::isalpha(static_cast<unsigned char>(s_[q]))) ++q;
      std::string id = s_.substr(p_, q - p_);
      // allow "tau" glued to "i" etc. by splitting known names greedily
      std::size_t used = 0;
      Complex v = 1;
      while (used < id.size()) {
        if (id.compare(used, 3, "tau") == 0) {
          if (!tau_) fail("tau is not available here");
          v *= *tau_;
          used += 3;
        } else if (id.compare(used, 2, "pi") == 0) {
          v *= pi;
          used += 2;
        } else if (id[used] == 'i' || id[used] == 'I') {
          v *= I;
          used += 1;
        } else {
          fail("unknown identifier '" + id + "'");
        }
      }
      p_ = q;
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Complex parse_complex(const std::string& text) { return Parser(text, std::nullopt).run(); }

Complex parse_complex(const std::string& text, Complex tau) { return Parser(text, tau).run(); }

}  // namespace polygf
