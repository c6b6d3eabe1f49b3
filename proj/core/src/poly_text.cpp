#include <algorithm>
#include <cctype>

#include "frobw2/poly.hpp"

namespace frobw2 {

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < nvars; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

std::string to_string(const Poly& f, std::span<const std::string> names) {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_names(f.nvars());
    names = fallback;
  }
  if (names.size() != f.nvars()) raise(ErrorKind::ShapeError, "one name per variable required");
  if (f.is_zero()) return "0";
  const CoeffRing& r = f.ring();
  std::string out;
  const auto terms = f.raw_terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Monomial m = Monomial::from_key(it->key, f.nvars());
    std::string monomial;
    for (std::size_t j = 0; j < f.nvars(); ++j) {
      if (m[j] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += names[j];
      if (m[j] != 1) monomial += "^" + std::to_string(m[j]);
    }
    std::string term;
    if (monomial.empty()) {
      term = r.format(it->coeff);
    } else if (it->coeff == r.one()) {
      term = monomial;
    } else {
      term = r.format(it->coeff) + "*" + monomial;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const CoeffRing& ring, std::span<const std::string> names)
      : s_(text), ring_(ring), names_(names) {}

  Poly parse_all() {
    Poly f = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                     std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::size_t nvars() const { return names_.size(); }

  Poly sum() {
    Poly acc(ring_, nvars());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      Poly t = product();
      acc += negate ? -t : t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return acc;
  }

  Poly product() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
        continue;
      }
      skip_ws();
      if (pos_ < s_.size() && starts_factor(s_[pos_])) {
        acc *= factor();
        continue;
      }
      return acc;
    }
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  bool at_witt_tuple() const {
    std::size_t i = pos_ + 1;
    auto digits = [&] {
      while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
      const std::size_t start = i;
      while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) ++i;
      while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
      return i > start;
    };
    if (!digits() || i >= s_.size() || s_[i] != ',') return false;
    ++i;
    return digits() && i < s_.size() && s_[i] == ')';
  }

  int exponent() {
    if (!accept('^')) return 1;
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  Poly power(const Poly& base, int e) {
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    return invert_unit(base).pow(static_cast<unsigned>(-e));
  }

  Poly factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      if (at_witt_tuple()) {
        const std::size_t close = s_.find(')', pos_);
        const auto code = ring_.parse(s_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
        return Poly::constant(ring_, nvars(), code);
      }
      ++pos_;
      Poly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return power(inner, exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const auto code = ring_.parse(s_.substr(start, pos_ - start));
      return power(Poly::constant(ring_, nvars(), code), exponent());
    }
    // Longest variable name matching here.
    std::size_t best = names_.size();
    std::size_t best_len = 0;
    for (std::size_t j = 0; j < names_.size(); ++j) {
      const auto& n = names_[j];
      if (n.size() > best_len && s_.substr(pos_, n.size()) == n) {
        best = j;
        best_len = n.size();
      }
    }
    if (best == names_.size()) fail("unknown variable");
    pos_ += best_len;
    const int e = exponent();
    if (e > kMaxExponent || e < -kMaxExponent) fail("exponent out of range");
    return Poly::monomial(ring_, Monomial::variable(nvars(), best, e), ring_.one());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const CoeffRing& ring_;
  std::span<const std::string> names_;
};

}  // namespace

Poly parse_poly(std::string_view text, const CoeffRing& ring,
                std::span<const std::string> names) {
  if (names.size() > kMaxVars) raise(ErrorKind::ShapeError, "too many variables");
  return Parser(text, ring, names).parse_all();
}

Poly parse_poly(std::string_view text, const CoeffRing& ring, std::size_t nvars) {
  const auto names = default_names(nvars);
  return parse_poly(text, ring, names);
}

}  // namespace frobw2
