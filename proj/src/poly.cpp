#include "sympl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "sympl/error.hpp"

namespace sympl {
namespace {

std::tuple<int, long, std::string_view> symbol_rank(std::string_view s) {
  if (s == "Q") return {0, 0, ""};
  if (s == "T") return {1, 0, ""};
  if (s.size() > 1 && s[0] == 'b' &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      s.size() < 12) {
    return {2, std::stol(std::string(s.substr(1))), ""};
  }
  if (s == "X") return {3, 0, ""};
  return {4, 0, s};
}

}  // namespace

bool symbol_less(std::string_view a, std::string_view b) { return symbol_rank(a) < symbol_rank(b); }

Monomial Monomial::symbol(std::string name, int exponent) {
  Monomial m;
  if (exponent != 0) m.powers_.emplace_back(std::move(name), exponent);
  return m;
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [s, e] : powers_) {
    if (s == name) return e;
  }
  return 0;
}

void Monomial::normalize() {
  std::sort(powers_.begin(), powers_.end(), [](const auto& a, const auto& b) { return symbol_less(a.first, b.first); });
  std::vector<std::pair<std::string, int>> merged;
  for (auto& p : powers_) {
    if (!merged.empty() && merged.back().first == p.first) {
      merged.back().second += p.second;
    } else {
      merged.push_back(std::move(p));
    }
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  powers_ = std::move(merged);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  out.powers_.insert(out.powers_.end(), other.powers_.begin(), other.powers_.end());
  out.normalize();
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial out = *this;
  for (auto& p : out.powers_) p.second *= k;
  out.normalize();
  return out;
}

Monomial Monomial::invert_symbol(std::string_view name) const {
  Monomial out = *this;
  for (auto& p : out.powers_) {
    if (p.first == name) p.second = -p.second;
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [s, e] : powers_) {
    if (!out.empty()) out += "*";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto& x = a.powers_;
  const auto& y = b.powers_;
  for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k) {
    if (x[k].first != y[k].first) return symbol_less(x[k].first, y[k].first);
    if (x[k].second != y[k].second) return x[k].second < y[k].second;
  }
  return x.size() < y.size();
}

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(Monomial(), constant); }

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& coefficient) { add_term(m, coefficient); }

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational LaurentPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> LaurentPoly::generators() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m.powers()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return symbol_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out(1L);
  for (unsigned j = 0; j < k; ++j) out *= *this;
  return out;
}

LaurentPoly LaurentPoly::invert_symbol(std::string_view name) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.invert_symbol(name), c);
  return out;
}

namespace {

Rational power(const Rational& base, int e) {
  Rational out = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (int k = 0; k < std::abs(e); ++k) out *= b;
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::substitute(const std::map<std::string, Rational>& values) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    Rational coefficient = c;
    Monomial rest;
    for (const auto& [s, e] : m.powers()) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest = rest * Monomial::symbol(s, e);
        continue;
      }
      if (it->second == 0 && e < 0) throw Error(Errc::PoleAtPoint, "negative power of " + s + " at 0");
      coefficient *= power(it->second, e);
    }
    out.add_term(rest, coefficient);
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [s, e] : m.powers()) {
      auto it = assignment.find(s);
      if (it == assignment.end()) throw Error(Errc::MissingAssignment, "no value assigned to " + s);
      if (it->second == 0 && e < 0) throw Error(Errc::PoleAtPoint, "negative power of " + s + " at 0");
      term *= power(it->second, e);
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += m.to_string();
    } else {
      out += magnitude.get_str() + "*" + m.to_string();
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, "polynomial '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly out = term();
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly out = unary();
    while (true) {
      if (accept('*')) {
        out *= unary();
      } else if (accept('/')) {
        out *= reciprocal(unary());
      } else {
        return out;
      }
    }
  }

  LaurentPoly reciprocal(const LaurentPoly& p) {
    if (p.size() != 1) fail("division is only defined by a single nonzero term");
    const auto& [m, c] = *p.terms().begin();
    return LaurentPoly(m.inverse(), Rational(1 / c));
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer");
    const unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    return negative ? reciprocal(base).pow(k) : base.pow(k);
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return LaurentPoly::symbol(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace sympl
