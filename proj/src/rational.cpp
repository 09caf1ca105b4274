#include "sympl/rational.hpp"

#include <cctype>
#include <limits>

#include "sympl/error.hpp"

namespace sympl {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error(Errc::Parse, "not a rational number: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (q == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += values[k].get_str();
  }
  return out + ")";
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) throw Error(Errc::NonIntegral, to_string(value) + " is not an integer");
  const mpz_class& z = value.get_num();
  if (z < std::numeric_limits<std::int64_t>::min() || z > std::numeric_limits<std::int64_t>::max()) {
    throw Error(Errc::InvalidArgument, to_string(value) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

int parity(const Rational& value) {
  if (!is_integer(value)) throw Error(Errc::NonIntegral, to_string(value) + " is not an integer");
  return mpz_odd_p(value.get_num_mpz_t()) ? 1 : 0;
}

}  // namespace sympl
