#include "kwise/rational.hpp"

#include <cctype>

#include "kwise/errors.hpp"

namespace kwise {
namespace {

bool is_canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return s.size() == 1 || s.front() != '0';
}

[[noreturn]] void reject(std::string_view text) {
  throw Error(ErrorKind::invalid_input,
              "not a canonical exact number: \"" + std::string(text) + "\"");
}

}  // namespace

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!is_canonical_digits(num)) reject(text);
  if (negative && num == "0") reject(text);

  Integer p(std::string(num), 10);
  if (negative) p = -p;
  if (slash == std::string_view::npos) return Rational(p);

  const std::string_view den = body.substr(slash + 1);
  if (!is_canonical_digits(den)) reject(text);
  Integer q(std::string(den), 10);
  if (q <= 1 || p == 0) reject(text);
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) reject(text);
  return Rational(p, q);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace kwise
