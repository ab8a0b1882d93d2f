#include "knarayana/exact.hpp"

#include <stdexcept>

namespace knarayana {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0)
      throw std::invalid_argument("not a rational number: '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Integer& v) { return v.get_str(10); }
std::string to_string(const Rational& v) { return v.get_str(10); }

bool is_integer(const Rational& v) { return v.get_den() == 1; }

Integer to_integer(const Rational& v) {
  if (!is_integer(v)) throw std::logic_error("expected an integer, got " + to_string(v));
  return v.get_num();
}

bool is_nonpositive_integer(const Rational& v) { return is_integer(v) && v <= 0; }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(const Integer& n, const Integer& k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (!k.fits_ulong_p()) throw std::overflow_error("binomial lower index too large");
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

Integer binomial(long n, long k) { return binomial(Integer(n), Integer(k)); }

Rational binomial(const Rational& e, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (e - i);
  r /= Rational(factorial(static_cast<unsigned long>(k)));
  return r;
}

Integer multiset(const Integer& a, const Integer& b) {
  if (b < 0) throw std::domain_error("multiset coefficient with negative selection size");
  return binomial(Integer(a + b - 1), b);
}

Integer multiset(long a, long b) { return multiset(Integer(a), Integer(b)); }

Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= (a + i);
    if (r == 0) break;
  }
  return r;
}

std::vector<Integer> stirling2_row(unsigned long n) {
  std::vector<Integer> row{1};
  for (unsigned long m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (unsigned long k = 1; k <= m; ++k) {
      if (k < m) next[k] = k * row[k];
      next[k] += row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

Integer stirling2(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  return stirling2_row(n)[k];
}

}  // namespace knarayana
