#pragma once

// Exact scalars and combinatorial primitives.
//
// Integer and Rational are GMP's C++ classes. mpq_class keeps every value in
// lowest terms with a positive denominator, which is the only invariant the
// rest of the library relies on.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace knarayana {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

bool is_integer(const Rational& v);
/// Numerator of an integral rational; throws std::logic_error otherwise.
Integer to_integer(const Rational& v);

/// True when v is an integer <= 0.
bool is_nonpositive_integer(const Rational& v);

Integer factorial(unsigned long n);

/// Generalized binomial n(n-1)...(n-k+1)/k!. Defined for every integer n;
/// zero whenever k < 0.
Integer binomial(const Integer& n, const Integer& k);
Integer binomial(long n, long k);

/// Binomial with a rational upper argument, e.g. for (1-t)^e with rational e.
Rational binomial(const Rational& e, long k);

/// C(a+b-1, b), the number of b-element multisets from an a-set.
/// Throws std::domain_error for b < 0.
Integer multiset(const Integer& a, const Integer& b);
Integer multiset(long a, long b);

/// Rising factorial a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned long k);

/// Stirling numbers of the second kind.
Integer stirling2(unsigned long n, unsigned long k);

/// Row n of the Stirling table, S(n,0..n).
std::vector<Integer> stirling2_row(unsigned long n);

}  // namespace knarayana
