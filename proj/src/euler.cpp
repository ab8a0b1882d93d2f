#include "knarayana/euler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace knarayana {

EulerInput::EulerInput(Rational a, Rational b, Rational c, std::vector<Rational> f, std::vector<unsigned> m)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), f_(std::move(f)), m_(std::move(m)) {
  if (f_.size() != m_.size()) throw std::invalid_argument("f and m must have the same length");
  for (unsigned mi : m_)
    if (mi < 1) throw std::invalid_argument("multiplicities m_i must be >= 1");
  m_total_ = std::accumulate(m_.begin(), m_.end(), 0u);
  if (is_nonpositive_integer(c_)) throw std::invalid_argument("c must not be a nonpositive integer");
  for (const auto& fi : f_)
    if (is_nonpositive_integer(fi)) throw std::invalid_argument("f_i must not be a nonpositive integer");
  if (pochhammer(upper_first(), m_total_) == 0) throw std::invalid_argument("(c-a-m)_m vanishes");
  if (pochhammer(upper_second(), m_total_) == 0) throw std::invalid_argument("(c-b-m)_m vanishes");
  if (pochhammer(1 + a_ + b_ - c_, m_total_) == 0) throw std::invalid_argument("(1+a+b-c)_m vanishes");
}

HypergeometricSpec EulerInput::left_spec() const {
  std::vector<Rational> up{a_, b_}, low{c_};
  for (std::size_t i = 0; i < f_.size(); ++i) {
    up.emplace_back(f_[i] + m_[i]);
    low.push_back(f_[i]);
  }
  return HypergeometricSpec(std::move(up), std::move(low), 1);
}

Polynomial sigma_coeffs(const std::vector<Rational>& f, const std::vector<unsigned>& m) {
  if (f.size() != m.size()) throw std::invalid_argument("f and m must have the same length");
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 0; i < f.size(); ++i) p *= rising_factorial(Polynomial::linear(f[i], 1), m[i]);
  return p;
}

std::vector<Rational> a_coeffs(const Polynomial& sigma) {
  const int deg = std::max(sigma.degree(), 0);
  std::vector<std::vector<Integer>> stirling;
  for (int j = 0; j <= deg; ++j) stirling.push_back(stirling2_row(static_cast<unsigned long>(j)));
  std::vector<Rational> out(static_cast<std::size_t>(deg + 1), 0);
  for (int l = 0; l <= deg; ++l)
    for (int j = l; j <= deg; ++j) out[static_cast<std::size_t>(l)] += stirling[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] * sigma[static_cast<std::size_t>(j)];
  return out;
}

RationalFunction g_function(unsigned l, const EulerInput& in) {
  const unsigned m = in.m_total();
  if (l > m) throw std::invalid_argument("g_function index exceeds m");
  const unsigned n = m - l;  // the series terminates after n terms
  const Rational lb = 1 + in.b() + l - in.c();
  const Rational la = 1 + in.a() + l - in.c();

  // Put every term over the common denominator (lb - t)_n (la - t)_n.
  Polynomial numerator;
  Rational scalar = 1;  // (l-m)_i / i!
  for (unsigned i = 0; i <= n; ++i) {
    Polynomial term = rising_factorial(Polynomial::linear(l, -1), i);
    term *= rising_factorial(Polynomial::linear(1 - in.c(), -1), i);
    term *= rising_factorial(Polynomial::linear(lb + i, -1), n - i);
    term *= rising_factorial(Polynomial::linear(la + i, -1), n - i);
    numerator += term * scalar;
    scalar *= Rational(Rational(l) - m + i);
    scalar /= (i + 1);
  }
  Polynomial denominator = rising_factorial(Polynomial::linear(lb, -1), n);
  denominator *= rising_factorial(Polynomial::linear(la, -1), n);
  return RationalFunction(std::move(numerator), std::move(denominator));
}

Rational QPolynomial::root_product(unsigned j) const {
  const Rational q0 = poly(0);
  if (q0 == 0) throw VanishingAtZero("Q(0) = 0: the transform needs nonvanishing zeros");
  return poly(Rational(-static_cast<long>(j))) / q0;
}

QPolynomial q_polynomial(const EulerInput& in) {
  const unsigned m = in.m_total();
  const std::vector<Rational> A = a_coeffs(sigma_coeffs(in.f(), in.m()));
  const Polynomial t = Polynomial::linear(0, 1);

  RationalFunction total;
  for (unsigned l = 0; l <= m; ++l) {
    Rational scalar = A[l] * pochhammer(in.a(), l) * pochhammer(in.b(), l);
    if (l % 2 == 1) scalar = -scalar;
    if (scalar == 0) continue;
    Polynomial p = rising_factorial(t, l);
    p *= rising_factorial(Polynomial::linear(in.upper_first(), -1), m - l);
    p *= rising_factorial(Polynomial::linear(in.upper_second(), -1), m - l);
    p *= scalar;
    total += RationalFunction(std::move(p)) * g_function(l, in).reflect();
  }
  if (!total.is_polynomial())
    throw NonPolynomialRemainder("Q(t) did not reduce to a polynomial: " + total.to_string());
  Polynomial q = total.numerator();
  if (q.degree() > static_cast<int>(m)) throw NonPolynomialRemainder("Q(t) has degree above m");
  return QPolynomial{std::move(q), in};
}

EulerTransform::EulerTransform(EulerInput input) : q_(q_polynomial(input)) {}

Rational EulerTransform::coefficient(unsigned j) const {
  const EulerInput& in = q_.input;
  const Rational ratio = q_.root_product(j);
  Rational num = pochhammer(in.upper_first(), j) * pochhammer(in.upper_second(), j);
  if (num == 0) return 0;
  Rational den = pochhammer(in.c(), j) * Rational(factorial(j));
  return num / den * ratio;
}

TruncatedSeries EulerTransform::series(unsigned order) const {
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (unsigned j = 0; j <= order; ++j) c.push_back(coefficient(j));
  return TruncatedSeries(std::move(c));
}

Rational transformed_coefficient(const EulerInput& input, unsigned j) { return EulerTransform(input).coefficient(j); }

IdentityCheck verify_euler_identity(const EulerInput& input, unsigned order) {
  const TruncatedSeries lhs = input.left_spec().series(order);
  const TruncatedSeries rhs = series_scale_binomial_power(EulerTransform(input).series(order), input.power_exponent());
  IdentityCheck check;
  for (unsigned j = 0; j <= order; ++j) {
    if (lhs[j] != rhs[j]) {
      check.holds = false;
      check.first_mismatch = j;
      break;
    }
  }
  return check;
}

EulerInput random_euler_input(std::mt19937_64& rng, unsigned max_m_total) {
  auto small_rational = [&] {
    const long num = static_cast<long>(rng() % 25) - 12;
    const long den = static_cast<long>(rng() % 4) + 1;
    return make_rational(num, den);
  };
  for (;;) {
    const unsigned m_total = static_cast<unsigned>(rng() % (max_m_total + 1));
    std::vector<unsigned> m;
    for (unsigned left = m_total; left > 0;) {
      const unsigned part = static_cast<unsigned>(rng() % left) + 1;
      m.push_back(part);
      left -= part;
    }
    std::vector<Rational> f;
    for (std::size_t i = 0; i < m.size(); ++i) f.push_back(small_rational());
    try {
      EulerInput in(small_rational(), small_rational(), small_rational(), std::move(f), std::move(m));
      if (!q_polynomial(in).vanishes_at_zero()) return in;
    } catch (const std::invalid_argument&) {
      // rejected draw; sample again
    }
  }
}

EulerInput narayana_euler_input(int k, int r) {
  if (k < 2) throw std::invalid_argument("the Narayana Euler input needs k >= 2");
  if (k == 2 && r < 2) throw std::invalid_argument("the Narayana Euler input needs r >= 2 for k = 2");
  if (k >= 3 && r < 4) throw std::invalid_argument("the Narayana Euler input needs r >= 4 for k >= 3");
  std::vector<Rational> f;
  std::vector<unsigned> m;
  for (int i = 3; i <= k; ++i) {
    f.emplace_back(i);
    m.push_back(static_cast<unsigned>(r - 3));
  }
  return EulerInput(r + k - 2, r + k - 1, 2, std::move(f), std::move(m));
}

namespace {

std::shared_ptr<const EulerTransform> cached_narayana_transform(int k, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const EulerTransform>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({k, r}); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const EulerTransform>(narayana_euler_input(k, r));
  std::lock_guard lock(mutex);
  return cache.try_emplace({k, r}, std::move(built)).first->second;
}

using Complex = std::complex<long double>;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

Rational narayana_product_formula(int k, int r, unsigned j) { return cached_narayana_transform(k, r)->coefficient(j); }

std::vector<NumericRoot> numeric_roots(const QPolynomial& q) {
  const Polynomial& p = q.poly;
  const int d = p.degree();
  std::vector<NumericRoot> out;
  if (d < 1) return out;
  if (d == 1) {
    Rational root = -p[0] / p[1];
    out.push_back({std::complex<double>(root.get_d(), 0.0), 0.0, root});
    return out;
  }

  const Polynomial monic = p.monic();
  std::vector<Complex> c;
  long double scale = 0;
  for (const auto& x : monic.coefficients()) {
    c.emplace_back(static_cast<long double>(x.get_d()), 0.0L);
    scale = std::max(scale, std::abs(static_cast<long double>(x.get_d())));
  }

  // Durand-Kerner iteration from points on a circle of Cauchy-bound radius.
  const long double radius = 1 + scale;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    z[static_cast<std::size_t>(i)] = std::polar(radius, 0.4L + 2.0L * 3.14159265358979323846L * i / d);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= (z[i] - z[j]);
      Complex delta = horner(c, z[i]) / denom;
      z[i] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-20L * radius) break;
  }

  std::vector<Complex> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long double>(i));
  for (auto& zi : z) {
    for (int it = 0; it < 5; ++it) {
      Complex dv = horner(dc, zi);
      if (std::abs(dv) == 0) break;
      zi -= horner(c, zi) / dv;
    }
  }

  std::sort(z.begin(), z.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  for (const auto& zi : z) {
    NumericRoot root;
    root.value = std::complex<double>(static_cast<double>(zi.real()), static_cast<double>(zi.imag()));
    root.residual = static_cast<double>(std::abs(horner(c, zi)) / std::max<long double>(1, scale));
    if (std::abs(zi.imag()) < 1e-9L * (1 + std::abs(zi))) {
      for (long den = 1; den <= 12 && !root.exact; ++den) {
        Rational cand = make_rational(Integer(static_cast<long>(std::llround(zi.real() * den))), den);
        if (p(cand) == 0) root.exact = cand;
      }
      if (root.exact) root.value = {root.exact->get_d(), 0.0};
    }
    out.push_back(root);
  }
  return out;
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string format_root(const NumericRoot& r) {
  if (r.exact) return to_string(*r.exact);
  std::ostringstream os;
  os << format_double(r.value.real());
  if (r.value.imag() != 0) os << (r.value.imag() < 0 ? " - " : " + ") << format_double(std::abs(r.value.imag())) << "i";
  return os.str();
}

}  // namespace

std::string render_narayana_product_formula(int k, int r, bool latex) {
  auto transform = cached_narayana_transform(k, r);
  const EulerInput& in = transform->input();
  const Integer A = to_integer(-in.upper_first());
  const Integer B = to_integer(-in.upper_second());

  // Q(-j)/Q(0) as an exact polynomial in j.
  const Polynomial& q = transform->q().poly;
  Polynomial ratio = q.reflect() * Rational(1 / q(0));
  const auto roots = numeric_roots(transform->q());

  std::ostringstream os;
  const std::string lhs = "N_" + std::to_string(k) + "(" + std::to_string(r - 1) + ",j)";
  if (latex) {
    os << lhs << " = \\frac{1}{j+1}\\binom{" << A << "}{j}\\binom{" << B << "}{j}";
    for (const auto& root : roots) {
      const std::string eta = format_root(root);
      os << "\\left(1+\\frac{j}{" << eta << "}\\right)";
    }
    return os.str();
  }
  os << lhs << " = C(" << A << ",j) * C(" << B << ",j) / (j+1)";
  if (ratio.degree() > 0) os << " * (" << ratio.to_string("j") << ")";
  if (!roots.empty()) {
    os << "\n  = C(" << A << ",j) * C(" << B << ",j) / (j+1)";
    for (const auto& root : roots) os << " * (1 + j/(" << format_root(root) << "))";
  }
  return os.str();
}

}  // namespace knarayana
