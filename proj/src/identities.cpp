#include "knarayana/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "knarayana/euler.hpp"
#include "knarayana/grassmann.hpp"
#include "knarayana/hypergeom.hpp"
#include "knarayana/narayana.hpp"
#include "knarayana/pathcount.hpp"

namespace knarayana {

const char* to_string(IdentityGroup g) {
  switch (g) {
    case IdentityGroup::narayana: return "narayana";
    case IdentityGroup::hypergeometric: return "hypergeometric";
    case IdentityGroup::euler: return "euler";
    case IdentityGroup::grassmann: return "grassmann";
    case IdentityGroup::oracle: return "oracle";
  }
  return "?";
}

namespace {

class Recorder {
 public:
  explicit Recorder(IdentityResult& out) : out_(out) {}

  // `describe` is only called for the first failure.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++out_.cases;
    if (!ok && out_.passed) {
      out_.passed = false;
      out_.counterexample = describe();
    }
  }

 private:
  IdentityResult& out_;
};

std::string tuple_text(const std::vector<int>& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string kr(int k, int r) { return "k=" + std::to_string(k) + " r=" + std::to_string(r); }
std::string krj(int k, int r, int j) { return kr(k, r) + " j=" + std::to_string(j); }

std::string mismatch(const std::string& where, const Integer& lhs, const Integer& rhs) {
  return where + ": " + to_string(lhs) + " != " + to_string(rhs);
}
std::string mismatch(const std::string& where, const Rational& lhs, const Rational& rhs) {
  return where + ": " + to_string(lhs) + " != " + to_string(rhs);
}

using Check = std::function<void(const IdentityGrid&, Recorder&)>;

struct Entry {
  const char* name;
  IdentityGroup group;
  Check run;
};

// All strictly increasing tuples of length len with entries in [1, top].
void for_each_increasing(int len, int top, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(len));
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == len) return f(a);
    for (int v = lo; v <= top - (len - pos - 1); ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
}

// All nonincreasing tuples of length len with entries in [1, top].
void for_each_nonincreasing(int len, int top, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(len));
  std::function<void(int, int)> rec = [&](int pos, int hi) {
    if (pos == len) return f(a);
    for (int v = 1; v <= hi; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, top);
}

std::vector<int> repeated(int value, int count) { return std::vector<int>(static_cast<std::size_t>(count), value); }

// ---- Narayana families --------------------------------------------------

void multiset_is_square_bracket(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r)
      for (int j = 0; j <= g.j_max; ++j) {
        const Integer lhs = multiset_narayana(k, r, j);
        const Integer rhs = square_bracket(repeated(r, k), j);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
}

void square_bracket_swap(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r)
      for (int j = 0; j <= g.j_max; ++j) {
        const Integer lhs = square_bracket(repeated(r, k), j);
        const Integer rhs = square_bracket(repeated(j + 1, k), r - 1);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
}

void square_is_curly_bracket(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r)
      for (int j = 0; j <= g.j_max; ++j) {
        const Integer lhs = square_bracket(repeated(r, k), j);
        const Integer rhs = curly_bracket(repeated(r + k - 1, k), j);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
}

void curly_forms_agree(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for_each_increasing(k, 8, [&](const std::vector<int>& a) {
      for (int j = 0; j <= g.j_max; ++j) {
        const Integer lhs = curly_bracket(a, j, CurlyForm::form1);
        const Integer rhs = curly_bracket(a, j, CurlyForm::form2);
        rec.expect(lhs == rhs, [&] { return mismatch(tuple_text(a) + " j=" + std::to_string(j), lhs, rhs); });
      }
    });
}

void round_bracket_is_simple_product(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r)
      for (int j = 0; j <= g.j_max; ++j) {
        const Integer lhs = round_bracket(repeated(r + 1, k), j);
        const Integer rhs = simple_narayana_product(k, r, j);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
}

void multiset_from_simple(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r)
      for (int j = 0; j <= g.j_max; ++j) {
        const Integer lhs = multiset_narayana(k, r, j);
        const Integer rhs = simple_narayana_product(k, r + j - 1, j);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
}

void multiset_from_sulanke(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const std::vector<Integer> row = narayana_row(k, r - 1);
      const long top = static_cast<long>(k) * (r - 1);
      for (int j = 0; j <= g.j_max; ++j) {
        Integer rhs = 0;
        for (int l = 0; l <= j && l < static_cast<int>(row.size()); ++l)
          rhs += binomial(top + j - l, top) * row[static_cast<std::size_t>(l)];
        const Integer lhs = multiset_narayana(k, r, j);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
    }
}

void sulanke_from_multiset(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r)
      for (int j = 0; j <= g.j_max; ++j) {
        Integer rhs = 0;
        for (int l = 0; l <= j; ++l) {
          Integer term = binomial(static_cast<long>(k) * r + 1, j - l) * multiset_narayana(k, r + 1, l);
          if ((j - l) % 2 == 0) rhs += term; else rhs -= term;
        }
        const Integer lhs = sulanke_narayana(k, r, j);
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
}

void series_numerator(const IdentityGrid& g, Recorder& rec) {
  const unsigned order = static_cast<unsigned>(g.j_max);
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const TruncatedSeries lhs =
          series_scale_binomial_power(multiset_series(k, r, order), Integer(static_cast<long>(k) * (r - 1) + 1));
      const TruncatedSeries rhs = TruncatedSeries::from_polynomial(narayana_polynomial(k, r - 1), order);
      rec.expect(lhs == rhs, [&] {
        return kr(k, r) + ": numerator " + lhs.to_polynomial().to_string("t") + " != " +
               rhs.to_polynomial().to_string("t");
      });
    }
}

void narayana_palindromic(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const std::vector<Integer> row = narayana_row(k, r);
      std::vector<Integer> rev(row.rbegin(), row.rend());
      rec.expect(row == rev, [&] { return kr(k, r) + ": row is not palindromic"; });
    }
}

void narayana_degree(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const int deg = narayana_polynomial(k, r).degree();
      rec.expect(deg == (r - 1) * (k - 1),
                 [&] { return kr(k, r) + ": degree " + std::to_string(deg); });
    }
}

void classic_narayana(const IdentityGrid& g, Recorder& rec) {
  for (int r = 1; r <= std::max(8, g.r_max); ++r)
    for (int j = 0; j <= std::max(g.j_max, r); ++j) {
      const Integer lhs = sulanke_narayana(2, r, j);
      const Integer rhs = narayana_classic(r, j);
      rec.expect(lhs == rhs, [&] { return mismatch(krj(2, r, j), lhs, rhs); });
    }
}

void narayana_symmetry(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const Polynomial lhs = narayana_polynomial(k, r);
      const Polynomial rhs = narayana_polynomial(r, k);
      rec.expect(lhs == rhs, [&] { return kr(k, r) + ": " + lhs.to_string("t") + " != " + rhs.to_string("t"); });
    }
}

// 𝔑_{k,r} = 𝔑_{r-1,k+1}, with numerators N_{k,r-1} = N_{r-1,k}.
void multiset_series_reflection(const IdentityGrid& g, Recorder& rec) {
  const unsigned order = static_cast<unsigned>(g.j_max);
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 2; r <= g.r_max; ++r) {
      const TruncatedSeries lhs = multiset_series(k, r, order);
      const TruncatedSeries rhs = multiset_series(r - 1, k + 1, order);
      rec.expect(lhs == rhs, [&] { return kr(k, r) + ": series differ"; });
      const Polynomial pl = narayana_polynomial(k, r - 1);
      const Polynomial pr = narayana_polynomial(r - 1, k);
      rec.expect(pl == pr, [&] { return kr(k, r) + ": " + pl.to_string("t") + " != " + pr.to_string("t"); });
    }
}

// ---- Hypergeometric representations --------------------------------------

void multiset_hypergeometric(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const HypergeometricSpec spec = narayana_series_spec(k, r);
      for (int j = 0; j <= std::max(g.j_max, 10); ++j) {
        const Rational lhs = spec.coefficient(static_cast<unsigned>(j));
        const Rational rhs(multiset_narayana(k, r, j));
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
    }
}

void simple_hypergeometric(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 1; r <= g.r_max; ++r) {
      const HypergeometricSpec spec = simple_polynomial_spec(k, r);
      for (int j = 0; j <= std::max(g.j_max, 10); ++j) {
        const Rational lhs = spec.coefficient(static_cast<unsigned>(j));
        const Rational rhs(simple_narayana_product(k, r, j));
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
    }
}

void hypergeometric_reduction(const IdentityGrid& g, Recorder& rec) {
  for (int k = 1; k <= g.k_max; ++k)
    for (int r = 2; r <= std::min(g.r_max, k + 1); ++r) {
      const HypergeometricSpec lhs = narayana_series_spec(k, r).reduce();
      const HypergeometricSpec rhs = narayana_series_spec(r - 1, k + 1).reduce();
      rec.expect(lhs == rhs, [&] { return kr(k, r) + ": reduced specs differ"; });
      for (unsigned j = 0; j <= static_cast<unsigned>(g.j_max); ++j) {
        const Rational a = narayana_series_spec(k, r).coefficient(j);
        const Rational b = lhs.coefficient(j);
        rec.expect(a == b, [&] { return mismatch(kr(k, r) + " j=" + std::to_string(j), a, b); });
      }
    }
}

// ---- Euler transform ----------------------------------------------------

void euler_random(const IdentityGrid& g, Recorder& rec) {
  std::mt19937_64 rng(g.seed);
  for (unsigned s = 0; s < g.euler_samples; ++s) {
    const EulerInput input = random_euler_input(rng, 4);
    const IdentityCheck check = verify_euler_identity(input, g.euler_order);
    rec.expect(check.holds, [&] {
      std::ostringstream os;
      os << "sample " << s << " a=" << to_string(input.a()) << " b=" << to_string(input.b())
         << " c=" << to_string(input.c()) << " fails at order " << check.first_mismatch.value_or(0);
      return os.str();
    });
  }
}

void euler_narayana(const IdentityGrid& g, Recorder& rec) {
  for (int k = 2; k <= g.k_max; ++k)
    for (int r = (k == 2 ? 2 : 4); r <= g.r_max; ++r) {
      const IdentityCheck check = verify_euler_identity(narayana_euler_input(k, r), g.euler_order);
      rec.expect(check.holds, [&] { return kr(k, r) + ": transform fails"; });
      for (int j = 0; j <= (r - 2) * (k - 1) + 1; ++j) {
        const Rational lhs = narayana_product_formula(k, r, static_cast<unsigned>(j));
        const Rational rhs(sulanke_narayana(k, r - 1, j));
        rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
      }
    }
}

// ---- Grassmannians and Schubert varieties ---------------------------------

void hilbert_function_is_polynomial(const IdentityGrid& g, Recorder& rec) {
  for (int n = 1; n <= g.k_max + 4; ++n)
    for (int k = 1; k <= std::min(n, g.k_max); ++k) {
      const GrassmannianId gr(k, n);
      const TruncatedSeries s = hilbert_series_coeffs(gr, 10);
      const Polynomial p = hilbert_polynomial(gr);
      for (int j = 0; j <= 10; ++j) {
        const Rational lhs = s[static_cast<std::size_t>(j)];
        const Rational rhs = p(Rational(j));
        rec.expect(lhs == rhs, [&] { return mismatch("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") j=" +
                                                         std::to_string(j), lhs, rhs); });
        const Rational hodge = hodge_littlewood_value(k - 1, n - 1, j);
        rec.expect(hodge == rhs, [&] { return mismatch("Hodge Gr(" + std::to_string(k) + "," + std::to_string(n) +
                                                           ") j=" + std::to_string(j), hodge, rhs); });
      }
    }
}

void full_schubert_h_vector(const IdentityGrid& g, Recorder& rec) {
  for (int n = 1; n <= g.k_max + 4; ++n)
    for (int k = 1; k <= std::min(n, g.k_max); ++k) {
      const GrassmannianId gr(k, n);
      const Polynomial h = h_polynomial(gr);
      std::vector<Integer> coeffs;
      for (int i = 0; i <= std::max(h.degree(), 0); ++i) coeffs.push_back(to_integer(h[static_cast<std::size_t>(i)]));
      const std::vector<Integer> hv = schubert_h_vector(SchubertIndex::full(gr));
      rec.expect(coeffs == hv, [&] { return "Gr(" + std::to_string(k) + "," + std::to_string(n) + "): h-vectors differ"; });
    }
}

void sulanke_reduction(const IdentityGrid&, Recorder& rec) {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 7; ++n) {
      const long d = static_cast<long>(k) * (n - k) + 1;
      for (int i = 0; i <= (n - k) * (k - 1) + 2; ++i) {
        Integer lhs = 0;
        for (int l = 0; l <= i; ++l) {
          Integer term = curly_bracket(repeated(n, k), i - l) * binomial(d, l);
          if (l % 2 == 0) lhs += term; else lhs -= term;
        }
        const Integer rhs = n == k ? Integer(i == 0 ? 1 : 0) : sulanke_narayana(k, n - k, i);
        rec.expect(lhs == rhs, [&] { return mismatch("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                                         " i=" + std::to_string(i), lhs, rhs); });
      }
    }
}

void schubert_h_vectors(const IdentityGrid&, Recorder& rec) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= std::min(n, 3); ++k)
      for_each_increasing(k, n, [&](const std::vector<int>& a) {
        const SchubertIndex s(a, n);
        const std::vector<Integer> h = schubert_h_vector(s);
        const bool nonneg = std::all_of(h.begin(), h.end(), [](const Integer& x) { return x >= 0; });
        rec.expect(nonneg, [&] { return tuple_text(a) + ": negative h-vector entry"; });
        Integer sum = 0;
        for (const auto& x : h) sum += x;
        const Integer deg = degree(s);
        rec.expect(sum == deg, [&] { return mismatch(tuple_text(a) + " degree", sum, deg); });
        int expected = 0;
        for (std::size_t i = 0; i < a.size(); ++i) expected += a[i] - static_cast<int>(i + 1);
        const int got = schubert_hilbert_polynomial(s).degree();
        rec.expect(got == expected,
                   [&] { return tuple_text(a) + ": Hilbert degree " + std::to_string(got) + " != " + std::to_string(expected); });
      });
}

// ---- Path oracles ---------------------------------------------------------

void sulanke_paths(const IdentityGrid&, Recorder& rec) {
  const std::pair<int, int> cases[] = {{1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}};
  for (const auto& [k, r] : cases) {
    const auto counts = count_sulanke_paths({k, r});
    for (int j = 0; j <= (r - 1) * (k - 1); ++j) {
      const auto it = counts.find(j);
      const Integer lhs = it == counts.end() ? Integer(0) : it->second;
      const Integer rhs = sulanke_narayana(k, r, j);
      rec.expect(lhs == rhs, [&] { return mismatch(krj(k, r, j), lhs, rhs); });
    }
  }
}

void narayana_paths(const IdentityGrid&, Recorder& rec) {
  for (int k = 1; k <= 3; ++k)
    for_each_nonincreasing(k, 5, [&](const std::vector<int>& a) {
      for (int j = 0; j <= 3; ++j) {
        const Integer lhs = count_narayana_paths({a, j + 1});
        const Integer rhs = round_bracket(a, j);
        rec.expect(lhs == rhs, [&] { return mismatch(tuple_text(a) + " j=" + std::to_string(j), lhs, rhs); });
      }
    });
}

const std::vector<Entry>& ledger() {
  using G = IdentityGroup;
  static const std::vector<Entry> entries = {
      {"multiset narayana equals square bracket (r,...,r)_j", G::narayana, multiset_is_square_bracket},
      {"square bracket swap [r^k]_j = [(j+1)^k]_(r-1)", G::narayana, square_bracket_swap},
      {"square bracket equals curly bracket (r+k-1,...)_j", G::narayana, square_is_curly_bracket},
      {"curly bracket forms agree on increasing tuples", G::narayana, curly_forms_agree},
      {"round bracket ((r+1)^k)_j equals simple product", G::narayana, round_bracket_is_simple_product},
      {"multiset narayana from simple product at r+j-1", G::narayana, multiset_from_simple},
      {"multiset narayana as binomial convolution of N_(k,r-1)", G::narayana, multiset_from_sulanke},
      {"sulanke alternating sum over multiset narayana at r+1", G::narayana, sulanke_from_multiset},
      {"series times (1-t)^(k(r-1)+1) is N_(k,r-1)", G::narayana, series_numerator},
      {"narayana polynomial is palindromic", G::narayana, narayana_palindromic},
      {"narayana polynomial has degree (r-1)(k-1)", G::narayana, narayana_degree},
      {"k=2 reduces to classical narayana", G::narayana, classic_narayana},
      {"narayana polynomial symmetry N_(k,r) = N_(r,k)", G::narayana, narayana_symmetry},
      {"series reflection series(k,r) = series(r-1,k+1)", G::narayana, multiset_series_reflection},
      {"hypergeometric form of the multiset series", G::hypergeometric, multiset_hypergeometric},
      {"hypergeometric form of the simple polynomial", G::hypergeometric, simple_hypergeometric},
      {"parameter cancellation maps (k,r) to (r-1,k+1)", G::hypergeometric, hypergeometric_reduction},
      {"euler transform on random inputs", G::euler, euler_random},
      {"euler transform product formula for narayana numbers", G::euler, euler_narayana},
      {"grassmannian hilbert function is polynomial", G::grassmann, hilbert_function_is_polynomial},
      {"full schubert h-vector equals grassmannian h-polynomial", G::grassmann, full_schubert_h_vector},
      {"curly bracket (n,...,n) reduces to sulanke numbers", G::grassmann, sulanke_reduction},
      {"schubert h-vectors nonnegative and sum to degree", G::grassmann, schubert_h_vectors},
      {"sulanke path counts", G::oracle, sulanke_paths},
      {"narayana path counts", G::oracle, narayana_paths},
  };
  return entries;
}

}  // namespace

std::vector<IdentityResult> run_identity_ledger(const IdentityGrid& grid, const std::vector<IdentityGroup>& groups) {
  std::vector<IdentityResult> out;
  for (const Entry& e : ledger()) {
    if (!groups.empty() && std::find(groups.begin(), groups.end(), e.group) == groups.end()) continue;
    IdentityResult res;
    res.name = e.name;
    res.group = e.group;
    Recorder rec(res);
    try {
      e.run(grid, rec);
    } catch (const std::exception& ex) {
      rec.expect(false, [&] { return std::string("exception: ") + ex.what(); });
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace knarayana
