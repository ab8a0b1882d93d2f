#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "knarayana/euler.hpp"
#include "knarayana/grassmann.hpp"
#include "knarayana/identities.hpp"
#include "knarayana/narayana.hpp"
#include "knarayana/pathcount.hpp"

namespace knarayana::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { plain, json, csv, latex };

// Raised when a computation disagrees with its cross-check.
class Inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a command produces, rendered later in the requested format.
struct Report {
  json query = json::object();
  std::vector<std::pair<long, std::string>> values;
  json extra = json::object();  // additional top-level json keys
  json meta = json::object();

  std::vector<std::string> plain_header;
  std::vector<std::string> latex_lines;
  // Optional replacement for the j/value table in plain and csv output.
  std::vector<std::string> table_columns;
  std::vector<std::vector<std::string>> table_rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void render(const Report& rep, Format fmt, std::ostream& os) {
  const bool custom = !rep.table_columns.empty();
  switch (fmt) {
    case Format::json: {
      json doc = json::object();
      doc["query"] = rep.query;
      json values = json::array();
      for (const auto& [j, v] : rep.values) values.push_back(json{{"j", j}, {"value", v}});
      doc["values"] = std::move(values);
      for (const auto& [key, v] : rep.extra.items()) doc[key] = v;
      doc["meta"] = rep.meta;
      os << doc.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      if (custom) {
        for (std::size_t i = 0; i < rep.table_columns.size(); ++i) os << (i ? "," : "") << rep.table_columns[i];
        os << '\n';
        for (const auto& row : rep.table_rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
          os << '\n';
        }
        return;
      }
      os << "j,value\n";
      for (const auto& [j, v] : rep.values) os << j << ',' << v << '\n';
      return;
    }
    case Format::plain: {
      for (const auto& line : rep.plain_header) os << line << '\n';
      if (custom) {
        for (const auto& row : rep.table_rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << row[i];
          os << '\n';
        }
        return;
      }
      if (rep.values.empty()) return;
      std::size_t width = 1;
      for (const auto& [j, v] : rep.values) width = std::max(width, std::to_string(j).size());
      for (const auto& [j, v] : rep.values) {
        const std::string js = std::to_string(j);
        os << std::string(width - js.size(), ' ') << js << "  " << v << '\n';
      }
      return;
    }
    case Format::latex: {
      for (const auto& line : rep.latex_lines) os << line << '\n';
      if (rep.values.empty()) return;
      os << "\\begin{tabular}{rr}\n$j$ & value \\\\\n\\hline\n";
      for (const auto& [j, v] : rep.values) os << j << " & " << v << " \\\\\n";
      os << "\\end{tabular}\n";
      return;
    }
  }
}

std::string poly_text(const Polynomial& p, const char* var) { return p.to_string(var); }

std::string latex_rational(const Rational& q) {
  if (is_integer(q)) return to_string(q);
  return "\\frac{" + to_string(Integer(q.get_num())) + "}{" + to_string(Integer(q.get_den())) + "}";
}

// Highest power first, like Polynomial::to_string.
std::string latex_poly(const Polynomial& p, const char* var) {
  if (p.degree() < 0) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (c != 1 || i == 0) out += latex_rational(c);
    if (i >= 1) out += var;
    if (i >= 2) out += "^{" + std::to_string(i) + "}";
  }
  return out;
}

json integer_array(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// ---- narayana -------------------------------------------------------------

struct NarayanaArgs {
  int k = 1;
  int r = 1;
  std::string method = "sulanke";
};

Integer determinant_route(int k, int r, int j) {
  // Alternating sum over the multiset numbers, each taken as [r+1,...,r+1]_l.
  const std::vector<int> a(static_cast<std::size_t>(k), r + 1);
  Integer v = 0;
  for (int l = 0; l <= j; ++l) {
    Integer term = binomial(static_cast<long>(k) * r + 1, j - l) * square_bracket(a, l);
    if ((j - l) % 2 == 0) v += term; else v -= term;
  }
  return v;
}

Report cmd_narayana(const NarayanaArgs& args) {
  NarayanaQuery{args.k, args.r, 0}.validate();
  if (args.method == "euler" && (args.k < 2 || (args.k > 2 && args.r < 3)))
    throw std::invalid_argument("--method euler needs k >= 2, and r >= 3 when k >= 3");

  const int top = (args.r - 1) * (args.k - 1);
  Report rep;
  rep.query = json{{"command", "narayana"}, {"k", args.k}, {"r", args.r}};
  std::vector<std::string> diffs;
  std::vector<Integer> row;
  for (int j = 0; j <= top; ++j) {
    const Integer reference = sulanke_narayana(args.k, args.r, j);
    Integer v;
    if (args.method == "sulanke") {
      v = reference;
    } else if (args.method == "determinant") {
      v = determinant_route(args.k, args.r, j);
    } else {
      const Rational q = narayana_product_formula(args.k, args.r + 1, static_cast<unsigned>(j));
      if (!is_integer(q)) {
        diffs.push_back("j=" + std::to_string(j) + ": " + args.method + " gives non-integer " + to_string(q));
        continue;
      }
      v = to_integer(q);
    }
    if (v != reference)
      diffs.push_back("j=" + std::to_string(j) + ": " + args.method + "=" + to_string(v) + " sulanke=" + to_string(reference));
    row.push_back(v);
    rep.values.emplace_back(j, to_string(v));
  }
  if (!diffs.empty()) throw Inconsistency("methods disagree for k=" + std::to_string(args.k) + " r=" +
                                          std::to_string(args.r) + ":\n  " + join(diffs, "\n  "));

  std::vector<Rational> coeffs(row.begin(), row.end());
  const Polynomial p(coeffs);
  rep.extra["polynomial"] = poly_text(p, "t");
  rep.meta["method"] = args.method;
  rep.meta["cross_check"] = "sulanke";
  const std::string name = "N_" + std::to_string(args.k) + "(" + std::to_string(args.r) + ",j)";
  rep.plain_header = {name + "  method=" + args.method, "N_" + std::to_string(args.k) + "," + std::to_string(args.r) +
                                                             "(t) = " + poly_text(p, "t")};
  rep.latex_lines = {"$N_{" + std::to_string(args.k) + "," + std::to_string(args.r) + "}(t) = " + latex_poly(p, "t") + "$"};
  return rep;
}

// ---- hilbert ----------------------------------------------------------------

struct HilbertArgs {
  int k = 1;
  int n = 1;
  unsigned order = 10;
  std::string grading = "plucker";
};

Report cmd_hilbert(const HilbertArgs& args) {
  const GrassmannianId g(args.k, args.n);
  const HilbertGrading grading = args.grading == "plucker" ? HilbertGrading::plucker : HilbertGrading::invariant_ring;
  const TruncatedSeries s = hilbert_series_coeffs(g, args.order, grading);
  const Polynomial hp = hilbert_polynomial(g);
  const Polynomial h = h_polynomial(g);
  const int exponent = g.dimension() + 1;

  Report rep;
  rep.query = json{{"command", "hilbert"}, {"k", args.k}, {"n", args.n}, {"J", args.order}, {"grading", args.grading}};
  for (unsigned j = 0; j <= args.order; ++j) rep.values.emplace_back(j, to_string(s[j]));
  rep.extra["dimension"] = g.dimension();
  rep.extra["hilbert_polynomial"] = poly_text(hp, "j");
  rep.extra["h_polynomial"] = poly_text(h, "t");
  rep.meta["method"] = "multiset narayana product";

  const std::string gr = "Gr(" + std::to_string(args.k) + "," + std::to_string(args.n) + ")";
  rep.plain_header = {gr + "  dimension " + std::to_string(g.dimension()) + "  grading " + args.grading,
                      "Hilbert polynomial: " + poly_text(hp, "j"),
                      "h-polynomial: " + poly_text(h, "t"),
                      "Hilbert series: (" + poly_text(h, "t") + ") / (1 - t)^" + std::to_string(exponent)};
  rep.latex_lines = {"$H_{" + gr + "}(t) = \\frac{" + latex_poly(h, "t") + "}{(1-t)^{" + std::to_string(exponent) + "}}$",
                     "$P(j) = " + latex_poly(hp, "j") + "$"};
  return rep;
}

// ---- schubert ---------------------------------------------------------------

struct SchubertArgs {
  std::vector<int> a;
  int n = 0;
};

Report cmd_schubert(const SchubertArgs& args) {
  const SchubertIndex s = args.n > 0 ? SchubertIndex(args.a, args.n) : SchubertIndex(args.a);
  const SchubertDimension dim = schubert_dimension(s);
  const std::vector<Integer> h = schubert_h_vector(s);
  const Integer deg = degree(s);
  const Polynomial hp = schubert_hilbert_polynomial(s);

  std::vector<std::string> a_text;
  for (int x : args.a) a_text.push_back(std::to_string(x));

  Report rep;
  rep.query = json{{"command", "schubert"}, {"a", args.a}, {"n", s.n}};
  for (std::size_t i = 0; i < h.size(); ++i) rep.values.emplace_back(static_cast<long>(i), to_string(h[i]));
  rep.extra["dimension"] = dim.projective;
  rep.extra["cone_dimension"] = dim.cone;
  rep.extra["degree"] = to_string(deg);
  rep.extra["h_vector"] = integer_array(h);
  rep.extra["hilbert_polynomial"] = poly_text(hp, "j");
  rep.meta["method"] = "curly bracket determinant";

  const std::string name = "X(" + join(a_text, ",") + ") in Gr(" + std::to_string(args.a.size()) + "," +
                           std::to_string(s.n) + ")";
  std::vector<std::string> h_text;
  for (const auto& x : h) h_text.push_back(to_string(x));
  rep.plain_header = {name, "dimension " + std::to_string(dim.projective) + "  degree " + to_string(deg),
                      "h-vector (" + join(h_text, ", ") + ")", "Hilbert polynomial: " + poly_text(hp, "j")};
  rep.latex_lines = {"$\\dim X = " + std::to_string(dim.projective) + ",\\ \\deg X = " + to_string(deg) + "$",
                     "$P(j) = " + latex_poly(hp, "j") + "$"};
  return rep;
}

// ---- euler --------------------------------------------------------------------

struct EulerArgs {
  int k = 2;
  int r = 2;
};

std::string root_text(const NumericRoot& root) {
  if (root.exact) return to_string(*root.exact);
  if (root.value.imag() == 0) return format_double(root.value.real());
  const double im = root.value.imag();
  return format_double(root.value.real()) + (im < 0 ? " - " : " + ") + format_double(std::abs(im)) + "i";
}

Report cmd_euler(const EulerArgs& args) {
  const EulerInput input = narayana_euler_input(args.k, args.r);
  const QPolynomial q = q_polynomial(input);
  const auto roots = numeric_roots(q);

  Report rep;
  rep.query = json{{"command", "euler"}, {"k", args.k}, {"r", args.r}};
  const int top = (args.r - 2) * (args.k - 1);
  for (int j = 0; j <= top; ++j)
    rep.values.emplace_back(j, to_string(narayana_product_formula(args.k, args.r, static_cast<unsigned>(j))));

  json qc = json::array();
  for (int i = 0; i <= std::max(q.degree(), 0); ++i) qc.push_back(to_string(q.poly[static_cast<std::size_t>(i)]));
  json jr = json::array();
  for (const auto& root : roots) {
    json e = json{{"re", format_double(root.value.real())}, {"im", format_double(root.value.imag())},
                  {"residual", format_double(root.residual)}};
    if (root.exact) e["exact"] = to_string(*root.exact);
    jr.push_back(std::move(e));
  }
  rep.extra["parameters"] = json{{"a", to_string(input.a())},
                                 {"b", to_string(input.b())},
                                 {"c", to_string(input.c())},
                                 {"m_total", input.m_total()}};
  rep.extra["q_coefficients"] = std::move(qc);
  rep.extra["q_degree"] = q.degree();
  rep.extra["roots"] = std::move(jr);
  rep.extra["formula"] = render_narayana_product_formula(args.k, args.r, false);
  rep.meta["method"] = "euler transform";

  std::vector<std::string> rt;
  for (const auto& root : roots) rt.push_back(root_text(root));
  rep.plain_header = {"Q(t) = " + poly_text(q.poly, "t"), "deg Q = " + std::to_string(q.degree()),
                      "roots: " + (rt.empty() ? std::string("none") : join(rt, ", ")),
                      render_narayana_product_formula(args.k, args.r, false)};
  rep.latex_lines = {"$Q(t) = " + latex_poly(q.poly, "t") + "$",
                     "$" + render_narayana_product_formula(args.k, args.r, true) + "$"};
  return rep;
}

// ---- oracle -------------------------------------------------------------------

struct OracleArgs {
  int k = 1;
  int r = 0;
  std::vector<int> a;
  int steps = 1;
};

Report cmd_oracle_sulanke(const OracleArgs& args, unsigned jobs) {
  if (args.k < 1 || args.r < 0) throw std::invalid_argument("oracle sulanke needs k >= 1, r >= 0");
  const EnumerationBudget budget = EnumerationBudget::from_environment();
  const auto counts = count_sulanke_paths({args.k, args.r}, budget, jobs);
  const Integer total_dp = count_sulanke_paths_total_dp({args.k, args.r}, budget);
  Integer total = 0;
  Report rep;
  rep.query = json{{"command", "oracle"}, {"model", "sulanke"}, {"k", args.k}, {"r", args.r}};
  for (const auto& [j, c] : counts) {
    total += c;
    rep.values.emplace_back(j, to_string(c));
  }
  if (total != total_dp)
    throw Inconsistency("path total " + to_string(total) + " differs from lattice count " + to_string(total_dp));
  rep.extra["total"] = to_string(total);
  rep.meta["method"] = "depth-first enumeration";
  rep.plain_header = {"chamber paths to (" + std::to_string(args.r) + ",...) in Z^" + std::to_string(args.k) +
                          " by ascents",
                      "total " + to_string(total)};
  return rep;
}

Report cmd_oracle_narayana(const OracleArgs& args) {
  const EnumerationBudget budget = EnumerationBudget::from_environment();
  const Integer c = count_narayana_paths({args.a, args.steps}, budget);
  std::vector<std::string> a_text;
  for (int x : args.a) a_text.push_back(std::to_string(x));
  Report rep;
  rep.query = json{{"command", "oracle"}, {"model", "narayana"}, {"a", args.a}, {"steps", args.steps}};
  rep.values.emplace_back(args.steps - 1, to_string(c));
  rep.meta["method"] = "depth-first enumeration";
  rep.plain_header = {"paths to (" + join(a_text, ",") + ") with " + std::to_string(args.steps) + " steps: " +
                      to_string(c)};
  return rep;
}

// ---- identities ---------------------------------------------------------------

struct IdentityArgs {
  IdentityGrid grid;
  std::vector<std::string> groups;
};

Report cmd_identities(const IdentityArgs& args, bool& all_passed) {
  static const std::map<std::string, IdentityGroup> names = {
      {"narayana", IdentityGroup::narayana}, {"hypergeometric", IdentityGroup::hypergeometric},
      {"euler", IdentityGroup::euler},       {"grassmann", IdentityGroup::grassmann},
      {"oracle", IdentityGroup::oracle}};
  std::vector<IdentityGroup> groups;
  for (const auto& g : args.groups) groups.push_back(names.at(g));

  const auto results = run_identity_ledger(args.grid, groups);
  Report rep;
  rep.query = json{{"command", "identities"},     {"k_max", args.grid.k_max},
                   {"r_max", args.grid.r_max},     {"j_max", args.grid.j_max},
                   {"samples", args.grid.euler_samples}, {"order", args.grid.euler_order},
                   {"seed", args.grid.seed},       {"groups", args.groups}};
  json list = json::array();
  all_passed = true;
  rep.table_columns = {"identity", "group", "status", "cases", "counterexample"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all_passed = all_passed && r.passed;
    rep.values.emplace_back(static_cast<long>(i), r.passed ? "pass" : "fail");
    list.push_back(json{{"name", r.name},
                        {"group", to_string(r.group)},
                        {"passed", r.passed},
                        {"cases", r.cases},
                        {"counterexample", r.counterexample}});
    rep.table_rows.push_back(
        {r.name, to_string(r.group), r.passed ? "pass" : "FAIL", std::to_string(r.cases), r.counterexample});
  }
  rep.extra["identities"] = std::move(list);
  rep.meta["method"] = "exact grid check";
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-Narayana numbers, Grassmannian Hilbert series and Schubert varieties"};
  app.name("knarayana");
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::plain;
  const std::map<std::string, Format> format_names = {
      {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}, {"latex", Format::latex}};
  std::string out_path;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timings = false;
  app.add_option("-f,--format", format, "Output format")->transform(CLI::CheckedTransformer(format_names));
  app.add_option("-o,--out", out_path, "Write output to this file");
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--jobs", jobs, "Worker threads for path enumeration")->check(CLI::Range(1u, 256u));
  app.add_flag("--timings", timings, "Include wall-clock timings in the json meta block");

  NarayanaArgs nar;
  auto* sub_nar = app.add_subcommand("narayana", "Table of N_k(r,j)");
  sub_nar->add_option("-k", nar.k, "Dimension k")->required();
  sub_nar->add_option("-r", nar.r, "Size r")->required();
  sub_nar->add_option("--method", nar.method, "sulanke, determinant or euler")
      ->check(CLI::IsMember({"sulanke", "determinant", "euler"}));

  HilbertArgs hil;
  auto* sub_hil = app.add_subcommand("hilbert", "Hilbert data of Gr(k,n)");
  sub_hil->add_option("-k", hil.k, "Subspace dimension")->required();
  sub_hil->add_option("-n", hil.n, "Ambient dimension")->required();
  sub_hil->add_option("-J", hil.order, "Number of series coefficients past t^0");
  sub_hil->add_option("--grading", hil.grading, "plucker or invariant")
      ->check(CLI::IsMember({"plucker", "invariant"}));

  SchubertArgs sch;
  auto* sub_sch = app.add_subcommand("schubert", "Hilbert data of the Schubert variety X(a_1,...,a_k)");
  sub_sch->add_option("a", sch.a, "Strictly increasing index")->required();
  sub_sch->add_option("-n", sch.n, "Ambient dimension (default a_k)");

  EulerArgs eul;
  auto* sub_eul = app.add_subcommand("euler", "Euler transform product formula for N_k(r-1,j)");
  sub_eul->add_option("-k", eul.k, "Dimension k")->required();
  sub_eul->add_option("-r", eul.r, "Transform parameter r")->required();

  OracleArgs ora;
  auto* sub_ora = app.add_subcommand("oracle", "Brute-force path enumeration");
  sub_ora->require_subcommand(1);
  auto* ora_sul = sub_ora->add_subcommand("sulanke", "Chamber paths by ascents");
  ora_sul->add_option("-k", ora.k, "Dimension k")->required();
  ora_sul->add_option("-r", ora.r, "Target coordinate r")->required();
  auto* ora_nar = sub_ora->add_subcommand("narayana", "Paths counted by the round bracket");
  ora_nar->add_option("-a", ora.a, "Nonincreasing end point")->required()->delimiter(',');
  ora_nar->add_option("-s,--steps", ora.steps, "Number of steps")->required();

  IdentityArgs ids;
  auto* sub_ids = app.add_subcommand("identities", "Check the identity ledger over a grid");
  sub_ids->add_option("--k-max", ids.grid.k_max)->check(CLI::Range(1, 8));
  sub_ids->add_option("--r-max", ids.grid.r_max)->check(CLI::Range(1, 12));
  sub_ids->add_option("--j-max", ids.grid.j_max)->check(CLI::Range(0, 30));
  sub_ids->add_option("--samples", ids.grid.euler_samples);
  sub_ids->add_option("--order", ids.grid.euler_order);
  sub_ids->add_option("--group", ids.groups, "Restrict to these groups")
      ->check(CLI::IsMember({"narayana", "hypergeometric", "euler", "grassmann", "oracle"}));

  std::vector<std::string> argv_store;
  argv_store.push_back("knarayana");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = exit_ok;
  Report rep;
  try {
    if (*sub_nar) {
      rep = cmd_narayana(nar);
    } else if (*sub_hil) {
      rep = cmd_hilbert(hil);
    } else if (*sub_sch) {
      rep = cmd_schubert(sch);
    } else if (*sub_eul) {
      rep = cmd_euler(eul);
    } else if (*ora_sul) {
      rep = cmd_oracle_sulanke(ora, jobs);
    } else if (*ora_nar) {
      rep = cmd_oracle_narayana(ora);
    } else if (*sub_ids) {
      ids.grid.seed = seed;
      bool passed = true;
      rep = cmd_identities(ids, passed);
      if (!passed) status = exit_inconsistent;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (const Inconsistency& e) {
    err << "inconsistency: " << e.what() << '\n';
    return exit_inconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return exit_inconsistent;
  }

  if (timings) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.meta["elapsed_ms"] = ms;
  }

  if (out_path.empty()) {
    render(rep, format, out);
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return exit_usage;
    }
    render(rep, format, file);
  }
  return status;
}

}  // namespace knarayana::cli
