#include "kohn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kohn/errors.hpp"
#include "kohn/genfun.hpp"
#include "kohn/invariant_dims.hpp"
#include "kohn/oracle.hpp"
#include "kohn/sobolev.hpp"
#include "kohn/spectrum.hpp"

namespace kohn::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

// One command result: a JSON document plus the same data flattened to rows.
struct Report {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int exit_code = 0;
};

std::string big(const BigInt& v) { return v.str(); }

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Json num_json(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const Report& r, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << r.json.dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\r\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(r.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(r.header);
  for (const auto& row : r.rows) widen(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

std::string angle_list(const GroupElement& e) {
  std::string s;
  for (const auto& a : e.angles) s += (s.empty() ? "" : " ") + a.to_string();
  return s;
}

Report catalog_list() {
  struct Row {
    const char* family;
    const char* spec;
    const char* constraints;
    const char* order;
  };
  static const Row table[] = {
      {"cyclic", "cyclic:m", "m >= 1", "m"},
      {"lens", "lens:m:q1,...,qn", "m >= 1, n >= 2, every qk coprime to m", "m"},
      {"binary dihedral", "bindih:2m", "2m even, 2m >= 4 (Q is bindih:4)", "4m"},
      {"binary tetrahedral", "2T", "", "24"},
      {"binary octahedral", "2O", "", "48"},
      {"binary icosahedral", "2I", "", "120"},
      {"product with center", "<base>xC:l",
       "base in bindih, 2T, 2O, 2I; l odd; l coprime to 2m (bindih), 6 (2T), 6 (2O), 30 (2I)", "l |base|"},
      {"Q semidirect", "qsemi:l", "l odd, l >= 1", "72 l"},
      {"cyclic semidirect", "cycsemi:m:l", "m odd >= 3, l even >= 2, gcd(m, l) = 1", "4 m l"},
  };
  Report r;
  r.header = {"family", "spec", "constraints", "order"};
  r.json = Json::array();
  for (const auto& row : table) {
    r.rows.push_back({row.family, row.spec, row.constraints, row.order});
    r.json.push_back({{"family", row.family}, {"spec", row.spec}, {"constraints", row.constraints}, {"order", row.order}});
  }
  return r;
}

Report catalog_show(const QuotientGroup& g) {
  Report r;
  r.header = {"angles", "mult"};
  Json classes = Json::array();
  for (const auto& c : g.classes()) {
    Json angles = Json::array();
    for (const auto& a : c.element.angles) angles.push_back(a.to_string());
    classes.push_back({{"angles", angles}, {"mult", c.multiplicity}});
    r.rows.push_back({angle_list(c.element), std::to_string(c.multiplicity)});
  }
  r.json = {{"name", g.name()}, {"n", g.n()}, {"order", g.order()}, {"classes", classes}};
  return r;
}

// Averaged dimension, checked against the closed form when one exists.
Report dims(const QuotientGroup& g, std::int64_t p_lo, std::int64_t p_hi, std::optional<std::int64_t> q_only,
            std::int64_t pq_max) {
  const bool closed = has_closed_form(g.tag(), g.n());
  Report r;
  r.header = {"p", "q", "dim", "closed_form"};
  Json cells = Json::array();
  for (std::int64_t p = p_lo; p <= p_hi; ++p) {
    const std::int64_t q_lo = q_only ? *q_only : 0;
    const std::int64_t q_hi = q_only ? *q_only : pq_max - p;
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
      const auto d = dim_invariant(g, p, q);
      std::optional<std::int64_t> cf;
      if (closed) cf = closed_form_dimension(g.tag(), g.n(), p, q);
      if (cf && *cf != d.dim) r.exit_code = 2;
      cells.push_back({{"p", p}, {"q", q}, {"dim", d.dim}, {"closed_form", cf ? Json(*cf) : Json(nullptr)}});
      r.rows.push_back({std::to_string(p), std::to_string(q), std::to_string(d.dim), cf ? std::to_string(*cf) : "-"});
    }
  }
  r.json = {{"group", g.name()}, {"cells", cells}};
  return r;
}

Report spectrum(const QuotientGroup& g, std::int64_t lambda_max) {
  const auto t = counting_function(g, lambda_max);
  Report r;
  r.header = {"lambda", "mult", "cumulative", "contributors"};
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const auto& e = t.entries[i];
    Json contributors = Json::array();
    std::string text;
    for (const auto& [p, q] : e.contributors) {
      contributors.push_back({p, q});
      text += (text.empty() ? "" : " ") + ("(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    entries.push_back({{"lambda", e.eigenvalue}, {"mult", e.multiplicity}, {"contributors", contributors}});
    r.rows.push_back({std::to_string(e.eigenvalue), std::to_string(e.multiplicity), std::to_string(t.cumulative[i]), text});
  }
  r.json = {{"group", g.name()}, {"n", g.n()}, {"lambda_max", lambda_max}, {"entries", entries}};
  return r;
}

Report multiplicity_cmd(const QuotientGroup& g, std::int64_t lambda) {
  const auto m = multiplicity(g, lambda);
  Report r;
  r.header = {"p", "q", "dim"};
  Json contributors = Json::array();
  for (const auto& c : m.contributors) {
    contributors.push_back({{"p", c.p}, {"q", c.q}, {"dim", c.dim}});
    r.rows.push_back({std::to_string(c.p), std::to_string(c.q), std::to_string(c.dim)});
  }
  r.rows.push_back({"total", "", std::to_string(m.multiplicity)});
  r.json = {{"group", g.name()}, {"lambda", lambda}, {"mult", m.multiplicity}, {"contributors", contributors}};
  return r;
}

Report compare(const QuotientGroup& a, const QuotientGroup& b, std::int64_t lambda_max) {
  const auto c = compare_spectra(a, b, lambda_max);
  Report r;
  r.header = {"group_a", "group_b", "lambda_max", "isospectral", "eigenvalue", "mult_a", "mult_b"};
  r.rows.push_back({a.name(), b.name(), std::to_string(lambda_max), c.isospectral ? "true" : "false",
                    c.eigenvalue ? std::to_string(*c.eigenvalue) : "-", std::to_string(c.mult_a),
                    std::to_string(c.mult_b)});
  r.json = {{"group_a", a.name()},
            {"group_b", b.name()},
            {"lambda_max", lambda_max},
            {"isospectral", c.isospectral},
            {"eigenvalue", c.eigenvalue ? Json(*c.eigenvalue) : Json(nullptr)},
            {"mult_a", c.mult_a},
            {"mult_b", c.mult_b}};
  return r;
}

Report weyl(const QuotientGroup& g, std::int64_t lambda_max, int grid) {
  const auto w = weyl_report(g, halving_grid(lambda_max, grid));
  Report r;
  r.header = {"lambda", "n_group", "n_sphere", "ratio", "xi", "deviation", "bound", "bound_ok"};
  Json points = Json::array();
  for (const auto& p : w.points) {
    points.push_back({{"lambda", p.lambda},
                      {"n_group", p.n_group},
                      {"n_sphere", p.n_sphere},
                      {"ratio", num_json(p.ratio)},
                      {"xi", big(p.xi)},
                      {"deviation", big(p.deviation)},
                      {"bound", big(p.bound)},
                      {"bound_ok", p.bound_ok}});
    r.rows.push_back({std::to_string(p.lambda), std::to_string(p.n_group), std::to_string(p.n_sphere), num(p.ratio),
                      big(p.xi), big(p.deviation), big(p.bound), p.bound_ok ? "true" : "false"});
  }
  r.json = {{"group", w.group},
            {"order", w.order},
            {"n", w.n},
            {"weyl_constant", w.weyl_constant},
            {"sphere_volume", w.sphere_volume},
            {"predicted_limit", w.predicted_limit},
            {"raw_limit", w.raw_limit},
            {"extrapolated_limit", w.extrapolated_limit},
            {"all_bounds_ok", w.all_bounds_ok},
            {"points", points}};
  return r;
}

Report xi(int n, double lambda) {
  const BigInt v = xi_bound(lambda, n);
  Report r;
  r.header = {"n", "lambda", "xi"};
  r.rows.push_back({std::to_string(n), num(lambda), big(v)});
  r.json = {{"n", n}, {"lambda", lambda}, {"xi", big(v)}};
  return r;
}

Report genfun(const QuotientGroup& g, std::optional<std::int64_t> ceiling) {
  const auto pg = pg_polynomial(g, ceiling);
  Report r;
  r.header = {"a", "b", "coeff"};
  Json coeffs = Json::array();
  for (std::int64_t a = 0; a <= pg.degree; ++a)
    for (std::int64_t b = 0; b <= pg.degree; ++b) {
      const BigInt& c = pg.at(a, b);
      if (c == 0) continue;
      coeffs.push_back({a, b, big(c)});
      r.rows.push_back({std::to_string(a), std::to_string(b), big(c)});
    }
  r.json = {{"group", g.name()}, {"e", pg.e}, {"degree", pg.degree}, {"ceiling", pg.ceiling}, {"coeffs", coeffs}};
  return r;
}

Report sobolev(const QuotientGroup& g, std::int64_t ceiling, int convention, std::optional<std::int64_t> witness) {
  const auto d = convention == 4 ? SobolevConvention::Quarter : SobolevConvention::Half;
  const auto c = c_group(g, ceiling, d);
  Report r;
  r.header = {"quantity", "m", "value"};
  r.rows.push_back({"C_G at (" + std::to_string(c.p) + "," + std::to_string(c.q) + ")", "", num(c.value)});
  r.rows.push_back({"tail_sup", "", num(c.tail_sup)});
  r.rows.push_back({"certified", "", c.certified ? "true" : "false"});
  r.json = {{"group", g.name()},     {"value", c.value},       {"p", c.p},
            {"q", c.q},              {"certified", c.certified}, {"convention", convention},
            {"ceiling", c.ceiling},  {"tail_sup", c.tail_sup}};
  if (witness) {
    Json seq = Json::array();
    for (const auto& [m, v] : greens_lower_witness(g, *witness, d)) {
      seq.push_back({m, v});
      r.rows.push_back({"witness", std::to_string(m), num(v)});
    }
    r.json["witness"] = seq;
  }
  return r;
}

// Brute force against averaging and, where defined, the closed form.
Report oracle_check(const QuotientGroup& g, std::int64_t pq_max) {
  const bool closed = has_closed_form(g.tag(), g.n());
  Report r;
  r.header = {"p", "q", "averaged", "closed_form", "bruteforce", "pass"};
  Json cells = Json::array();
  bool all_pass = true;
  for (std::int64_t s = 0; s <= pq_max; ++s)
    for (std::int64_t p = s; p >= 0; --p) {
      const std::int64_t q = s - p;
      const std::int64_t avg = dim_invariant(g, p, q).dim;
      const std::int64_t brute = invariant_dim_bruteforce(g, p, q);
      std::optional<std::int64_t> cf;
      if (closed) cf = closed_form_dimension(g.tag(), g.n(), p, q);
      const bool pass = avg == brute && (!cf || *cf == avg);
      all_pass = all_pass && pass;
      cells.push_back({{"p", p},
                       {"q", q},
                       {"averaged", avg},
                       {"closed_form", cf ? Json(*cf) : Json(nullptr)},
                       {"bruteforce", brute},
                       {"pass", pass}});
      r.rows.push_back({std::to_string(p), std::to_string(q), std::to_string(avg), cf ? std::to_string(*cf) : "-",
                        std::to_string(brute), pass ? "PASS" : "FAIL"});
    }
  r.json = {{"group", g.name()}, {"pq_max", pq_max}, {"pass", all_pass}, {"cells", cells}};
  if (!all_pass) r.exit_code = 2;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kohn Laplacian spectra on sphere quotients"};
  app.name("kohn");
  app.require_subcommand(1);

  std::string format_text;
  std::string group_text, group_b_text;
  std::int64_t p = 0, q = 0, pq_max = 0, lambda_max = 0, ceiling = 0, witness = 0;
  double lambda = 0;
  int n = 2, grid = 4, convention = 2;

  const std::map<std::string, std::string> formats{{"json", "json"}, {"csv", "csv"}, {"table", "table"}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json, csv or table")->transform(CLI::IsMember(formats));
  };
  auto add_group = [&](CLI::App* sub) { sub->add_option("--group", group_text, "group spec")->required(); };

  std::function<Report()> action;
  Format default_format = Format::Table;

  auto* catalog = app.add_subcommand("catalog", "List families or show one group's classes");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "Families, constraints and orders");
  add_format(cat_list);
  cat_list->callback([&] { action = [] { return catalog_list(); }; });
  auto* cat_show = catalog->add_subcommand("show", "Element classes of one group");
  cat_show->add_option("spec", group_text, "group spec")->required();
  add_format(cat_show);
  cat_show->callback([&] {
    default_format = Format::Json;
    action = [&] { return catalog_show(parse_group_spec(group_text)); };
  });

  auto* dims_cmd = app.add_subcommand("dims", "Invariant dimensions of H_{p,q}");
  add_group(dims_cmd);
  auto* p_opt = dims_cmd->add_option("--p", p)->check(CLI::NonNegativeNumber);
  auto* q_opt = dims_cmd->add_option("--q", q)->check(CLI::NonNegativeNumber);
  auto* pq_opt = dims_cmd->add_option("--pq-max", pq_max)->check(CLI::NonNegativeNumber);
  p_opt->needs(q_opt);
  q_opt->needs(p_opt);
  pq_opt->excludes(p_opt)->excludes(q_opt);
  add_format(dims_cmd);
  dims_cmd->callback([&] {
    if (!pq_opt->count() && !p_opt->count()) throw CLI::RequiredError("--p/--q or --pq-max");
    action = [&] {
      const auto g = parse_group_spec(group_text);
      if (pq_opt->count()) return dims(g, 0, pq_max, std::nullopt, pq_max);
      return dims(g, p, p, q, 0);
    };
  });

  auto* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues with multiplicity up to a cutoff");
  add_group(spec_cmd);
  spec_cmd->add_option("--lambda-max", lambda_max)->required();
  add_format(spec_cmd);
  spec_cmd->callback([&] { action = [&] { return spectrum(parse_group_spec(group_text), lambda_max); }; });

  auto* mult_cmd = app.add_subcommand("multiplicity", "Multiplicity of one eigenvalue");
  add_group(mult_cmd);
  mult_cmd->add_option("--lambda", lambda_max)->required();
  add_format(mult_cmd);
  mult_cmd->callback([&] { action = [&] { return multiplicity_cmd(parse_group_spec(group_text), lambda_max); }; });

  auto* cmp_cmd = app.add_subcommand("compare", "First eigenvalue where two spectra differ");
  cmp_cmd->add_option("--group-a", group_text)->required();
  cmp_cmd->add_option("--group-b", group_b_text)->required();
  cmp_cmd->add_option("--lambda-max", lambda_max)->required();
  add_format(cmp_cmd);
  cmp_cmd->callback([&] {
    action = [&] { return compare(parse_group_spec(group_text), parse_group_spec(group_b_text), lambda_max); };
  });

  auto* weyl_cmd = app.add_subcommand("weyl", "Counting function against the Weyl law");
  add_group(weyl_cmd);
  weyl_cmd->add_option("--lambda-max", lambda_max)->required();
  weyl_cmd->add_option("--grid", grid, "number of halving steps")->check(CLI::Range(1, 30));
  add_format(weyl_cmd);
  weyl_cmd->callback([&] { action = [&] { return weyl(parse_group_spec(group_text), lambda_max, grid); }; });

  auto* xi_cmd = app.add_subcommand("xi", "The counting error bound Xi");
  xi_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  xi_cmd->add_option("--lambda", lambda)->required();
  add_format(xi_cmd);
  xi_cmd->callback([&] { action = [&] { return xi(n, lambda); }; });

  auto* gen_cmd = app.add_subcommand("genfun", "Numerator polynomial of the generating function");
  add_group(gen_cmd);
  auto* gen_ceiling = gen_cmd->add_option("--ceiling", ceiling);
  add_format(gen_cmd);
  gen_cmd->callback([&] {
    action = [&] {
      std::optional<std::int64_t> c;
      if (gen_ceiling->count()) c = ceiling;
      return genfun(parse_group_spec(group_text), c);
    };
  });

  auto* sob_cmd = app.add_subcommand("sobolev", "Sobolev constant of the Green's operator");
  add_group(sob_cmd);
  sob_cmd->add_option("--ceiling", ceiling)->required();
  sob_cmd->add_option("--convention", convention)->check(CLI::IsMember({2, 4}));
  auto* wit_opt = sob_cmd->add_option("--witness", witness)->check(CLI::PositiveNumber);
  add_format(sob_cmd);
  sob_cmd->callback([&] {
    action = [&] {
      std::optional<std::int64_t> w;
      if (wit_opt->count()) w = witness;
      return sobolev(parse_group_spec(group_text), ceiling, convention, w);
    };
  });

  auto* ora_cmd = app.add_subcommand("oracle-check", "Brute-force dimensions against averaging");
  add_group(ora_cmd);
  ora_cmd->add_option("--pq-max", pq_max)->required()->check(CLI::NonNegativeNumber);
  add_format(ora_cmd);
  ora_cmd->callback([&] { action = [&] { return oracle_check(parse_group_spec(group_text), pq_max); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Format format = default_format;
  if (format_text == "json") format = Format::Json;
  if (format_text == "csv") format = Format::Csv;
  if (format_text == "table") format = Format::Table;

  try {
    const Report r = action();
    emit(r, format, out);
    if (r.exit_code != 0) err << "error: result failed its cross-check\n";
    return r.exit_code;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kohn::cli
