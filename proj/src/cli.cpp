#include "wittsig/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "wittsig/diophantine.hpp"
#include "wittsig/discriminant.hpp"
#include "wittsig/error.hpp"
#include "wittsig/forms.hpp"
#include "wittsig/io.hpp"
#include "wittsig/knots.hpp"
#include "wittsig/witt.hpp"

namespace wittsig::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string gram;
  std::string seifert;
  std::uint64_t bound_group = kDefaultGroupBound;
  std::uint64_t bound_det = kDefaultDeterminantBound;
  unsigned jobs = 1;
  bool approx = false;
  std::vector<std::int64_t> pretzel;
  int sign = -1;
  std::int64_t pq = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  bool verify = false;
  bool dedup = false;
};

json complex_json(std::complex<long double> z) {
  return {{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

IntegerSymmetricForm load_form(const Options& o) {
  return form_from_rows(io::read_matrix_file(o.gram, "gram"));
}

json analyze(const Options& o) { return io::to_json(verify_main_theorem(load_form(o), o.bound_group)); }

json diag(const Options& o) {
  const auto f = load_form(o);
  json j = io::to_json(diagonalize(f));
  j["determinant"] = io::integer_json(f.determinant());
  return j;
}

json boundary(const Options& o) {
  const auto f = load_form(o);
  const auto c = witt_from_diagonal(diagonalize(f).entries);
  json table = json::array();
  for (const auto& x : boundary_table(c)) table.push_back(io::to_json(x));
  return {{"witt_class", io::to_json(c)},
          {"signature", c.signature()},
          {"boundaries", std::move(table)},
          {"boundary_zero", boundary_is_zero(c)}};
}

json disc(const Options& o) {
  const auto f = load_form(o);
  const auto d = discriminant_form(f);
  json j = io::to_json(d);
  if (d.order() <= o.bound_group) {
    j["nondegenerate"] = is_nondegenerate(d, o.bound_group);
    const auto h = find_metabolizer(d, o.bound_group);
    j["metabolizer"] = h ? io::to_json(*h) : json(nullptr);
  } else {
    j["nondegenerate"] = nullptr;
    j["metabolizer"] = nullptr;
  }
  return j;
}

json gauss(const Options& o) {
  const auto f = load_form(o);
  const auto check = check_gauss_sum(f, o.bound_det, o.jobs);
  json j = io::to_json(check.value);
  j["determinant"] = io::integer_json(f.determinant());
  j["signature"] = check.signature;
  j["exact_match"] = check.exact_match ? json(*check.exact_match) : json(nullptr);
  j["numeric_match"] = check.numeric_match;
  j["holds"] = check.holds();
  if (o.approx) {
    j["approx"] = complex_json(check.value.approx());
    j["numeric_error"] = static_cast<double>(check.numeric_error);
  }
  return j;
}

json knot(const Options& o) {
  return io::to_json(analyze_knot(SeifertMatrix::from_rows(io::read_matrix_file(o.seifert, "seifert"))));
}

json pretzel(const Options& o) {
  const PretzelKnot k(o.pretzel[0], o.pretzel[1], o.pretzel[2]);
  json j = {{"p", k.p()}, {"q", k.q()}, {"r", k.r()},
            {"determinant", io::integer_json(pretzel_determinant(k))}};
  if (k.r() != 0) {
    const auto c = pretzel_witt_class(k);
    j["witt_class"] = io::to_json(c);
    j["boundary_zero"] = boundary_is_zero(c);
  } else {
    j["witt_class"] = nullptr;
    j["boundary_zero"] = nullptr;
  }
  j["signature"] = k.p() + k.q() != 0 ? json(pretzel_signature(k)) : json(nullptr);
  return j;
}

int dioph(const Options& o, std::ostream& out) {
  const auto window = SearchWindow::symmetric(o.pq, o.r, o.m);
  const auto records = search(window, o.sign, {o.jobs, o.dedup});
  if (o.verify) {
    const bool holds = std::all_of(records.begin(), records.end(),
                                   [](const auto& s) { return s.p_plus_q_mod_8 == 0; });
    out << (holds ? "restriction holds" : "restriction violated") << " (" << records.size()
        << " solutions)\n";
    return holds ? kExitOk : kExitDomainError;
  }
  out << io::kCsvHeader << '\n';
  for (const auto& s : records) out << io::csv_line(s) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt-class and signature analysis of even integral symmetric forms", "wittsig"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_form_input = [&](CLI::App* sub) {
    sub->add_option("--gram", o.gram, "Gram matrix file ({\"gram\": [[...]]} or CSV)")
        ->required();
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Check the mod-8 signature theorem on a form");
  add_form_input(analyze_cmd);
  analyze_cmd->add_option("--bound-group", o.bound_group, "Largest |G| for metabolizer search");

  auto* diag_cmd = app.add_subcommand("diag", "Rational diagonalization");
  add_form_input(diag_cmd);

  auto* boundary_cmd = app.add_subcommand("boundary", "Residue classes d_p of the Witt class");
  add_form_input(boundary_cmd);

  auto* disc_cmd = app.add_subcommand("disc", "Discriminant form and metabolizer");
  add_form_input(disc_cmd);
  disc_cmd->add_option("--bound-group", o.bound_group, "Largest |G| for metabolizer search");

  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum and its closed-form check");
  add_form_input(gauss_cmd);
  gauss_cmd->add_option("--bound-det", o.bound_det, "Largest |det| for coset enumeration");
  gauss_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  gauss_cmd->add_flag("--approx", o.approx, "Include floating-point approximations");

  auto* knot_cmd = app.add_subcommand("knot", "Analyze a knot from its Seifert matrix");
  knot_cmd->add_option("--seifert", o.seifert, "Seifert matrix file ({\"seifert\": ...} or CSV)")
      ->required();

  auto* pretzel_cmd = app.add_subcommand("pretzel", "Closed forms for the pretzel knot P(p,q,r)");
  pretzel_cmd->add_option("params", o.pretzel, "p q r")->required()->expected(3);

  auto* dioph_cmd = app.add_subcommand("dioph", "Search pq + pr + qr = sign * m^2");
  dioph_cmd->add_option("--sign", o.sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));
  dioph_cmd->add_option("--pq", o.pq, "Bound on |p| and |q|")->required();
  dioph_cmd->add_option("--r", o.r, "Bound on |r|")->required();
  dioph_cmd->add_option("--m", o.m, "Bound on m")->required();
  dioph_cmd->add_flag("--verify", o.verify, "Only check p + q = 0 mod 8 (sign -1)");
  dioph_cmd->add_flag("--dedup", o.dedup, "Report only p <= q");
  dioph_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (o.verify && o.sign != -1) throw CLI::ValidationError("--verify", "requires --sign -1");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    json report;
    if (*analyze_cmd) report = analyze(o);
    else if (*diag_cmd) report = diag(o);
    else if (*boundary_cmd) report = boundary(o);
    else if (*disc_cmd) report = disc(o);
    else if (*gauss_cmd) report = gauss(o);
    else if (*knot_cmd) report = knot(o);
    else if (*pretzel_cmd) report = pretzel(o);
    else return dioph(o, out);
    out << report.dump(2) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    out << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump()
        << '\n';
    return kExitDomainError;
  }
}

}  // namespace wittsig::cli
