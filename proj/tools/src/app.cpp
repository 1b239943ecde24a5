#include "app.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mocurve/implicit.hpp"
#include "mocurve/parse.hpp"
#include "mocurve/random.hpp"
#include "mocurve/rees.hpp"
#include "mocurve/syzygy.hpp"

namespace mocurve::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> param;
  std::vector<std::string> affine;
  std::string field = "rational";
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string method = "mubasis";
  std::string plot;
  int tdeg = -1;
  int xdeg = -1;
  int tmax = -1;
  int xmax = -1;
  int jobs = 1;
  bool widen = false;
  bool exact = false;
  int degree = 0;
  int count = 10;
  std::optional<int> mu;
  int bound = 5;
  int dmin = 2;
  int dmax = 8;
  std::string bench_format = "text";
};

/// Failure tied to one of the three input expressions.
struct InputError {
  Error error;
  int argument;
  std::optional<std::size_t> position;
};

struct Input {
  Parametrization phi;
  /// Printed when affine input was homogenized.
  std::optional<std::string> note;
};

std::vector<std::string> split_input(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  auto flush = [&] {
    auto b = current.find_first_not_of(" \t\r");
    if (b != std::string::npos) parts.push_back(current.substr(b));
    current.clear();
  };
  bool comment = false;
  for (char ch : text) {
    if (ch == '\n') {
      comment = false;
      flush();
    } else if (comment) {
      continue;
    } else if (ch == '#') {
      comment = true;
    } else if (ch == ';') {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  return parts;
}

template <class Fn>
auto parse_argument(int index, Fn fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw InputError{e, index, e.position()};
  }
}

Input read_input(const Options& opt, std::istream& in) {
  const FieldSpec field = parse_field(opt.field);
  std::vector<std::string> exprs;
  bool affine = false;
  if (!opt.param.empty()) {
    exprs = opt.param;
  } else if (!opt.affine.empty()) {
    exprs = opt.affine;
    affine = true;
  } else {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text.compare(start, 7, "affine:") == 0) {
      affine = true;
      text = text.substr(start + 7);
    }
    exprs = split_input(text);
  }
  if (exprs.size() != 3)
    throw Error(ErrorCode::InvalidArgument, "expected three expressions, got " + std::to_string(exprs.size()));

  if (affine) {
    std::array<UPoly, 3> p;
    for (int k = 0; k < 3; ++k) p[k] = parse_argument(k, [&] { return parse_upoly(exprs[k]); });
    Homogenized h = homogenize(p[0], p[1], p[2]);
    std::string note = "affine (a, b, c) mapped to (u0, u1, u2) = (c, a, b) homogenized in t = t1/t0: " + h.param.str();
    if (h.stripped.degree() > 0) note += "; removed common factor " + h.stripped.str();
    return {h.param.in(field), note};
  }
  std::array<TForm, 3> u;
  for (int k = 0; k < 3; ++k) u[k] = parse_argument(k, [&] { return parse_tform(exprs[k]).in(field); });
  // Zero components take the degree of the others.
  int d = 0;
  for (const auto& f : u)
    if (!f.is_zero()) d = std::max(d, f.degree());
  for (auto& f : u)
    if (f.is_zero()) f = TForm(d).in(field);
  return {Parametrization(u[0], u[1], u[2]), std::nullopt};
}

json coefficient_array(const BiForm& L) {
  json a = json::array();
  for (const auto& c : L.line_coefficients()) a.push_back(c.str());
  return a;
}

json implicit_json(const ImplicitResult& r, int d) {
  json j;
  j["d"] = d;
  j["method"] = to_string(r.method);
  j["F"] = r.F.str();
  j["D"] = r.D;
  j["beta"] = r.beta;
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  j["constant"] = r.constant.str();
  j["checks"] = {{"vanishes", r.vanishes}, {"alpha_eq_d", r.alpha_eq_d}};
  return j;
}

void implicit_text(const ImplicitResult& r, int d, std::ostream& out) {
  out << "method   " << to_string(r.method) << "\n"
      << "d        " << d << "\n"
      << "F        " << r.F.str() << "\n"
      << "D        " << r.D << "\n"
      << "beta     " << r.beta << "\n"
      << "alpha    " << (r.alpha ? std::to_string(*r.alpha) : "-") << "\n"
      << "constant " << r.constant.str() << "\n"
      << "raw      " << r.raw.str() << "\n"
      << "checks   vanishes=" << (r.vanishes ? "yes" : "no") << " alpha_eq_d=" << (r.alpha_eq_d ? "yes" : "no")
      << "\n";
}

/// F(1, x, y) in a form plotting tools accept.
std::string affine_chart(const XForm& F) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : F.terms()) {
    Scalar a = c;
    if (a.sign() < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    std::string mono;
    if (e[1] > 0) mono += e[1] == 1 ? "x" : "x^" + std::to_string(e[1]);
    if (e[2] > 0) mono += (mono.empty() ? "" : "*") + (e[2] == 1 ? std::string("y") : "y^" + std::to_string(e[2]));
    if (mono.empty())
      os << a.str();
    else if (a.is_one())
      os << mono;
    else
      os << a.str() << "*" << mono;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

json betti_json(const BettiProfile& b) {
  json j;
  j["d"] = b.d;
  j["mu"] = b.mu;
  j["box"] = {b.box.t, b.box.x};
  json betti = json::array();
  for (const auto& [bd, m] : b.betti) betti.push_back({bd.t, bd.x, m});
  j["betti"] = betti;
  j["n0"] = b.n0;
  j["truncated"] = b.truncated;
  return j;
}

int bit_size(const XForm& F) {
  int bits = 0;
  for (const auto& [e, c] : F.terms()) {
    if (!c.is_rational()) return 64 - __builtin_clzll(c.modulus());
    const mpq_class& q = c.rational();
    bits = std::max<int>(bits, static_cast<int>(std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2),
                                                         mpz_sizeinbase(q.get_den_mpz_t(), 2))));
  }
  return bits;
}

int emit(const json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  const auto& phi = input.phi;
  if (opt.format == "text") {
    if (input.note) out << "note  " << *input.note << "\n";
    out << "valid  yes\nd      " << phi.degree() << "\nfield  " << to_string(phi.field()) << "\nu      " << phi.str()
        << "\n";
    return kOk;
  }
  json j;
  j["valid"] = true;
  j["d"] = phi.degree();
  j["field"] = to_string(phi.field());
  j["u"] = {phi.u(0).str(), phi.u(1).str(), phi.u(2).str()};
  if (input.note) j["note"] = *input.note;
  return emit(j, out);
}

int cmd_implicitize(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Input input = read_input(opt, in);
  const auto& phi = input.phi;
  const int d = phi.degree();
  std::vector<ImplicitResult> results;
  if (opt.method == "all") {
    for (Method m : {Method::Resultant, Method::MuBasis, Method::MovingLines})
      results.push_back(implicitize(phi, m, opt.seed));
  } else {
    results.push_back(implicitize(phi, parse_method(opt.method), opt.seed));
  }
  bool agree = true;
  bool checks = true;
  for (const auto& r : results) {
    agree = agree && r.F == results.front().F && r.beta == results.front().beta;
    checks = checks && r.vanishes && r.alpha_eq_d;
  }
  if (!opt.plot.empty()) {
    std::ofstream f(opt.plot);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write plot file '" + opt.plot + "'");
    f << "# F(1, x, y) = 0 with x = X1/X0, y = X2/X0\n" << affine_chart(results.front().F) << "\n";
  }
  if (opt.format == "text") {
    if (input.note) out << "note     " << *input.note << "\n";
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (k) out << "\n";
      implicit_text(results[k], d, out);
    }
    if (results.size() > 1) out << "\nagree    " << (agree ? "yes" : "no") << "\n";
  } else if (results.size() == 1) {
    json j = implicit_json(results.front(), d);
    if (input.note) j["note"] = *input.note;
    emit(j, out);
  } else {
    json j;
    j["d"] = d;
    j["method"] = "all";
    j["results"] = json::array();
    for (const auto& r : results) j["results"].push_back(implicit_json(r, d));
    j["agree"] = agree;
    if (input.note) j["note"] = *input.note;
    emit(j, out);
  }
  if (!agree || !checks) {
    err << json{{"error", to_string(ErrorCode::NotImplicit)},
                {"message", !agree ? "methods disagree" : "post-condition check failed"}}
               .dump()
        << "\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_mubasis(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  const MuBasis B = mu_basis(input.phi);
  if (opt.format == "text") {
    out << "mu     " << B.mu << "\nP      " << B.P.L.str() << "\nQ      " << B.Q.L.str() << "\nu      "
        << B.ratio.str() << " * (P x Q)\n";
    return kOk;
  }
  json j;
  j["d"] = input.phi.degree();
  j["mu"] = B.mu;
  j["P"] = B.P.L.str();
  j["Q"] = B.Q.L.str();
  j["P_coefficients"] = coefficient_array(B.P.L);
  j["Q_coefficients"] = coefficient_array(B.Q.L);
  j["ratio"] = B.ratio.str();
  return emit(j, out);
}

int cmd_moving_space(const Options& opt, std::istream& in, std::ostream& out) {
  if (opt.tdeg < 0 || opt.xdeg < 0) throw Error(ErrorCode::InvalidArgument, "--tdeg and --xdeg must be non-negative");
  Input input = read_input(opt, in);
  auto basis = moving_space(input.phi, opt.tdeg, opt.xdeg);
  if (opt.format == "text") {
    out << "bidegree (" << opt.tdeg << "," << opt.xdeg << ")  dim " << basis.size() << "\n";
    for (const auto& c : basis) out << "  " << c.L.str() << "\n";
    return kOk;
  }
  json j;
  j["d"] = input.phi.degree();
  j["bidegree"] = {opt.tdeg, opt.xdeg};
  j["dim"] = basis.size();
  j["basis"] = json::array();
  for (const auto& c : basis) j["basis"].push_back(c.L.str());
  return emit(j, out);
}

int cmd_rees(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  ReesOptions ro;
  ro.t_max = opt.tmax;
  ro.x_max = opt.xmax;
  ro.jobs = opt.jobs;
  ro.widen = opt.widen;
  ro.modular = !opt.exact;
  const BettiProfile b = minimal_generators(input.phi, ro);
  if (opt.format == "text") {
    out << "d " << b.d << "  mu " << b.mu << "  D " << b.D << "  box (" << b.box.t << "," << b.box.x << ")\n"
        << "B(K) = " << multiset_str(b.multiset()) << "\nn0   = " << b.n0 << "\n"
        << "truncated " << (b.truncated ? "yes" : "no") << "\n";
    for (const auto& [bd, m] : b.beyond) out << "beyond box: (" << bd.t << "," << bd.x << ") x" << m << "\n";
    for (const auto& g : b.generators)
      out << "  (" << g.bidegree().t << "," << g.bidegree().x << ")  " << g.L.str() << "\n";
    return kOk;
  }
  return emit(betti_json(b), out);
}

int cmd_tracing_index(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  const int beta = tracing_index(input.phi, opt.seed);
  if (opt.format == "text") {
    out << "beta " << beta << "\n";
    return kOk;
  }
  return emit(json{{"d", input.phi.degree()}, {"beta", beta}, {"seed", opt.seed}}, out);
}

int cmd_survey(const Options& opt, std::ostream& out) {
  SurveyOptions so;
  so.d = opt.degree;
  so.count = opt.count;
  so.seed = opt.seed;
  so.mu = opt.mu;
  so.coeff_bound = opt.bound;
  so.jobs = opt.jobs;
  const SurveyReport r = survey(so);
  if (opt.format == "text") {
    out << "d " << so.d << "  samples " << r.samples.size() << "  seed " << so.seed << "\n"
        << "rejected: common factor " << r.rejected_common_factor << ", improper " << r.rejected_improper
        << ", mu mismatch " << r.rejected_mu << "\n";
    for (const auto& row : r.table)
      out << std::setw(4) << row.count << "  mu " << row.mu << "  n0 " << row.n0 << "  " << multiset_str(row.betti)
          << "\n";
    for (const auto& f : r.flags) out << "flag: " << f << "\n";
    return kOk;
  }
  json j;
  j["d"] = so.d;
  j["count"] = r.samples.size();
  j["seed"] = so.seed;
  j["mu_filter"] = so.mu ? json(*so.mu) : json(nullptr);
  j["rejected"] = {{"common_factor", r.rejected_common_factor},
                   {"improper", r.rejected_improper},
                   {"mu", r.rejected_mu}};
  j["table"] = json::array();
  for (const auto& row : r.table) {
    json betti = json::array();
    for (const auto& b : row.betti) {
      if (!betti.empty() && betti.back()[0] == b.t && betti.back()[1] == b.x)
        betti.back()[2] = betti.back()[2].get<int>() + 1;
      else
        betti.push_back({b.t, b.x, 1});
    }
    j["table"].push_back({{"mu", row.mu}, {"n0", row.n0}, {"betti", betti}, {"count", row.count}});
  }
  j["flags"] = r.flags;
  return emit(j, out);
}

int cmd_bench(const Options& opt, std::ostream& out) {
  if (opt.dmin < 1 || opt.dmax > 12 || opt.dmin > opt.dmax)
    throw Error(ErrorCode::InvalidArgument, "degree sweep must satisfy 1 <= dmin <= dmax <= 12");
  struct Row {
    int d, mu;
    std::array<int, 3> size;
    std::array<double, 3> ms;
    std::array<int, 3> bits;
  };
  std::vector<Row> rows;
  const std::array<Method, 3> methods{Method::Resultant, Method::MuBasis, Method::MovingLines};
  for (int d = opt.dmin; d <= opt.dmax; ++d) {
    Random rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(d));
    Parametrization phi = opt.mu ? rng.parametrization_with_mu(d, *opt.mu, opt.bound) : rng.parametrization(d, opt.bound);
    Row row{d, mu(phi), {}, {}, {}};
    for (std::size_t k = 0; k < methods.size(); ++k) {
      auto start = std::chrono::steady_clock::now();
      ImplicitResult r = implicitize(phi, methods[k], opt.seed);
      auto stop = std::chrono::steady_clock::now();
      row.size[k] = r.matrix_size;
      row.ms[k] = std::chrono::duration<double, std::milli>(stop - start).count();
      row.bits[k] = bit_size(r.raw);
    }
    rows.push_back(row);
  }
  if (opt.bench_format == "csv") {
    out << "d,mu,size_resultant,size_mubasis,size_movinglines,ms_resultant,ms_mubasis,ms_movinglines,"
           "bits_resultant,bits_mubasis,bits_movinglines\n";
    for (const auto& r : rows) {
      out << r.d << "," << r.mu;
      for (int s : r.size) out << "," << s;
      for (double m : r.ms) out << "," << std::fixed << std::setprecision(3) << m;
      for (int b : r.bits) out << "," << b;
      out << "\n";
    }
    return kOk;
  }
  if (opt.bench_format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"d", r.d}, {"mu", r.mu}, {"sizes", r.size}, {"ms", r.ms}, {"bits", r.bits}});
    return emit(j, out);
  }
  out << " d  mu   sizes (res/mub/mov)      time ms (res/mub/mov)        bits (res/mub/mov)\n";
  for (const auto& r : rows) {
    out << std::setw(2) << r.d << "  " << std::setw(2) << r.mu << "   " << std::setw(4) << r.size[0] << std::setw(5)
        << r.size[1] << std::setw(5) << r.size[2] << "   " << std::fixed << std::setprecision(2);
    for (double m : r.ms) out << std::setw(10) << m;
    out << "   ";
    for (int b : r.bits) out << std::setw(6) << b;
    out << "\n";
  }
  return kOk;
}

void add_input_options(CLI::App* sub, Options& opt) {
  sub->add_option("--param", opt.param, "u0 u1 u2 as forms in t0, t1")->expected(3);
  sub->add_option("--affine", opt.affine, "a b c for t -> (a/c, b/c), polynomials in t")->expected(3);
  sub->add_option("--field", opt.field, "rational or prime:P");
}

void add_format(CLI::App* sub, Options& opt, std::vector<std::string> formats) {
  sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember(std::move(formats)));
}

json error_json(const Error& e, std::optional<int> argument = std::nullopt,
                std::optional<std::size_t> position = std::nullopt) {
  json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (argument) j["argument"] = *argument;
  if (position) j["position"] = *position;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact implicitization of rational plane curves", "mocurve"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");

  auto* validate = app.add_subcommand("validate", "Check a parametrization");
  add_input_options(validate, opt);
  add_format(validate, opt, {"json", "text"});

  auto* implicit = app.add_subcommand("implicitize", "Compute the implicit equation");
  add_input_options(implicit, opt);
  add_format(implicit, opt, {"json", "text"});
  implicit->add_option("--method", opt.method, "resultant, mubasis, movinglines or all")
      ->check(CLI::IsMember({"resultant", "mubasis", "movinglines", "all"}));
  implicit->add_option("--seed", opt.seed, "seed for the tracing index");
  implicit->add_option("--plot", opt.plot, "write F(1, x, y) to this file");

  auto* mub = app.add_subcommand("mubasis", "Compute a mu-basis");
  add_input_options(mub, opt);
  add_format(mub, opt, {"json", "text"});

  auto* ms = app.add_subcommand("moving-space", "Basis of the moving curves of one bidegree");
  add_input_options(ms, opt);
  add_format(ms, opt, {"json", "text"});
  ms->add_option("--tdeg", opt.tdeg, "t-degree")->required();
  ms->add_option("--xdeg", opt.xdeg, "X-degree")->required();

  auto* rees = app.add_subcommand("rees", "Minimal generators of the moving-curve ideal");
  add_input_options(rees, opt);
  add_format(rees, opt, {"json", "text"});
  rees->add_option("--tmax", opt.tmax, "largest t-degree scanned (default d)");
  rees->add_option("--xmax", opt.xmax, "largest X-degree scanned (default d)");
  rees->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  rees->add_flag("--widen", opt.widen, "rescan a box two larger to look for generators outside");
  rees->add_flag("--exact", opt.exact, "integer elimination only, no modular ranks");

  auto* ti = app.add_subcommand("tracing-index", "Size of the generic fiber");
  add_input_options(ti, opt);
  add_format(ti, opt, {"json", "text"});
  ti->add_option("--seed", opt.seed, "random seed");

  auto* sv = app.add_subcommand("survey", "Betti profiles of random proper parametrizations");
  add_format(sv, opt, {"json", "text"});
  sv->add_option("--degree,-d", opt.degree, "curve degree (1..12)")->required();
  sv->add_option("--count,-n", opt.count, "number of samples");
  sv->add_option("--seed", opt.seed, "random seed");
  sv->add_option("--mu", opt.mu, "keep only this mu");
  sv->add_option("--bound", opt.bound, "coefficient bound");
  sv->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Matrix sizes and timings of the three methods");
  bench->add_option("--format", opt.bench_format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  bench->add_option("--dmin", opt.dmin, "smallest degree");
  bench->add_option("--dmax", opt.dmax, "largest degree (at most 12)");
  bench->add_option("--seed", opt.seed, "random seed");
  bench->add_option("--mu", opt.mu, "draw inputs with this mu");
  bench->add_option("--bound", opt.bound, "coefficient bound");

  // Values such as "-t0^2" would otherwise be read as option names.
  std::vector<std::string> argv = args;
  for (std::size_t i = 0; i < argv.size(); ++i)
    if (argv[i] == "--param" || argv[i] == "--affine")
      for (std::size_t k = i + 1; k < argv.size() && k <= i + 3; ++k)
        if (argv[k].size() > 1 && argv[k][0] == '-' && argv[k][1] != '-') argv[k] = " " + argv[k];

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "USAGE"}, {"message", e.what()}}.dump() << "\n";
    return kInputError;
  }

  for (auto* values : {&opt.param, &opt.affine})
    for (auto& v : *values)
      if (v.size() > 1 && v[0] == ' ' && v[1] == '-') v.erase(0, 1);

  try {
    if (*validate) return cmd_validate(opt, in, out);
    if (*implicit) return cmd_implicitize(opt, in, out, err);
    if (*mub) return cmd_mubasis(opt, in, out);
    if (*ms) return cmd_moving_space(opt, in, out);
    if (*rees) return cmd_rees(opt, in, out);
    if (*ti) return cmd_tracing_index(opt, in, out);
    if (*sv) return cmd_survey(opt, out);
    if (*bench) return cmd_bench(opt, out);
  } catch (const InputError& e) {
    err << error_json(e.error, e.argument, e.position).dump() << "\n";
    return is_input_error(e.error.code()) ? kInputError : kInternalError;
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return is_input_error(e.code()) ? kInputError : kInternalError;
  } catch (const std::exception& e) {
    err << json{{"error", "INTERNAL"}, {"message", e.what()}}.dump() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace mocurve::cli
