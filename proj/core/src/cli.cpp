#include "zetalab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalab/critical_line.hpp"
#include "zetalab/lemma_audit.hpp"
#include "zetalab/prime_sums.hpp"
#include "zetalab/sieve.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::cli {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string steps_csv(const AuditReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "step_id,lhs,rhs,holds,note\n";
  for (const auto& s : rep.steps)
    os << s.step_id << ',' << s.lhs << ',' << s.rhs << ','
       << (s.holds ? "true" : "false") << ',' << csv_quote(s.note) << '\n';
  return os.str();
}

const char* method_name(PrimeSumMethod m) {
  return m == PrimeSumMethod::direct ? "direct" : "mobius_log_zeta";
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open --out path: " + out_path);
  out << payload;
}

struct Options {
  std::string format = "csv";
  std::string out_path;
  std::string params_path;

  double sigma = 0.0, t = 0.0, tol = 1e-12;
  double from = 0.0, to = 0.0, step = 0.05, zero_tol = 1e-9;
  long n = 0;
  long grid = 10'000;
  int64_t lo = 1, hi = 0, x = 0;
  double sigma_prime = 0.0, delta = 0.0;
  uint32_t cutoff = 1'000'000;
  double sum_tol = 1e-4;
  std::string lemma;
  double series_x = 0.0, series_eps = 0.05, cp_eps = 0.1;
  int series_K = 500;
  long p = 0;
  int m = 1;
  double a = 0.0, k = 0.0, t0 = 0.0;
};

AuditParams load_params(const Options& o) {
  if (o.params_path.empty()) return AuditParams{};
  return params_from_file(o.params_path);
}

std::string run_zeta(const Options& o) {
  EvalSettings settings;
  settings.target_tol = o.tol;
  const EvalResult r = zeta_eval(Complex(o.sigma, o.t), settings);
  if (o.format == "json") {
    const json doc = {{"re", r.value.real()},
                      {"im", r.value.imag()},
                      {"abs_error_bound", r.abs_error_bound},
                      {"terms_used", r.terms_used}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os.precision(17);
  os << "re,im,abs_error_bound,terms_used\n"
     << r.value.real() << ',' << r.value.imag() << ',' << r.abs_error_bound
     << ',' << r.terms_used << '\n';
  return os.str();
}

std::string run_zeros(const Options& o) {
  const auto zeros = scan_zeros(o.from, o.to, o.step, o.zero_tol);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& z : zeros)
      arr.push_back({{"index", z.index},
                     {"ordinate", z.ordinate},
                     {"bracket_lo", z.bracket_lo},
                     {"bracket_hi", z.bracket_hi}});
    return json{{"zeros", arr}}.dump(2) + "\n";
  }
  return zeros_to_csv(zeros);
}

std::string run_gap(const Options& o) {
  const GapPoint g = find_gap_point(o.n, o.grid);
  if (o.format == "json") {
    const json doc = {{"n", g.n},
                      {"T", g.T},
                      {"min_distance", g.min_distance},
                      {"product_with_log", g.product_with_log}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os.precision(17);
  os << "n,T,min_distance,product_with_log\n"
     << g.n << ',' << g.T << ',' << g.min_distance << ','
     << g.product_with_log << '\n';
  return os.str();
}

std::string run_sieve(const Options& o) {
  const SieveTable t = sieve_build(o.lo, o.hi);
  if (o.format == "json") {
    json arr = json::array();
    for (int64_t n = t.lo; n <= t.hi; ++n)
      arr.push_back({{"n", n},
                     {"mu", t.mu_at(n)},
                     {"lambda", t.lambda_at(n)},
                     {"M", t.M_at(n)},
                     {"L", t.L_at(n)}});
    return json{{"table", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n,mu,lambda,M,L\n";
  for (int64_t n = t.lo; n <= t.hi; ++n)
    os << n << ',' << int(t.mu_at(n)) << ',' << int(t.lambda_at(n)) << ','
       << t.M_at(n) << ',' << t.L_at(n) << '\n';
  return os.str();
}

std::string run_turan(const Options& o) {
  const double v = turan_sum(o.x);
  if (o.format == "json")
    return json{{"x", o.x}, {"turan_sum", v}}.dump(2) + "\n";
  std::ostringstream os;
  os.precision(17);
  os << "x,turan_sum\n" << o.x << ',' << v << '\n';
  return os.str();
}

std::string run_primes(const Options& o) {
  const PrimeSumResult pz = prime_zeta(Complex(o.sigma, o.t));
  EvalSettings sum_settings;
  sum_settings.target_tol = o.sum_tol;
  const PrimeSumResult ls = log_prime_sum(o.sigma, o.cutoff, sum_settings);
  if (o.format == "json") {
    const json doc = {{"sigma", o.sigma},
                      {"t", o.t},
                      {"prime_zeta_re", pz.value.real()},
                      {"prime_zeta_im", pz.value.imag()},
                      {"prime_zeta_tail", pz.tail_bound},
                      {"log_prime_sum", ls.value.real()},
                      {"log_prime_sum_tail", ls.tail_bound},
                      {"log_prime_sum_method", method_name(ls.method)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os.precision(17);
  os << "sigma,t,prime_zeta_re,prime_zeta_im,prime_zeta_tail,"
        "log_prime_sum,log_prime_sum_tail,log_prime_sum_method\n"
     << o.sigma << ',' << o.t << ',' << pz.value.real() << ','
     << pz.value.imag() << ',' << pz.tail_bound << ',' << ls.value.real()
     << ',' << ls.tail_bound << ',' << method_name(ls.method) << '\n';
  return os.str();
}

std::string report_payload(const AuditReport& rep, const Options& o) {
  if (o.format == "json") return rep.to_json() + "\n";
  return steps_csv(rep);
}

std::string run_audit(const Options& o) {
  const AuditParams params = load_params(o);
  LemmaPoint pt;
  pt.t = o.t;
  pt.t0 = o.t0;
  pt.sigma = o.sigma;
  pt.sigma_prime = o.sigma_prime;
  pt.delta = o.delta;
  pt.p = o.p;
  pt.n = o.n;
  pt.m = o.m;
  pt.a = o.a;
  pt.k = o.k;
  const AuditReport rep =
      audit_lemma(lemma_id_from_string(o.lemma), params, pt);
  return report_payload(rep, o);
}

std::string run_chain(const Options& o) {
  const AuditReport rep = audit_chain(o.n, load_params(o));
  return report_payload(rep, o);
}

std::string run_series(const Options& o, bool have_x) {
  if (have_x) {
    const SeriesValue alpha = series_alpha(o.series_x, o.series_K);
    const SeriesValue beta = series_beta(o.series_x, o.series_K, o.series_eps);
    if (o.format == "json") {
      const json doc = {{"x", o.series_x},
                        {"alpha", alpha.value},
                        {"alpha_scaled", alpha.scaled},
                        {"alpha_terms", alpha.terms},
                        {"beta", beta.value},
                        {"beta_scaled", beta.scaled},
                        {"beta_terms", beta.terms}};
      return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os.precision(17);
    os << "x,alpha,alpha_scaled,alpha_terms,beta,beta_scaled,beta_terms\n"
       << o.series_x << ',' << alpha.value << ',' << alpha.scaled << ','
       << alpha.terms << ',' << beta.value << ',' << beta.scaled << ','
       << beta.terms << '\n';
    return os.str();
  }
  const auto rows = checkpoint_series(o.x, o.cp_eps);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"x", r.x},
                     {"M", r.M},
                     {"L", r.L},
                     {"turan_sum", r.turan},
                     {"m_over_sqrt", r.m_over_sqrt},
                     {"m_over_x_eps", r.m_over_x_eps}});
    return json{{"rows", arr}}.dump(2) + "\n";
  }
  return series_to_csv(rows);
}

std::string run_pnt(const Options& o) {
  const PntError e = pnt_error(o.x);
  if (o.format == "json") {
    const json doc = {{"x", o.x},
                      {"pi_x", e.pi_x},
                      {"li_x", e.li_x},
                      {"rel_err", e.rel_err}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os.precision(17);
  os << "x,pi_x,li_x,rel_err\n"
     << o.x << ',' << e.pi_x << ',' << e.li_x << ',' << e.rel_err << '\n';
  return os.str();
}

void add_common(CLI::App* cmd, Options* o) {
  cmd->add_option("--format", o->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o->out_path, "write output to this file");
}

}  // namespace

int run(int argc, const char* const* argv) {
  Options o;
  CLI::App app{"numerical instrumentation for the critical-strip toolkit"};
  app.require_subcommand(1);

  auto* zeta = app.add_subcommand("zeta", "evaluate zeta(sigma + it)");
  zeta->add_option("--sigma", o.sigma)->required();
  zeta->add_option("--t", o.t)->required();
  zeta->add_option("--tol", o.tol, "target error bound")
      ->capture_default_str();
  add_common(zeta, &o);

  auto* zeros = app.add_subcommand("zeros", "scan Hardy Z sign changes");
  zeros->add_option("--from", o.from)->required();
  zeros->add_option("--to", o.to)->required();
  zeros->add_option("--step", o.step)->capture_default_str();
  zeros->add_option("--tol", o.zero_tol)->capture_default_str();
  add_common(zeros, &o);

  auto* gap = app.add_subcommand("gap", "max-distance point in (n, n+1)");
  gap->add_option("--n", o.n)->required();
  gap->add_option("--grid", o.grid)->capture_default_str();
  add_common(gap, &o);

  auto* sieve = app.add_subcommand("sieve", "mu/lambda table over [from, to]");
  sieve->add_option("--from", o.lo)->capture_default_str();
  sieve->add_option("--to", o.hi)->required();
  add_common(sieve, &o);

  auto* turan = app.add_subcommand("turan", "sum of lambda(n)/n up to x");
  turan->add_option("--x", o.x)->required();
  add_common(turan, &o);

  auto* primes = app.add_subcommand("primes", "prime zeta and log-prime sums");
  primes->add_option("--sigma", o.sigma)->required();
  primes->add_option("--t", o.t)->capture_default_str();
  primes->add_option("--cutoff", o.cutoff)->capture_default_str();
  primes->add_option("--sum-tol", o.sum_tol,
                     "tail tolerance for the direct log-prime sum")
      ->capture_default_str();
  add_common(primes, &o);

  auto* audit = app.add_subcommand("audit", "audit one bound numerically");
  audit->add_option("--lemma", o.lemma, "one of L1..L3, L5..L10")->required();
  audit->add_option("--params", o.params_path, "key = value constants file");
  audit->add_option("--t", o.t);
  audit->add_option("--t0", o.t0);
  audit->add_option("--sigma", o.sigma);
  audit->add_option("--sigma-prime", o.sigma_prime);
  audit->add_option("--delta", o.delta);
  audit->add_option("--p", o.p);
  audit->add_option("--n", o.n);
  audit->add_option("--m", o.m)->capture_default_str();
  audit->add_option("--a", o.a);
  audit->add_option("--k", o.k);
  add_common(audit, &o);

  auto* chain = app.add_subcommand("chain", "walk the full inequality chain");
  chain->add_option("--n", o.n)->required();
  chain->add_option("--params", o.params_path, "key = value constants file");
  add_common(chain, &o);

  auto* series =
      app.add_subcommand("series", "checkpoint tables or power series");
  auto* sx = series->add_option("--x", o.series_x, "power-series argument");
  auto* sn = series->add_option("--n", o.x, "checkpoint-table bound");
  series->add_option("--K", o.series_K)->capture_default_str();
  series->add_option("--eps", o.series_eps)->capture_default_str();
  series->add_option("--cp-eps", o.cp_eps, "exponent offset for |M|/x^(1/2+eps)")
      ->capture_default_str();
  sx->excludes(sn);
  add_common(series, &o);

  auto* pnt = app.add_subcommand("pnt", "pi(x) against li(x)");
  pnt->add_option("--x", o.x)->required();
  add_common(pnt, &o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string payload;
    if (*zeta) payload = run_zeta(o);
    else if (*zeros) payload = run_zeros(o);
    else if (*gap) payload = run_gap(o);
    else if (*sieve) payload = run_sieve(o);
    else if (*turan) payload = run_turan(o);
    else if (*primes) payload = run_primes(o);
    else if (*audit) payload = run_audit(o);
    else if (*chain) payload = run_chain(o);
    else if (*series) {
      if (!*sx && !*sn)
        throw std::invalid_argument("series requires --x or --n");
      payload = run_series(o, bool(*sx));
    } else if (*pnt) payload = run_pnt(o);
    emit(payload, o.out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ZetaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("zetalab");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& a : full) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data());
}

}  // namespace zetalab::cli
