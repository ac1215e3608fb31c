#include "qredux/cli.hpp"

#include "qredux/asymptotics.hpp"
#include "qredux/compress.hpp"
#include "qredux/entropy.hpp"
#include "qredux/optim.hpp"
#include "qredux/oracle.hpp"
#include "qredux/parallel.hpp"
#include "qredux/priors.hpp"
#include "qredux/spectrum.hpp"
#include "qredux/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace qredux::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json big_to_json(const specfun::BigInt& v) {
  if (v <= specfun::BigInt(std::numeric_limits<std::uint64_t>::max()))
    return v.convert_to<std::uint64_t>();
  return v.str(); // decimal string beyond 64 bits
}

void emit(const std::string& doc, const std::string& out_path, std::ostream& out) {
  const char* tail = doc.ends_with('\n') ? "" : "\n";
  if (out_path.empty()) {
    out << doc << tail;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << doc << tail;
  }
}

// "a,b,c" or "start:stop:step" (inclusive stop within 1e-12 slack).
std::vector<double> parse_grid(const std::string& s, const char* flag) {
  std::vector<double> vals;
  auto parse_one = [&](const std::string& tok) {
    try {
      std::size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(flag), "cannot parse '" + tok + "' as a number");
    }
  };
  if (s.find(':') != std::string::npos) {
    std::stringstream ss(s);
    std::string a, b, c;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    std::getline(ss, c, ':');
    if (c.empty()) throw CLI::ValidationError(std::string(flag), "range needs start:stop:step");
    double start = parse_one(a), stop = parse_one(b), step = parse_one(c);
    if (step <= 0) throw CLI::ValidationError(std::string(flag), "step must be > 0");
    for (double v = start; v <= stop + 1e-12; v += step) vals.push_back(v);
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(parse_one(tok));
  }
  // an empty grid is legitimate (start beyond stop): sweeps emit a
  // header-only document
  return vals;
}

void check_u(double u) {
  if (!(u < 1.0)) throw CLI::ValidationError("--u", "must be < 1");
}
void check_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw CLI::ValidationError("--r", "must lie in [0, 1]");
}
void check_n(int n) {
  if (n < 1) throw CLI::ValidationError("--n", "must be >= 1");
}

priors::PriorSpec make_prior(const std::string& kind, double u, const std::string& fname) {
  if (kind == "qu") return priors::PriorSpec::qu(u);
  if (kind == "kubo") return priors::PriorSpec::kubo_mori(u);
  if (kind == "monotone") {
    if (fname == "sld") return priors::PriorSpec::monotone(priors::monotone_sld());
    if (fname == "kmb") return priors::PriorSpec::monotone(priors::monotone_kmb());
    if (fname == "exp") return priors::PriorSpec::monotone(priors::monotone_exp());
    throw CLI::ValidationError("--f", "must be one of sld|kmb|exp");
  }
  throw CLI::ValidationError("--prior", "must be one of qu|kubo|monotone");
}

json spectrum_to_json(const spectrum::SpectrumSummary& s) {
  json levels = json::array();
  for (const auto& lv : s.levels) {
    json j;
    j["h"] = lv.h;
    j["lambda"] = lv.lambda;
    j["multiplicity"] = big_to_json(lv.multiplicity);
    levels.push_back(std::move(j));
  }
  return levels;
}

// ---- subcommand payloads -------------------------------------------------

struct CommonOut {
  bool json_out = false;
  std::string out_path;
};

int cmd_zeta(int n, double u, bool entries, const CommonOut& o, std::ostream& out) {
  check_n(n);
  check_u(u);
  zeta::ZetaMatrix zm = entries ? zeta::zeta_matrix(n, u) : zeta::zeta_spectral(n, u);
  json j;
  j["n"] = n;
  j["u"] = u;
  j["distinct_eigenvalues"] = spectrum_to_json(zm.spectral);
  j["trace_error"] = zm.trace_error;
  if (entries && zm.entries) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < zm.entries->rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < zm.entries->cols(); ++k) row.push_back((*zm.entries)(i, k));
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
  }
  if (o.json_out || !o.out_path.empty()) {
    emit(j.dump(), o.out_path, out);
  } else {
    out << "zeta n=" << n << " u=" << fmt(u) << " trace_error=" << fmt(zm.trace_error) << "\n";
    for (const auto& lv : zm.spectral.levels)
      out << "  h=" << lv.h << " lambda=" << fmt(lv.lambda) << " mult=" << lv.multiplicity.str()
          << "\n";
  }
  return 0;
}

int cmd_spectrum(int n, double u, const std::string& prior, const std::string& fname,
                 const CommonOut& o, std::ostream& out) {
  check_n(n);
  check_u(u);
  spectrum::SpectrumSummary s;
  if (prior == "qu")
    s = spectrum::spectrum_qu(n, u);
  else
    s = spectrum::spectrum_from_radial_prior(n, make_prior(prior, u, fname));
  json j;
  j["n"] = n;
  if (prior == "qu" || prior == "kubo") j["u"] = u;
  j["prior"] = prior;
  j["levels"] = spectrum_to_json(s);
  if (o.json_out || !o.out_path.empty()) {
    emit(j.dump(), o.out_path, out);
  } else {
    out << "spectrum n=" << n << " prior=" << prior << "\n";
    for (const auto& lv : s.levels)
      out << "  h=" << lv.h << " lambda=" << fmt(lv.lambda) << " mult=" << lv.multiplicity.str()
          << "\n";
  }
  return 0;
}

int cmd_redundancy(int n, double u, double r, const CommonOut& o, std::ostream& out) {
  check_n(n);
  check_u(u);
  check_r(r);
  auto rep = entropy::redundancy_report(n, u, r);
  json j;
  j["n"] = n;
  j["u"] = u;
  j["r"] = r;
  j["relative_entropy"] = rep.relative_entropy;
  j["asymptotic"] = *rep.asymptotic_value;
  j["residual"] = *rep.residual;
  if (o.json_out || !o.out_path.empty())
    emit(j.dump(), o.out_path, out);
  else
    out << fmt(rep.relative_entropy) << "\n";
  return 0;
}

int cmd_vn_entropy(int n, double u, const CommonOut& o, std::ostream& out) {
  check_n(n);
  check_u(u);
  double s = entropy::von_neumann_entropy_zeta(n, u);
  if (o.json_out || !o.out_path.empty()) {
    json j;
    j["n"] = n;
    j["u"] = u;
    j["von_neumann_entropy"] = s;
    j["asymptotic"] = asymptotics::vn_entropy_asymptotic(u).value_at(n);
    emit(j.dump(), o.out_path, out);
  } else {
    out << fmt(s) << "\n";
  }
  return 0;
}

int cmd_asymptotics(const std::string& which, double u, std::optional<double> r, int n,
                    const CommonOut& o, std::ostream& out) {
  check_n(n);
  asymptotics::AsymptoticValue v;
  if (which == "a3") {
    check_u(u);
    if (!r) throw CLI::ValidationError("--r", "required for a3");
    check_r(*r);
    if (*r == 1.0)
      v = asymptotics::boundary_asymptotic(u);
    else
      v = asymptotics::redundancy_asymptotic(u, *r);
  } else if (which == "a4") {
    check_u(u);
    v = asymptotics::redundancy_asymptotic(u, 0.0);
  } else if (which == "a5") {
    if (!(u <= 1.0)) throw CLI::ValidationError("--u", "must be <= 1 for a5");
    v = asymptotics::boundary_asymptotic(u);
  } else if (which == "B2") {
    check_u(u);
    v = asymptotics::vn_entropy_asymptotic(u);
  } else if (which == "cb12") {
    check_u(u);
    if (!r) throw CLI::ValidationError("--r", "required for cb12");
    check_r(*r);
    v = asymptotics::cb_redundancy_classical(u, *r);
  } else if (which == "cb11") {
    v = asymptotics::cb_minimax_classical();
  } else if (which == "cb-boundary") {
    v = asymptotics::cb_boundary_classical();
  } else {
    throw CLI::ValidationError("--which", "must be one of a3|a4|a5|B2|cb12|cb11|cb-boundary");
  }
  json j;
  j["which"] = which;
  j["n"] = n;
  if (v.linear_coefficient != 0.0) j["linear_coefficient"] = v.linear_coefficient;
  j["leading_coefficient"] = v.leading_coefficient;
  j["constant"] = v.constant_term;
  j["value_at_n"] = v.value_at(n);
  j["error_order"] = v.error_order;
  if (o.json_out || !o.out_path.empty())
    emit(j.dump(), o.out_path, out);
  else
    out << fmt(v.value_at(n)) << "\n";
  return 0;
}

int cmd_minimax(double tol, const CommonOut& o, std::ostream& out) {
  auto res = optim::solve_minimax(tol);
  json j;
  j["u_star"] = res.u_star;
  j["r_star"] = res.r_star;
  j["f_value"] = res.f_value;
  j["constant"] = res.constant;
  j["residual"] = res.tolerance_achieved;
  if (o.json_out || !o.out_path.empty())
    emit(j.dump(), o.out_path, out);
  else
    out << "u*=" << fmt(res.u_star) << " r*=" << fmt(res.r_star)
        << " constant=" << fmt(res.constant) << "\n";
  return 0;
}

int cmd_maximin(double tol, const CommonOut& o, std::ostream& out) {
  auto res = optim::solve_maximin(tol);
  json j;
  j["u_star"] = res.u_star;
  j["constant"] = res.constant;
  j["residual"] = res.residual;
  if (o.json_out || !o.out_path.empty())
    emit(j.dump(), o.out_path, out);
  else
    out << "u*=" << fmt(res.u_star) << " constant=" << fmt(res.constant) << "\n";
  return 0;
}

int cmd_compress(int n, double u, std::optional<double> epsilon, const std::string& epsilons,
                 std::optional<double> r, const CommonOut& o, std::ostream& out) {
  check_n(n);
  check_u(u);
  if (r) check_r(*r);
  if (!epsilon && epsilons.empty())
    throw CLI::ValidationError("--epsilon", "either --epsilon or --epsilons is required");

  if (!epsilons.empty()) {
    // sweep mode: CSV
    auto eps = parse_grid(epsilons, "--epsilons");
    for (double e : eps)
      if (!(e > 0.0 && e < 1.0)) throw CLI::ValidationError("--epsilons", "values must lie in (0, 1)");
    std::ostringstream csv;
    csv << "epsilon,dim,rate_qubits_per_signal,prior_mass";
    if (r) csv << ",retained_weight";
    csv << "\n";
    for (double e : eps) {
      auto p = compress::plan(n, u, e);
      csv << fmt(e) << "," << p.subspace_dim.str() << "," << fmt(p.rate_qubits_per_signal) << ","
          << fmt(p.prior_mass);
      if (r) csv << "," << fmt(compress::retained_weight(p, *r));
      csv << "\n";
    }
    emit(csv.str(), o.out_path, out);
    return 0;
  }

  if (!(*epsilon > 0.0 && *epsilon < 1.0))
    throw CLI::ValidationError("--epsilon", "must lie in (0, 1)");
  auto p = compress::plan(n, u, *epsilon);
  json j;
  j["n"] = n;
  j["u"] = u;
  j["epsilon"] = *epsilon;
  j["included_levels"] = p.included_levels;
  j["subspace_dim"] = big_to_json(p.subspace_dim);
  j["rate_qubits_per_signal"] = p.rate_qubits_per_signal;
  j["prior_mass"] = p.prior_mass;
  if (r) j["retained_weight"] = compress::retained_weight(p, *r);
  if (o.json_out || !o.out_path.empty())
    emit(j.dump(), o.out_path, out);
  else
    out << "dim=" << p.subspace_dim.str() << " rate=" << fmt(p.rate_qubits_per_signal)
        << " prior_mass=" << fmt(p.prior_mass) << "\n";
  return 0;
}

int cmd_sweep(const std::string& mode, const std::string& ns, const std::string& us,
              const std::string& rs, const CommonOut& o, std::ostream& out) {
  constexpr std::size_t kMaxRows = 1000000;
  std::ostringstream csv;
  if (mode == "quantum-term") {
    auto rvals = parse_grid(rs.empty() ? "0:1:0.01" : rs, "--r");
    if (rvals.size() > kMaxRows) throw CLI::ValidationError("--r", "grid too large");
    csv << "r,quantum_term\n";
    for (double r : rvals) {
      check_r(r);
      csv << fmt(r) << "," << fmt(asymptotics::quantum_term(r)) << "\n";
    }
  } else if (mode == "bayes-constant") {
    auto uvals = parse_grid(us.empty() ? "-0.2:0.99:0.01" : us, "--u");
    if (uvals.size() > kMaxRows) throw CLI::ValidationError("--u", "grid too large");
    csv << "u,bayes_constant\n";
    for (double u : uvals) {
      check_u(u);
      csv << fmt(u) << "," << fmt(optim::bayes_constant_d8(u)) << "\n";
    }
  } else if (mode == "redundancy") {
    if (ns.empty() || us.empty() || rs.empty())
      throw CLI::ValidationError("--n", "redundancy sweep needs --n, --u and --r grids");
    auto nvals = parse_grid(ns, "--n");
    auto uvals = parse_grid(us, "--u");
    auto rvals = parse_grid(rs, "--r");
    if (nvals.size() * uvals.size() * rvals.size() > kMaxRows)
      throw CLI::ValidationError("--n", "grid too large (over 1e6 rows)");
    csv << "n,u,r,exact,asymptotic,residual\n";
    struct Row {
      double n, u, r;
      double exact, asym, resid;
    };
    std::vector<Row> rows;
    for (double nv : nvals)
      for (double uv : uvals)
        for (double rv : rvals) {
          int n = static_cast<int>(std::llround(nv));
          check_n(n);
          check_u(uv);
          check_r(rv);
          rows.push_back(Row{double(n), uv, rv, 0, 0, 0});
        }
    const int nt = max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt) if (nt > 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows.size()); ++i) {
      auto& row = rows[i];
      auto rep = entropy::redundancy_report(static_cast<int>(row.n), row.u, row.r);
      row.exact = rep.relative_entropy;
      row.asym = *rep.asymptotic_value;
      row.resid = *rep.residual;
    }
    for (const auto& row : rows)
      csv << fmt(row.n) << "," << fmt(row.u) << "," << fmt(row.r) << "," << fmt(row.exact) << ","
          << fmt(row.asym) << "," << fmt(row.resid) << "\n";
  } else {
    throw CLI::ValidationError("--mode", "must be one of redundancy|quantum-term|bayes-constant");
  }
  emit(csv.str(), o.out_path, out);
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, const CommonOut& o, std::ostream& out) {
  json checks = json::array();
  double worst = 0.0;
  bool pass = true;
  auto push = [&](const std::string& name, double dev, double tol) {
    json c;
    c["name"] = name;
    c["max_abs_deviation"] = dev;
    c["tolerance"] = tol;
    c["pass"] = dev <= tol;
    pass = pass && (dev <= tol);
    worst = std::max(worst, dev);
    checks.push_back(std::move(c));
  };
  const std::vector<double> us = {-1.0, 0.0, 0.5, 0.9};

  if (suite == "entries" || suite == "all") {
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
      for (double u : us) {
        auto zm = zeta::zeta_matrix(n, u);
        auto avg = zeta::averaged_matrix(n, priors::PriorSpec::qu(u), 1e-9);
        double dev = (avg.matrix.real() - *zm.entries).cwiseAbs().maxCoeff();
        dev = std::max(dev, avg.matrix.imag().cwiseAbs().maxCoeff());
        push("entries n=" + std::to_string(n) + " u=" + fmt(u), dev, 1e-8);
      }
    }
  }
  if (suite == "spectrum" || suite == "all") {
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
      for (double u : us) {
        auto zm = zeta::zeta_matrix(n, u);
        auto eig = oracle::dense_hermitian_eig(zm.entries->cast<std::complex<double>>());
        // expand closed-form multiset in descending order
        std::vector<double> expect;
        for (const auto& lv : zm.spectral.levels)
          for (specfun::BigInt i = 0; i < lv.multiplicity; ++i) expect.push_back(lv.lambda);
        std::sort(expect.begin(), expect.end(), std::greater<>());
        double dev = 0.0;
        for (std::size_t i = 0; i < expect.size(); ++i)
          dev = std::max(dev, std::abs(eig.eigenvalues(static_cast<Eigen::Index>(i)) - expect[i]));
        push("spectrum n=" + std::to_string(n) + " u=" + fmt(u), dev, 1e-10);
      }
    }
  }
  if (suite == "entropy" || suite == "all") {
    const std::vector<std::pair<double, double>> urs = {
        {0.0, 0.3}, {0.5, 0.7}, {-1.0, 0.0}, {0.9, 0.95}, {0.25, 1.0}};
    for (int n = 2; n <= std::min(max_n, 6); n += 2) {
      for (auto [u, r] : urs) {
        auto zm = zeta::zeta_matrix(n, u);
        double phi = 0.3, theta = 1.1;
        qstate::BlochState s{r * std::sin(theta) * std::cos(phi),
                             r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
        auto rho = qstate::tensor_product_matrix(s, n);
        double dense =
            oracle::relative_entropy_dense(rho, zm.entries->cast<std::complex<double>>());
        double exact = entropy::relative_entropy_exact(n, u, r);
        push("entropy n=" + std::to_string(n) + " u=" + fmt(u) + " r=" + fmt(r),
             std::abs(dense - exact), 1e-8);
      }
    }
  }
  if (suite == "integrals" || suite == "all") {
    auto rep = oracle::standard_integral_check();
    push("integrals", rep.max_deviation, 1e-10);
  }
  if (checks.empty()) throw CLI::ValidationError("--suite", "must be one of entries|spectrum|entropy|integrals|all");

  json j;
  j["suite"] = suite;
  j["checks"] = std::move(checks);
  j["max_abs_deviation"] = worst;
  j["pass"] = pass;
  emit(j.dump(), o.out_path, out);
  return pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"universal quantum coding redundancy toolkit"};
  app.require_subcommand(1);

  CommonOut common;
  int n = 1;
  double u = 0.0, r = 0.0, tol = 1e-10, epsilon = 0.0;
  bool entries = false;
  std::string prior = "qu", fname = "sld", which, mode, suite = "all";
  std::string ns_grid, us_grid, rs_grid, epsilons;
  int max_n = 6;
  long seed = 0;
  bool have_r = false, have_eps = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json_out, "emit JSON");
    sub->add_option("--out", common.out_path, "write the document to a file");
    sub->add_option("--seed", seed, "accepted and ignored (no stochastic components)");
  };

  auto* sc_zeta = app.add_subcommand("zeta", "Bayesian density matrix summary");
  sc_zeta->add_option("--n", n, "block length")->required();
  sc_zeta->add_option("--u", u, "prior parameter (< 1)")->required();
  sc_zeta->add_flag("--entries", entries, "materialize dense entries (n <= 12)");
  add_common(sc_zeta);

  auto* sc_spec = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
  sc_spec->add_option("--n", n, "block length")->required();
  sc_spec->add_option("--u", u, "prior parameter (< 1)");
  sc_spec->add_option("--prior", prior, "qu|kubo|monotone");
  sc_spec->add_option("--f", fname, "monotone handle: sld|kmb|exp");
  add_common(sc_spec);

  auto* sc_red = app.add_subcommand("redundancy", "exact relative entropy");
  sc_red->add_option("--n", n)->required();
  sc_red->add_option("--u", u)->required();
  sc_red->add_option("--r", r)->required();
  add_common(sc_red);

  auto* sc_vn = app.add_subcommand("vn-entropy", "von Neumann entropy of the Bayesian matrix");
  sc_vn->add_option("--n", n)->required();
  sc_vn->add_option("--u", u)->required();
  add_common(sc_vn);

  auto* sc_asym = app.add_subcommand("asymptotics", "closed-form asymptotic values");
  sc_asym->add_option("--which", which, "a3|a4|a5|B2|cb12|cb11|cb-boundary")->required();
  sc_asym->add_option("--u", u);
  auto* ropt = sc_asym->add_option("--r", r);
  sc_asym->add_option("--n", n)->required();
  add_common(sc_asym);

  auto* sc_minimax = app.add_subcommand("minimax", "asymptotic minimax over (u, r)");
  sc_minimax->add_option("--tol", tol);
  add_common(sc_minimax);

  auto* sc_maximin = app.add_subcommand("maximin", "asymptotic maximin over u");
  sc_maximin->add_option("--tol", tol);
  add_common(sc_maximin);

  auto* sc_comp = app.add_subcommand("compress", "dominant-eigenspace compression plan");
  sc_comp->add_option("--n", n)->required();
  sc_comp->add_option("--u", u)->required();
  auto* eopt = sc_comp->add_option("--epsilon", epsilon, "eigenvalue mass to discard");
  sc_comp->add_option("--epsilons", epsilons, "epsilon grid, emits CSV");
  auto* ropt2 = sc_comp->add_option("--r", r, "source radius for retained weight");
  add_common(sc_comp);

  auto* sc_sweep = app.add_subcommand("sweep", "grid sweeps as CSV");
  sc_sweep->add_option("--mode", mode, "redundancy|quantum-term|bayes-constant")->required();
  sc_sweep->add_option("--n", ns_grid, "n grid (list or start:stop:step)");
  sc_sweep->add_option("--u", us_grid, "u grid");
  sc_sweep->add_option("--r", rs_grid, "r grid");
  add_common(sc_sweep);

  auto* sc_verify = app.add_subcommand("verify", "brute-force verification suites");
  sc_verify->add_option("--suite", suite, "entries|spectrum|entropy|integrals|all");
  sc_verify->add_option("--max-n", max_n, "largest block length per suite");
  add_common(sc_verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sc_zeta->parsed()) return cmd_zeta(n, u, entries, common, out);
    if (sc_spec->parsed()) return cmd_spectrum(n, u, prior, fname, common, out);
    if (sc_red->parsed()) return cmd_redundancy(n, u, r, common, out);
    if (sc_vn->parsed()) return cmd_vn_entropy(n, u, common, out);
    if (sc_asym->parsed()) {
      have_r = ropt->count() > 0;
      return cmd_asymptotics(which, u, have_r ? std::optional<double>(r) : std::nullopt, n,
                             common, out);
    }
    if (sc_minimax->parsed()) return cmd_minimax(tol, common, out);
    if (sc_maximin->parsed()) return cmd_maximin(tol, common, out);
    if (sc_comp->parsed()) {
      have_eps = eopt->count() > 0;
      have_r = ropt2->count() > 0;
      return cmd_compress(n, u, have_eps ? std::optional<double>(epsilon) : std::nullopt,
                          epsilons, have_r ? std::optional<double>(r) : std::nullopt, common,
                          out);
    }
    if (sc_sweep->parsed()) return cmd_sweep(mode, ns_grid, us_grid, rs_grid, common, out);
    if (sc_verify->parsed()) return cmd_verify(suite, max_n, common, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json j;
    j["error"] = e.what();
    out << j.dump() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

} // namespace qredux::cli
