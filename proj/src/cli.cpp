#include "polyneck/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyneck/annulus_basis.hpp"
#include "polyneck/decay_lemma.hpp"
#include "polyneck/errors.hpp"
#include "polyneck/jet_pohozaev.hpp"
#include "polyneck/operator_poly.hpp"
#include "polyneck/random.hpp"
#include "polyneck/sphere_fields.hpp"
#include "polyneck/three_circle.hpp"
#include "polyneck/weak_orthogonality.hpp"

namespace polyneck {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

struct Report {
  std::string text;
  int exit_code = kExitOk;
};

std::string csv_number(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- poly

Report run_poly(int m, Format format) {
  const auto poly = build_operator_polynomial(m);
  const auto checks = verify_structure(poly);
  Report report;
  report.exit_code = checks.all_passed() ? kExitOk : kExitCheckFailed;
  if (format == Format::Csv) {
    std::ostringstream out;
    out << "p,q,a\n";
    for (const auto& [mono, c] : poly.coeffs.terms()) out << mono.p << ',' << mono.q << ',' << to_string(c) << '\n';
    report.text = out.str();
    return report;
  }
  Json j;
  j["m"] = m;
  j["coeffs"] = Json::array();
  for (const auto& [mono, c] : poly.coeffs.terms())
    j["coeffs"].push_back({{"p", mono.p}, {"q", mono.q}, {"a", to_string(c)}});
  j["checks"] = {{"no_odd_p", checks.no_odd_p}, {"signs", checks.signs}, {"factorization", checks.factorization}};
  if (checks.offending)
    j["offending"] = {{"p", checks.offending->p}, {"q", checks.offending->q},
                      {"a", to_string(*checks.offending_value)}};
  report.text = dump(j);
  return report;
}

// ---------------------------------------------------------------- sphere

Eigen::VectorXd random_vector(int size, Rng& rng) {
  Eigen::VectorXd v(size);
  for (int i = 0; i < size; ++i) v(i) = rng.normal();
  return v;
}

Report run_sphere(int m, int trials, std::uint64_t seed, Format format) {
  if (trials < 0) throw InvalidParameter("--trials must be nonnegative");
  const auto basis = build_killing_basis(m);
  const int d = basis.dimension();
  Rng rng(seed);
  double reproduce = 0.0, outer = 0.0, reconstruct = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::VectorXd x = random_vector(d, rng);
    Eigen::VectorXd v = random_vector(d, rng);
    const Eigen::VectorXd full = v;
    v -= (v.dot(x) / x.squaredNorm()) * x;

    reproduce = std::max(reproduce, (tangential_reproduce(basis, x, v) - v).norm() / v.norm());
    const Eigen::MatrixXd expected =
        0.5 * (x.squaredNorm() * Eigen::MatrixXd::Identity(d, d) - x * x.transpose());
    outer = std::max(outer, (killing_outer_sum(basis, x) - expected).norm() / x.squaredNorm());
    const auto parts = decompose_vector(basis, x, full);
    reconstruct = std::max(reconstruct, (reconstruct_vector(basis, x, parts) - full).norm() / full.norm());
  }
  const bool passed = reproduce <= 1e-12 && outer <= 1e-12 && reconstruct <= 1e-12;
  Report report;
  report.exit_code = passed ? kExitOk : kExitCheckFailed;
  if (format == Format::Csv) {
    report.text = "m,trials,max_reproduce_residual,max_outer_sum_residual,max_reconstruct_residual,passed\n" +
                  std::to_string(m) + ',' + std::to_string(trials) + ',' + csv_number(reproduce) + ',' +
                  csv_number(outer) + ',' + csv_number(reconstruct) + ',' + (passed ? "true" : "false") + '\n';
    return report;
  }
  Json j;
  j["m"] = m;
  j["generators"] = basis.size();
  j["trials"] = trials;
  j["seed"] = seed;
  j["max_reproduce_residual"] = reproduce;
  j["max_outer_sum_residual"] = outer;
  j["max_reconstruct_residual"] = reconstruct;
  j["tolerance"] = 1e-12;
  j["passed"] = passed;
  report.text = dump(j);
  return report;
}

// ---------------------------------------------------------------- modes

std::vector<double> json_vector(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<double>>();
}

AnnulusField field_from_json(const Json& j, int m) {
  AnnulusField field;
  field.m = m;
  if (j.contains("zero_mode")) {
    const auto& z = j.at("zero_mode");
    field.zero_mode.a0 = z.value("A0", 0.0);
    field.zero_mode.b0 = z.value("B0", 0.0);
    field.zero_mode.c0 = json_vector(z, "C0");
    field.zero_mode.d0 = json_vector(z, "D0");
  }
  if (j.contains("modes")) {
    for (const auto& mode : j.at("modes")) {
      ModeCoefficients coeffs{json_vector(mode, "C"), json_vector(mode, "D")};
      field.modes.insert_or_assign({mode.at("n").get<int>(), mode.at("l").get<int>()}, std::move(coeffs));
    }
  }
  validate_field(field);
  return field;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidParameter("malformed JSON in " + path + ": " + e.what());
  }
}

Report run_modes(int m, int n, const std::optional<std::string>& field_path, double gap, int index,
                 Format format) {
  const auto spec = mode_spectrum(m, n);
  const auto annihilation = verify_mode_annihilation(m, n);
  std::optional<AnnulusField> field;
  if (field_path) field = field_from_json(read_json_file(*field_path), m);

  Report report;
  report.exit_code = annihilation.passed ? kExitOk : kExitCheckFailed;
  if (format == Format::Csv) {
    std::ostringstream out;
    out << "m,n,mu,multiplicity,exponents,annihilated";
    if (field) out << ",L,i,energy";
    out << '\n' << m << ',' << n << ',' << to_string(spec.mu) << ',' << to_string(spec.multiplicity) << ',';
    for (std::size_t k = 0; k < spec.exponents.size(); ++k) out << (k ? ";" : "") << spec.exponents[k];
    out << ',' << (annihilation.passed ? "true" : "false");
    if (field) out << ',' << csv_number(gap) << ',' << index << ',' << csv_number(annulus_energy(*field, index, gap));
    out << '\n';
    report.text = out.str();
    return report;
  }
  Json j;
  j["m"] = m;
  j["n"] = n;
  j["mu"] = to_string(spec.mu);
  j["multiplicity"] = to_string(spec.multiplicity);
  j["multiplicity_cross_checked"] = spec.multiplicity_cross_checked;
  j["exponents"] = spec.exponents;
  j["annihilation"] = {{"passed", annihilation.passed}, {"failures", annihilation.failures}};
  if (n == 0) j["annihilation"]["radial_roots"] = annihilation.radial_roots;
  if (field) {
    j["energy"] = {{"L", gap},
                   {"i", index},
                   {"zero_average", field->zero_average()},
                   {"F", annulus_energy(*field, index, gap)},
                   {"log_F", annulus_log_energy(*field, index, gap)}};
  }
  report.text = dump(j);
  return report;
}

// ---------------------------------------------------------------- three-circle

Report run_three_circle(int m, int n_max, std::optional<double> gap, double tol, int trials, std::uint64_t seed,
                        Format format) {
  const auto uniform = uniform_L_report(m, n_max, tol);
  const double l_star = gap.value_or(uniform.L_star);

  std::vector<ThreeCircleCertificate> certs;
  bool all_certified = true;
  for (int n = 1; n <= n_max; ++n) {
    certs.push_back(three_circle_certificate(m, n, l_star));
    all_certified = all_certified && certs.back().certified;
  }
  const auto fields = random_field_check(m, l_star, trials, seed);

  Report report;
  report.exit_code = all_certified && fields.passed ? kExitOk : kExitCheckFailed;
  if (format == Format::Csv) {
    std::ostringstream out;
    out << "m,n,min_L,margin_at_Lstar\n";
    for (int n = 1; n <= n_max; ++n)
      out << m << ',' << n << ',' << csv_number(uniform.min_gap[n - 1]) << ',' << csv_number(certs[n - 1].margin)
          << '\n';
    report.text = out.str();
    return report;
  }
  Json j;
  j["m"] = m;
  j["n_max"] = n_max;
  j["tol"] = tol;
  j["L_star"] = l_star;
  j["L_star_source"] = gap ? "flag" : "search";
  j["search_L_star"] = uniform.L_star;
  j["peak_n"] = uniform.peak_n;
  j["nonincreasing_beyond_peak"] = uniform.nonincreasing_beyond_peak;
  j["modes"] = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    const auto& c = certs[n - 1];
    j["modes"].push_back({{"n", n},
                          {"min_L", uniform.min_gap[n - 1]},
                          {"margin_at_Lstar", c.margin},
                          {"threshold", c.threshold},
                          {"certified", c.certified}});
  }
  j["random_fields"] = {{"trials", fields.trials},
                        {"seed", seed},
                        {"checked", fields.checked},
                        {"skipped", fields.skipped},
                        {"worst_ratio", fields.worst_ratio},
                        {"passed", fields.passed}};
  j["all_certified"] = all_certified;
  report.text = dump(j);
  return report;
}

// ---------------------------------------------------------------- gram

Report run_gram(int m, int n_max, double gap, Format format) {
  if (n_max < 1) throw InvalidParameter("--n-max must be >= 1");
  std::vector<WeakOrthogonalityCertificate> rows;
  std::vector<double> lu;
  bool all_valid = true;
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back(weak_orthogonality_certificate(m, n, gap));
    lu.push_back(mbar_determinant_lu(m, n));
    all_valid = all_valid && rows.back().valid;
  }
  Report report;
  report.exit_code = all_valid ? kExitOk : kExitCheckFailed;
  if (format == Format::Csv) {
    std::ostringstream out;
    out << "m,n,L,lambda1,lambda1bar,lambdaE_bound,det_exact,delta\n";
    for (const auto& r : rows)
      out << m << ',' << r.n << ',' << csv_number(gap) << ',' << csv_number(r.lambda1) << ','
          << csv_number(r.lambda1_bar) << ',' << csv_number(r.lambdaE_bound) << ',' << to_string(r.cauchy_det) << ','
          << csv_number(r.delta) << '\n';
    report.text = out.str();
    return report;
  }
  Json j;
  j["m"] = m;
  j["L"] = gap;
  j["n_max"] = n_max;
  j["rows"] = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    j["rows"].push_back({{"n", r.n},
                         {"lambda1", r.lambda1},
                         {"lambda1bar", r.lambda1_bar},
                         {"lambdaE_bound", r.lambdaE_bound},
                         {"lambdaE_trace", r.lambdaE_trace},
                         {"lambdaE_exact", r.lambdaE_exact},
                         {"det_exact", to_string(r.cauchy_det)},
                         {"det_lu", lu[i]},
                         {"delta", r.delta},
                         {"perturbation_holds", r.perturbation_holds},
                         {"factorization_holds", r.factorization_holds},
                         {"valid", r.valid}});
  }
  j["empirical_C_tilde"] = empirical_decay_constant(m, gap, n_max);
  j["all_valid"] = all_valid;
  report.text = dump(j);
  return report;
}

// ---------------------------------------------------------------- jets

Report run_jets(int n_max, int m_max, Format format) {
  if (n_max < 1 || m_max < 1) throw InvalidParameter("--n-max and --m-max must be >= 1");
  bool all = true;
  Json one = Json::array(), two = Json::array(), pohozaev = Json::array();
  std::ostringstream csv;
  csv << "identity,n,k,m,verified\n";
  for (int n = 1; n <= n_max; ++n) {
    const bool ok = verify_identity_one(n);
    all = all && ok;
    one.push_back({{"n", n}, {"verified", ok}});
    csv << "one," << n << ",,," << (ok ? "true" : "false") << '\n';
    for (int k = 1; k <= n - 1; ++k) {
      const bool ok2 = verify_identity_two(n, k);
      all = all && ok2;
      two.push_back({{"n", n}, {"k", k}, {"verified", ok2}});
      csv << "two," << n << ',' << k << ",," << (ok2 ? "true" : "false") << '\n';
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    const bool ok = verify_radial_pohozaev(m);
    all = all && ok;
    pohozaev.push_back({{"m", m}, {"verified", ok}});
    csv << "radial_pohozaev,,," << m << ',' << (ok ? "true" : "false") << '\n';
  }
  Report report;
  report.exit_code = all ? kExitOk : kExitCheckFailed;
  if (format == Format::Csv) {
    report.text = csv.str();
    return report;
  }
  Json j;
  j["identity_one"] = one;
  j["identity_two"] = two;
  j["radial_pohozaev"] = pohozaev;
  j["all_verified"] = all;
  report.text = dump(j);
  return report;
}

// ---------------------------------------------------------------- decay

const char* branch_name(DecayBranch b) {
  switch (b) {
    case DecayBranch::Endpoint: return "endpoint";
    case DecayBranch::Good: return "good";
    case DecayBranch::Adjacent: return "adjacent";
    case DecayBranch::Chain: return "chain";
  }
  return "?";
}

DecayProblem problem_from_json(const Json& j) {
  DecayProblem p;
  try {
    p.n0 = j.at("n0").get<int>();
    p.F = j.at("F").get<std::vector<double>>();
    p.Theta = j.at("Theta").get<std::vector<double>>();
    p.C1 = j.at("C1").get<double>();
    p.C2 = j.at("C2").get<double>();
    p.sigma = j.at("sigma").get<double>();
    p.scale = j.at("scale").get<double>();
    p.endpoint_bound = j.at("endpoint_bound").get<double>();
  } catch (const Json::exception& e) {
    throw InvalidParameter(std::string("decay instance: ") + e.what());
  }
  return p;
}

Json hypotheses_json(const HypothesisReport& h) {
  Json j{{"passed", h.passed},     {"parameters_ok", h.parameters_ok}, {"monotone", h.monotone},
         {"theta_bound", h.theta_bound}, {"iteration", h.iteration}, {"endpoint", h.endpoint}};
  if (h.monotone_index) j["monotone_failure_index"] = *h.monotone_index;
  if (h.theta_index) j["theta_failure_index"] = *h.theta_index;
  if (h.iteration_index) j["iteration_failure_index"] = *h.iteration_index;
  j["messages"] = h.messages;
  return j;
}

Report run_decay_check(const std::string& path, Format format, std::ostream& err) {
  const auto problem = problem_from_json(read_json_file(path));
  const auto hypotheses = check_hypotheses(problem);
  Report report;
  Json j;
  j["hypotheses"] = hypotheses_json(hypotheses);
  std::optional<DecayCertificate> cert;
  if (hypotheses.passed) {
    cert = certify_decay(problem);
  } else {
    for (const auto& msg : hypotheses.messages) err << "decay check: " << msg << '\n';
  }
  report.exit_code = cert && cert->verified ? kExitOk : kExitCheckFailed;

  if (format == Format::Csv) {
    std::ostringstream out;
    out << "hypotheses,verified,sigma_prime,sigma_tilde,C_prime,C_prime_branch\n";
    out << (hypotheses.passed ? "true" : "false") << ',' << (cert && cert->verified ? "true" : "false") << ',';
    if (cert)
      out << csv_number(cert->sigma_prime) << ',' << csv_number(cert->sigma_tilde) << ',' << csv_number(cert->c_prime)
          << ',' << csv_number(cert->c_prime_branch);
    else
      out << ",,,";
    out << '\n';
    report.text = out.str();
    return report;
  }
  if (cert) {
    Json bounds = Json::array();
    for (std::size_t n = 0; n < cert->bounds.size(); ++n) {
      const auto& b = cert->bounds[n];
      bounds.push_back({{"n", n}, {"branch", branch_name(b.branch)}, {"anchor", b.anchor},
                        {"chain_length", b.chain_length}, {"constant", b.constant}});
    }
    j["certificate"] = {{"sigma_prime", cert->sigma_prime}, {"sigma_tilde", cert->sigma_tilde},
                        {"C_prime", cert->c_prime},         {"C_prime_branch", cert->c_prime_branch},
                        {"verified", cert->verified},       {"bounds", bounds}};
  }
  report.text = dump(j);
  return report;
}

Report run_decay_fuzz(int trials, std::uint64_t seed, double c1, double c2, double sigma, int n0, double scale,
                      Format format) {
  if (trials < 0) throw InvalidParameter("--trials must be nonnegative");
  int verified = 0;
  double tightest = 0.0;  // max over instances and n of F_n / envelope_n
  double worst_c_prime = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto problem = generate_admissible(n0, c1, c2, sigma, scale, seed + static_cast<std::uint64_t>(t));
    const auto cert = certify_decay(problem);
    if (cert.verified) ++verified;
    worst_c_prime = std::max(worst_c_prime, cert.c_prime);
    for (int n = 0; n <= n0; ++n) {
      const double envelope = cert.c_prime * scale * std::exp(-cert.sigma_tilde * (n0 - n));
      if (envelope > 0) tightest = std::max(tightest, problem.F[n] / envelope);
    }
  }
  const bool passed = verified == trials;
  Report report;
  report.exit_code = passed ? kExitOk : kExitCheckFailed;
  const double sigma_prime = decay_rate_from_iteration(c1);
  if (format == Format::Csv) {
    report.text = "trials,verified,sigma_prime,sigma_tilde,max_C_prime,max_tightness\n" + std::to_string(trials) +
                  ',' + std::to_string(verified) + ',' + csv_number(sigma_prime) + ',' +
                  csv_number(std::min(sigma, sigma_prime)) + ',' + csv_number(worst_c_prime) + ',' +
                  csv_number(tightest) + '\n';
    return report;
  }
  Json j{{"trials", trials},
         {"seed", seed},
         {"C1", c1},
         {"C2", c2},
         {"sigma", sigma},
         {"n0", n0},
         {"scale", scale},
         {"sigma_prime", sigma_prime},
         {"sigma_tilde", std::min(sigma, sigma_prime)},
         {"verified", verified},
         {"max_C_prime", worst_c_prime},
         {"max_tightness", tightest},
         {"passed", passed}};
  report.text = dump(j);
  return report;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical and exact certificates for polyharmonic neck-analysis lemmas", "polyneck"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  Format format = Format::Json;
  std::optional<std::string> out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };

  int m = 0, n = 0, n_max = 0, trials = 0, index = 1, m_max = 0, n0 = 0;
  std::uint64_t seed = 0;
  double gap = 0.0, tol = 1e-3, c1 = 0.0, c2 = 0.0, sigma = 0.0, scale = 1.0;
  std::optional<double> gap_flag;
  std::optional<std::string> field_path;
  std::string file;

  auto* poly = app.add_subcommand("poly", "Coefficients and structure of the cylinder-coordinate symbol of Delta^m");
  poly->add_option("--m", m, "Half the ambient dimension")->required();
  add_common(poly);

  auto* sphere = app.add_subcommand("sphere", "Killing-field reproduction of tangent vectors on S^{2m-1}");
  sphere->add_option("--m", m)->required();
  sphere->add_option("--trials", trials)->default_val(1000);
  sphere->add_option("--seed", seed)->default_val(0);
  add_common(sphere);

  auto* modes = app.add_subcommand("modes", "Spherical mode data, indicial roots and annulus energies");
  modes->add_option("--m", m)->required();
  modes->add_option("--n", n)->required();
  auto* field_opt = modes->add_option("--field", field_path, "Field coefficients (JSON)");
  modes->add_option("--L", gap, "Annulus gap for --field")->needs(field_opt);
  modes->add_option("--i", index, "Annulus index for --field")->default_val(1);
  add_common(modes);

  auto* three = app.add_subcommand("three-circle", "Certify the three-circle inequality mode by mode");
  three->add_option("--m", m)->required();
  three->add_option("--n-max", n_max)->required();
  three->add_option("--L", gap_flag, "Use this gap instead of the searched L*");
  three->add_option("--tol", tol)->default_val(1e-3);
  three->add_option("--trials", trials)->default_val(1000);
  three->add_option("--seed", seed)->default_val(0);
  add_common(three);

  auto* gram = app.add_subcommand("gram", "Weak-orthogonality Gram bounds and exact Cauchy determinants");
  gram->add_option("--m", m)->required();
  gram->add_option("--n-max", n_max)->required();
  gram->add_option("--L", gap)->required();
  add_common(gram);

  auto* jets = app.add_subcommand("jets", "Exact jet-algebra integration-by-parts identities");
  jets->add_option("--n-max", n_max)->default_val(10);
  jets->add_option("--m-max", m_max)->default_val(8);
  add_common(jets);

  auto* decay = app.add_subcommand("decay", "Discrete exponential-decay certificates");
  decay->require_subcommand(1);
  auto* check = decay->add_subcommand("check", "Check and certify one instance");
  check->add_option("--file", file)->required();
  add_common(check);
  auto* fuzz = decay->add_subcommand("fuzz", "Certify generated admissible instances");
  fuzz->add_option("--trials", trials)->default_val(1000);
  fuzz->add_option("--seed", seed)->default_val(0);
  fuzz->add_option("--c1", c1)->required();
  fuzz->add_option("--c2", c2)->required();
  fuzz->add_option("--sigma", sigma)->required();
  fuzz->add_option("--n0", n0)->required();
  fuzz->add_option("--scale", scale)->default_val(1.0);
  add_common(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "polyneck: " << e.what() << '\n';
    return kExitInvalid;
  }

  Report report;
  try {
    if (*poly) report = run_poly(m, format);
    else if (*sphere) report = run_sphere(m, trials, seed, format);
    else if (*modes) report = run_modes(m, n, field_path, gap, index, format);
    else if (*three) report = run_three_circle(m, n_max, gap_flag, tol, trials, seed, format);
    else if (*gram) report = run_gram(m, n_max, gap, format);
    else if (*jets) report = run_jets(n_max, m_max, format);
    else if (*check) report = run_decay_check(file, format, err);
    else if (*fuzz) report = run_decay_fuzz(trials, seed, c1, c2, sigma, n0, scale, format);
  } catch (const SearchFailure& e) {
    err << "polyneck: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "polyneck: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (out_path) {
    std::ofstream file_out(*out_path);
    if (!(file_out << report.text)) {
      err << "polyneck: cannot write " << *out_path << '\n';
      return kExitInvalid;
    }
  } else {
    out << report.text;
  }
  return report.exit_code;
}

}  // namespace polyneck
