// Command-line front end: JSON documents in, text/JSON/CSV out.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "supcoh/golden.hpp"
#include "supcoh/io.hpp"
#include "supcoh/lso.hpp"
#include "supcoh/measures.hpp"
#include "supcoh/transform.hpp"

namespace {

using namespace supcoh;
using nlohmann::json;

struct Output {
  std::string format = "text";
  int digits = 9;
};

std::string join_reals(const RealVec& v, int digits) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_real(v(i), digits);
  }
  return out;
}

std::string join_complexes(const Vec& v, int digits) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_complex(v(i), digits);
  }
  return out;
}

void print_matrix(std::ostream& os, const Mat& m, int digits) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      os << (j ? " " : "") << format_complex(m(i, j), digits);
    }
    os << '\n';
  }
}

json real_vec_json(const RealVec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json complex_vec_json(const Vec& v) {
  json re = json::array();
  json im = json::array();
  bool any_imag = false;
  for (int i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
    any_imag = any_imag || v(i).imag() != 0.0;
  }
  json out{{"re", std::move(re)}};
  if (any_imag) out["im"] = std::move(im);
  return out;
}

void require_renderable(const Output& out) {
  if (out.format == "csv") {
    fail(errc::bad_input, "csv output is defined for the sweep command only");
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

LoadedState load_state(const std::string& path, double eps_pd) {
  return parse_state(load_json_file(path), eps_pd);
}

SuperpositionState load_superposition(const LoadedState& loaded,
                                      const char* cmd) {
  if (loaded.basis != BasisTag::nonorthogonal) {
    fail(errc::bad_input, std::string(cmd) +
                              " expects a nonorthogonal-basis state "
                              "(\"basis\": \"nonorthogonal\")");
  }
  return make_superposition(loaded.coefficients, loaded.gram);
}

void warn_if_incoherent(const CoherentState& bar) {
  if (l1_measure(pure_density(bar)) < 1e-12) {
    std::cerr << "warning: the mapped state is incoherent; no coherent "
                 "resource can be extracted from it\n";
  }
}

// ---------------------------------------------------------------------------

void cmd_lowdin(const std::string& gram_path, int verify_n,
                std::uint64_t seed, double eps_pd, const Output& out) {
  require_renderable(out);
  auto gram = parse_gram(load_json_file(gram_path), eps_pd);
  auto map = LowdinMap::build(gram);

  MinimalityCheck check{};
  if (verify_n > 0) check = verify_minimality(*gram, verify_n, seed);

  if (out.format == "json") {
    json j{{"dimension", gram->dim()},
           {"eigenvalues", real_vec_json(map.eigen.eigenvalues)},
           {"overlap", gram_to_json(*gram)},
           {"sqrt", matrix_to_json(map.sqrt_s)},
           {"inv_sqrt", matrix_to_json(map.inv_sqrt_s)}};
    json basis = json::array();
    for (int i = 0; i < gram->dim(); ++i) {
      basis.push_back(complex_vec_json(map.inv_sqrt_s.col(i)));
    }
    j["lowdin_basis"] = std::move(basis);
    if (verify_n > 0) {
      j["minimality"] = json{{"samples", check.samples},
                             {"seed", check.seed},
                             {"max_excess", check.max_excess},
                             {"passed", check.passed}};
    }
    emit(j);
  } else {
    std::cout << "dimension: " << gram->dim() << '\n'
              << "eigenvalues: " << join_reals(map.eigen.eigenvalues, out.digits)
              << '\n';
    std::cout << "S^{1/2}:\n";
    print_matrix(std::cout, map.sqrt_s, out.digits);
    std::cout << "S^{-1/2}:\n";
    print_matrix(std::cout, map.inv_sqrt_s, out.digits);
    std::cout << "lowdin basis vectors (coefficients over the nonorthogonal "
                 "basis):\n";
    for (int i = 0; i < gram->dim(); ++i) {
      std::cout << "|l_" << i
                << ">: " << join_complexes(map.inv_sqrt_s.col(i), out.digits)
                << '\n';
    }
    if (verify_n > 0) {
      std::cout << "minimality check: " << check.samples << " samples, seed "
                << check.seed << ", max excess "
                << format_real(check.max_excess, out.digits) << ", "
                << (check.passed ? "passed" : "FAILED") << '\n';
    }
  }
  if (verify_n > 0 && !check.passed) {
    fail(errc::internal,
         "a sampled orthonormalization undercut the symmetric one by " +
             format_real(check.max_excess, 17));
  }
}

void cmd_forward(const std::string& state_path, double eps_pd,
                 const Output& out) {
  require_renderable(out);
  const auto loaded = load_state(state_path, eps_pd);
  const auto psi = load_superposition(loaded, "forward");
  const auto map = LowdinMap::build(psi.gram_ptr());
  const auto bar = forward(map, psi);
  warn_if_incoherent(bar);

  if (out.format == "json") {
    emit(json{{"input", state_to_json(psi)},
              {"applied_scale", psi.applied_scale()},
              {"output", state_to_json(bar)},
              {"squared_moduli", real_vec_json(bar.coefficients().cwiseAbs2())}});
  } else {
    std::cout << "superposition coefficients: "
              << join_complexes(psi.coefficients(), out.digits) << '\n'
              << "applied scale: " << format_real(psi.applied_scale(), out.digits)
              << '\n'
              << "coherent coefficients: "
              << join_complexes(bar.coefficients(), out.digits) << '\n'
              << "squared moduli: "
              << join_reals(bar.coefficients().cwiseAbs2(), out.digits) << '\n';
  }
}

void cmd_backward(const std::string& state_path, const std::string& gram_path,
                  double eps_pd, const Output& out) {
  require_renderable(out);
  const auto loaded = load_state(state_path, eps_pd);
  if (loaded.basis != BasisTag::lowdin) {
    fail(errc::bad_input,
         "backward expects a lowdin-basis state (\"basis\": \"lowdin\"); "
         "forward handles the other direction");
  }
  const auto bar = make_coherent(loaded.coefficients);
  const auto gram = parse_gram(load_json_file(gram_path), eps_pd);
  const auto map = LowdinMap::build(gram);
  const auto psi = backward(map, bar);

  if (out.format == "json") {
    emit(json{{"input", state_to_json(bar)},
              {"applied_scale", bar.applied_scale()},
              {"output", state_to_json(psi)}});
  } else {
    std::cout << "coherent coefficients: "
              << join_complexes(bar.coefficients(), out.digits) << '\n'
              << "applied scale: " << format_real(bar.applied_scale(), out.digits)
              << '\n'
              << "superposition coefficients: "
              << join_complexes(psi.coefficients(), out.digits) << '\n';
  }
}

void report_json(const TransformReport& report, json extra, const char* kind) {
  json j{{"kind", kind},
         {"probability", report.probability},
         {"deterministic", report.deterministic},
         {"binding_index", report.binding_index},
         {"source_bar", state_to_json(report.source_bar)},
         {"target_bar", state_to_json(report.target_bar)}};
  j.update(extra);
  emit(j);
}

void report_text(const TransformReport& report, const Output& out) {
  std::cout << "probability: " << format_real(report.probability, out.digits)
            << '\n'
            << "deterministic: " << (report.deterministic ? "true" : "false")
            << '\n'
            << "binding tail index: " << report.binding_index << '\n'
            << "source coherent coefficients: "
            << join_complexes(report.source_bar.coefficients(), out.digits)
            << '\n'
            << "target coherent coefficients: "
            << join_complexes(report.target_bar.coefficients(), out.digits)
            << '\n';
}

void cmd_transform(const std::string& psi_path, const std::string& phi_path,
                   double eps_pd, const Output& out) {
  require_renderable(out);
  const auto loaded_psi = load_state(psi_path, eps_pd);
  const auto loaded_phi = load_state(phi_path, eps_pd);
  const auto psi = load_superposition(loaded_psi, "transform");
  const auto phi = load_superposition(loaded_phi, "transform");
  const auto map = LowdinMap::build(psi.gram_ptr());
  const auto report = superposition_transform(map, psi, phi);

  if (out.format == "json") {
    report_json(report, json::object(), "transform");
  } else {
    report_text(report, out);
  }
}

void cmd_distill(const std::string& state_path, double eps_pd,
                 const Output& out) {
  require_renderable(out);
  const auto loaded = load_state(state_path, eps_pd);
  const auto psi = load_superposition(loaded, "distill");
  const auto map = LowdinMap::build(psi.gram_ptr());
  const auto report = superposition_distill(map, psi);
  const auto distilled = backward(map, report.target_bar);

  if (out.format == "json") {
    report_json(report, json{{"distilled", state_to_json(distilled)}},
                "distill");
  } else {
    report_text(report, out);
    std::cout << "distilled superposition coefficients: "
              << join_complexes(distilled.coefficients(), out.digits) << '\n';
  }
}

void cmd_golden(int d, double s, const std::string& sign, const Output& out) {
  require_renderable(out);
  const GoldenSpec spec{d, s, sign == "minus" ? GoldenSign::minus
                                              : GoldenSign::plus};
  const auto state = make_golden(spec);
  const auto map = LowdinMap::build(state.gram_ptr());
  const auto bar = forward(map, state);

  if (out.format == "json") {
    emit(json{{"state", state_to_json(state)},
              {"forward_squared_moduli",
               real_vec_json(bar.coefficients().cwiseAbs2())}});
  } else {
    std::cout << "golden state coefficients: "
              << join_complexes(state.coefficients(), out.digits) << '\n'
              << "forward squared moduli: "
              << join_reals(bar.coefficients().cwiseAbs2(), out.digits) << '\n';
  }
}

void cmd_measure(const std::string& state_path, bool log2, double eps_pd,
                 const Output& out) {
  require_renderable(out);
  const auto loaded = load_state(state_path, eps_pd);
  const char* unit = log2 ? "bits" : "nats";
  const double scale = log2 ? 1.0 / std::log(2.0) : 1.0;

  json j;
  std::string text;
  if (loaded.basis == BasisTag::nonorthogonal) {
    const auto psi = make_superposition(loaded.coefficients, loaded.gram);
    const auto map = LowdinMap::build(psi.gram_ptr());
    const auto bar = forward(map, psi);
    const double m_sup = l1_measure(pure_density(psi));
    const double m_coh = l1_measure(pure_density(bar));
    const double rel = scale * rel_entropy_coherence(pure_density(bar));
    if (m_coh < 1e-12 && m_sup > 1e-12) warn_if_incoherent(bar);

    j = json{{"m_l1_superposition", m_sup},
             {"m_l1_coherent", m_coh},
             {"rel_entropy_coherence", rel},
             {"entropy_unit", unit}};
    text = "m_l1_superposition: " + format_real(m_sup, out.digits) + '\n' +
           "m_l1_coherent: " + format_real(m_coh, out.digits) + '\n' +
           "relative entropy of coherence: " + format_real(rel, out.digits) +
           ' ' + unit + '\n';
  } else {
    const auto bar = make_coherent(loaded.coefficients);
    const double m_coh = l1_measure(pure_density(bar));
    const double rel = scale * rel_entropy_coherence(pure_density(bar));

    j = json{{"m_l1_coherent", m_coh},
             {"rel_entropy_coherence", rel},
             {"entropy_unit", unit}};
    text = "m_l1_coherent: " + format_real(m_coh, out.digits) + '\n' +
           "relative entropy of coherence: " + format_real(rel, out.digits) +
           ' ' + unit + '\n';
  }

  if (out.format == "json") {
    emit(j);
  } else {
    std::cout << text;
  }
}

void cmd_sweep(double eta, double s_min, double s_max, double step,
               const std::string& out_path, const Output& out) {
  const auto result = sweep_l1(eta, s_min, s_max, step);
  for (double s : result.skipped) {
    std::cerr << "warning: skipped s = " << format_real(s, out.digits)
              << " (normalization singularity)\n";
  }

  if (out.format == "json") {
    json rows = json::array();
    for (const auto& row : result.rows) {
      rows.push_back(json{{"s", row.s},
                          {"m_l1_superposition", row.m_l1_sup},
                          {"m_l1_coherent", row.m_l1_coh}});
    }
    json skipped = json::array();
    for (double s : result.skipped) skipped.push_back(s);
    emit(json{{"rows", std::move(rows)}, {"skipped", std::move(skipped)}});
    return;
  }

  if (out_path.empty()) {
    write_sweep_csv(std::cout, result);
  } else {
    std::ofstream file(out_path);
    if (!file) fail(errc::bad_input, "cannot write \"" + out_path + "\"");
    write_sweep_csv(file, result);
    std::cout << "wrote " << result.rows.size() << " rows to " << out_path
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Maps pure quantum states between a nonorthogonal basis and its "
      "symmetric (Lowdin) orthonormal basis, and evaluates "
      "majorization-based transformation and distillation probabilities, "
      "golden states, and resource measures."};
  app.require_subcommand(1);

  Output out;
  double eps_pd = kDefaultEpsPd;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--digits", out.digits, "significant digits in text output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  app.add_option("--eps-pd", eps_pd,
                 "smallest admissible overlap-matrix eigenvalue")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string gram_path, state_path, second_path, out_path;
  std::string sign = "plus";
  int verify_n = 0;
  std::uint64_t seed = 42;
  bool log2 = false;
  int golden_d = 0;
  double golden_s = 0.0, eta = 0.0, s_min = 0.0, s_max = 0.0, step = 0.0;

  auto* lowdin = app.add_subcommand(
      "lowdin", "orthogonalization data for an overlap matrix");
  lowdin->fallthrough();
  lowdin->add_option("gram-file", gram_path, "overlap matrix JSON")->required();
  lowdin
      ->add_option("--verify-minimality", verify_n,
                   "sample N alternative orthonormalizations and check the "
                   "symmetric one is closest")
      ->check(CLI::PositiveNumber);
  lowdin->add_option("--seed", seed, "RNG seed for --verify-minimality")
      ->capture_default_str();
  lowdin->callback(
      [&] { cmd_lowdin(gram_path, verify_n, seed, eps_pd, out); });

  auto* fwd = app.add_subcommand(
      "forward", "map a superposition state to its coherent image");
  fwd->fallthrough();
  fwd->add_option("state-file", state_path, "nonorthogonal-basis state JSON")
      ->required();
  fwd->callback([&] { cmd_forward(state_path, eps_pd, out); });

  auto* bwd = app.add_subcommand(
      "backward", "map a coherent state back over a nonorthogonal basis");
  bwd->fallthrough();
  bwd->add_option("state-file", state_path, "lowdin-basis state JSON")
      ->required();
  bwd->add_option("gram-file", second_path, "overlap matrix JSON")->required();
  bwd->callback([&] { cmd_backward(state_path, second_path, eps_pd, out); });

  auto* trans = app.add_subcommand(
      "transform", "optimal probability of one state reaching another");
  trans->fallthrough();
  trans->add_option("source-file", state_path, "source state JSON")
      ->required();
  trans->add_option("target-file", second_path, "target state JSON")
      ->required();
  trans->callback([&] { cmd_transform(state_path, second_path, eps_pd, out); });

  auto* dist = app.add_subcommand(
      "distill", "distillation report targeting the golden state");
  dist->fallthrough();
  dist->add_option("state-file", state_path, "nonorthogonal-basis state JSON")
      ->required();
  dist->callback([&] { cmd_distill(state_path, eps_pd, out); });

  auto* gold = app.add_subcommand(
      "golden", "maximal superposition state for a uniform overlap");
  gold->fallthrough();
  gold->add_option("d", golden_d, "dimension")->required()
      ->check(CLI::Range(2, 1 << 16));
  gold->add_option("s", golden_s, "uniform overlap value")->required();
  gold->add_option("sign", sign, "plus | minus (minus: d = 2 only)")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  gold->callback([&] { cmd_golden(golden_d, golden_s, sign, out); });

  auto* meas = app.add_subcommand("measure", "resource measures of a state");
  meas->fallthrough();
  meas->add_option("state-file", state_path, "state JSON (either basis)")
      ->required();
  meas->add_flag("--log2", log2, "report entropies in bits instead of nats");
  meas->callback([&] { cmd_measure(state_path, log2, eps_pd, out); });

  auto* sweep = app.add_subcommand(
      "sweep", "l1 measures of the x(eta, 1) family across overlaps");
  sweep->fallthrough();
  sweep->add_option("eta", eta, "coefficient ratio of the swept family")
      ->required();
  sweep->add_option("s-min", s_min, "sweep start, in (-1, 1)")->required();
  sweep->add_option("s-max", s_max, "sweep end, in (-1, 1)")->required();
  sweep->add_option("step", step, "sweep increment")->required();
  sweep->add_option("--out", out_path, "CSV destination (default: stdout)");
  sweep->callback(
      [&] { cmd_sweep(eta, s_min, s_max, step, out_path, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const supcoh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return supcoh::is_validation_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
