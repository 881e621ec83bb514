#include "supcoh/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace supcoh {

namespace {

using nlohmann::json;

const json& require_key(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    fail(errc::bad_input,
         std::string(where) + " is missing required key \"" + key + "\"");
  }
  return j.at(key);
}

double require_number(const json& j, const char* where) {
  if (!j.is_number()) {
    fail(errc::bad_input, std::string(where) + " must be a number");
  }
  return j.get<double>();
}

// Rectangular array-of-arrays -> row-major list of values.
std::vector<std::vector<double>> require_rows(const json& j,
                                              const char* where) {
  if (!j.is_array() || j.empty()) {
    fail(errc::bad_input,
         std::string(where) + " must be a non-empty array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) {
      fail(errc::bad_input,
           std::string(where) + " rows must be arrays of numbers");
    }
    std::vector<double> vals;
    for (const auto& v : row) vals.push_back(require_number(v, where));
    if (!rows.empty() && vals.size() != rows.front().size()) {
      fail(errc::bad_input, std::string(where) + " rows have ragged lengths");
    }
    rows.push_back(std::move(vals));
  }
  return rows;
}

std::vector<double> require_list(const json& j, const char* where) {
  if (!j.is_array() || j.empty()) {
    fail(errc::bad_input,
         std::string(where) + " must be a non-empty array of numbers");
  }
  std::vector<double> vals;
  for (const auto& v : j) vals.push_back(require_number(v, where));
  return vals;
}

Mat parse_matrix(const json& j, const char* where) {
  const auto re = require_rows(require_key(j, "re", where), "\"re\"");
  const size_t n = re.size();
  if (re.front().size() != n) {
    fail(errc::bad_input, std::string(where) + " \"re\" must be square");
  }
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = require_rows(j.at("im"), "\"im\"");
    if (im.size() != n || im.front().size() != n) {
      fail(errc::bad_input,
           std::string(where) + " \"im\" must match the shape of \"re\"");
    }
  }
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      m(i, k) = Complex(re[i][k], im.empty() ? 0.0 : im[i][k]);
    }
  }
  return m;
}

}  // namespace

std::shared_ptr<const GramMatrix> parse_gram(const json& j, double eps_pd) {
  const auto& kind = require_key(j, "kind", "overlap document");
  if (!kind.is_string()) {
    fail(errc::bad_input, "overlap \"kind\" must be a string");
  }
  const std::string k = kind.get<std::string>();
  if (k == "uniform") {
    const double d_raw =
        require_number(require_key(j, "d", "uniform overlap"), "\"d\"");
    const int d = static_cast<int>(d_raw);
    if (d != d_raw) {
      fail(errc::bad_input, "uniform overlap \"d\" must be an integer");
    }
    const double s =
        require_number(require_key(j, "s", "uniform overlap"), "\"s\"");
    return std::make_shared<const GramMatrix>(
        UniformOverlap(d, s).to_gram(eps_pd));
  }
  if (k == "matrix") {
    return std::make_shared<const GramMatrix>(
        GramMatrix::validate(parse_matrix(j, "overlap document"), eps_pd));
  }
  fail(errc::bad_input,
       "overlap \"kind\" must be \"matrix\" or \"uniform\", got \"" + k +
           "\"");
}

LoadedState parse_state(const json& j, double eps_pd) {
  const auto& basis = require_key(j, "basis", "state document");
  if (!basis.is_string()) {
    fail(errc::bad_input, "state \"basis\" must be a string");
  }
  const std::string b = basis.get<std::string>();

  LoadedState state;
  if (b == "nonorthogonal") {
    state.basis = BasisTag::nonorthogonal;
  } else if (b == "lowdin") {
    state.basis = BasisTag::lowdin;
  } else {
    fail(errc::bad_input,
         "state \"basis\" must be \"nonorthogonal\" or \"lowdin\", got \"" +
             b + "\"");
  }

  const auto& coeffs = require_key(j, "coefficients", "state document");
  const auto re = require_list(require_key(coeffs, "re", "coefficients"),
                               "coefficients \"re\"");
  std::vector<double> im;
  if (coeffs.contains("im")) {
    im = require_list(coeffs.at("im"), "coefficients \"im\"");
    if (im.size() != re.size()) {
      fail(errc::bad_input,
           "coefficients \"im\" must match the length of \"re\"");
    }
  }
  state.coefficients.resize(re.size());
  for (size_t i = 0; i < re.size(); ++i) {
    state.coefficients(i) = Complex(re[i], im.empty() ? 0.0 : im[i]);
  }

  if (state.basis == BasisTag::nonorthogonal) {
    state.gram = parse_gram(require_key(j, "overlap", "state document"),
                            eps_pd);
    if (state.gram->dim() != state.coefficients.size()) {
      fail(errc::dimension_mismatch,
           "state has " + std::to_string(state.coefficients.size()) +
               " coefficients but the overlap matrix is " +
               std::to_string(state.gram->dim()) + "-dimensional");
    }
  } else if (j.contains("overlap")) {
    fail(errc::bad_input,
         "a lowdin-basis state does not take an \"overlap\" matrix");
  }
  return state;
}

nlohmann::json matrix_to_json(const Mat& m) {
  json re = json::array();
  json im = json::array();
  bool any_imag = false;
  for (int i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (int k = 0; k < m.cols(); ++k) {
      re_row.push_back(m(i, k).real());
      im_row.push_back(m(i, k).imag());
      any_imag = any_imag || m(i, k).imag() != 0.0;
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json out{{"re", std::move(re)}};
  if (any_imag) out["im"] = std::move(im);
  return out;
}

nlohmann::json gram_to_json(const GramMatrix& g) {
  json out = matrix_to_json(g.entries());
  out["kind"] = "matrix";
  return out;
}

namespace {

json coefficients_to_json(const Vec& v) {
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

}  // namespace

nlohmann::json state_to_json(const SuperpositionState& psi) {
  return json{{"basis", "nonorthogonal"},
              {"coefficients", coefficients_to_json(psi.coefficients())},
              {"overlap", gram_to_json(psi.gram())}};
}

nlohmann::json state_to_json(const CoherentState& bar) {
  return json{{"basis", "lowdin"},
              {"coefficients", coefficients_to_json(bar.coefficients())}};
}

std::string format_real(double x, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 17) digits = 17;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string format_complex(Complex z, int digits) {
  if (z.imag() == 0.0) return format_real(z.real(), digits);
  std::string out = format_real(z.real(), digits);
  out += z.imag() < 0.0 ? "-" : "+";
  out += format_real(std::abs(z.imag()), digits);
  out += "i";
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "s,m_l1_superposition,m_l1_coherent\n";
  for (const auto& row : sweep.rows) {
    out << format_real(row.s, 9) << ',' << format_real(row.m_l1_sup, 9) << ','
        << format_real(row.m_l1_coh, 9) << '\n';
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(errc::bad_input, "cannot open \"" + path + "\"");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(errc::bad_input, "\"" + path + "\" is not valid JSON: " + e.what());
  }
}

}  // namespace supcoh
