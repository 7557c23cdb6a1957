#include "gaussnorm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gaussnorm/error.hpp"

namespace gaussnorm {

namespace {

using nlohmann::json;

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(Errc::kInvalidArgument, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

RealMatrix real_matrix(const json& j, const char* key) {
  if (!j.is_array() || j.empty()) {
    throw Error(Errc::kInvalidArgument, std::string(key) + " must be a nonempty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().is_array() ? j.front().size() : 0);
  RealMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols || cols == 0) {
      throw Error(Errc::kInvalidArgument, std::string(key) + " has ragged rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      if (!row[k].is_number()) throw Error(Errc::kInvalidArgument, std::string(key) + " has a non-number");
      m(i, k) = row[k].get<double>();
    }
  }
  return m;
}

ComplexMatrix complex_matrix(const json& j, const char* re_key, const char* im_key) {
  if (!j.is_object() || !j.contains(re_key)) {
    throw Error(Errc::kInvalidArgument, std::string("missing '") + re_key + "'");
  }
  const RealMatrix re = real_matrix(j.at(re_key), re_key);
  RealMatrix im = RealMatrix::Zero(re.rows(), re.cols());
  if (j.contains(im_key)) {
    im = real_matrix(j.at(im_key), im_key);
    if (im.rows() != re.rows() || im.cols() != re.cols()) {
      throw Error(Errc::kInvalidArgument, "real and imaginary parts differ in shape");
    }
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::kInvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

QuadraticForm parse_quadratic_form(const std::string& json_text) {
  const json j = parse(json_text);
  const ComplexMatrix h = complex_matrix(j, "hessian_re", "hessian_im");
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<int>() * 2 != h.rows()) {
      throw Error(Errc::kInvalidArgument, "'n' does not match the Hessian size");
    }
  }
  return QuadraticForm(h);
}

ComplexMatrix parse_matrix(const std::string& json_text) {
  const ComplexMatrix m = complex_matrix(parse(json_text), "re", "im");
  if (m.rows() != m.cols()) throw Error(Errc::kInvalidArgument, "matrix must be square");
  return m;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string davies_result_json(const DaviesResult& r) {
  json j;
  j["norm"] = r.norm;
  j["bounded"] = r.bounded;
  j["compact"] = r.compact;
  j["A"] = r.A;
  j["phi"] = r.phi ? number_or_null(*r.phi) : json(nullptr);
  j["delta"] = r.delta;
  j["classification"] = std::string(classification_name(r.classification));
  return j.dump();
}

std::string unbounded_result_json() {
  json j;
  j["norm"] = nullptr;
  j["bounded"] = false;
  j["compact"] = false;
  j["A"] = nullptr;
  j["phi"] = nullptr;
  j["delta"] = nullptr;
  j["classification"] = nullptr;
  return j.dump();
}

}  // namespace gaussnorm
