// io.hpp
// JSON state files ({dim, re, im}), channel serialization and CSV helpers.

#pragma once

#include "texlab/channels.hpp"
#include "texlab/measures.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

namespace texlab {

using json = nlohmann::json;

/// Malformed input (bad JSON, wrong shapes, non-numeric cells).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Parses {dim, re, im}; shapes and finiteness are checked, physics is not.
inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw ParseError("state file must be an object with keys dim, re, im");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw ParseError("dim must be a positive integer");
  const auto d = static_cast<Eigen::Index>(j["dim"].get<long long>());
  ComplexMatrix m(d, d);
  for (const char* part : {"re", "im"}) {
    const json& a = j[part];
    if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != d)
      throw ParseError(std::string(part) + " must have dim rows");
    for (Eigen::Index r = 0; r < d; ++r) {
      const json& row = a[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
        throw ParseError(std::string(part) + " row " + std::to_string(r) + " must have dim entries");
      for (Eigen::Index c = 0; c < d; ++c) {
        const json& x = row[static_cast<std::size_t>(c)];
        if (!x.is_number()) throw ParseError(std::string(part) + " entries must be numbers");
        const double v = x.get<double>();
        if (!std::isfinite(v)) throw ParseError("entries must be finite");
        if (part[0] == 'r')
          m(r, c) = Complex(v, 0.0);
        else
          m(r, c) = Complex(m(r, c).real(), v);
      }
    }
  }
  return m;
}

inline json density_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline ComplexMatrix read_state_matrix(const std::string& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return matrix_from_json(j);
}

inline DensityMatrix read_state_file(const std::string& path) {
  return validate_density(read_state_matrix(path));
}

inline void write_state_file(const std::string& path, const DensityMatrix& rho) {
  write_text_file(path, density_to_json(rho).dump(2) + "\n");
}

inline json channel_to_json(const KrausChannel& ch) {
  json ks = json::array();
  for (const auto& k : ch.kraus()) ks.push_back(matrix_to_json(k));
  return json{{"dim", ch.dim()}, {"kraus", std::move(ks)}};
}

inline KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array())
    throw ParseError("channel must be an object with a kraus array");
  std::vector<ComplexMatrix> ks;
  for (const auto& k : j["kraus"]) ks.push_back(matrix_from_json(k));
  return KrausChannel(std::move(ks));
}

/// Numbers in JSON reports; +inf becomes the string "inf".
inline json extended_to_json(const ExtendedValue& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

inline json real_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

/// 12 significant digits; +inf as "inf".
inline std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_number(const ExtendedValue& v) { return format_number(v.value()); }

inline json report_to_json(const MeasureReport& r) {
  json values = json::object();
  for (auto id : kAllMeasures) values[std::string(measure_name(id))] = extended_to_json(r.get(id));
  return json{{"dim", r.dim},
              {"overlap", r.overlap},
              {"geometric_lower_bound", r.geometric_lower_bound},
              {"measures", std::move(values)},
              {"robustness_witness", r.robustness_witness}};
}

}  // namespace texlab
