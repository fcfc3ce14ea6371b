// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "tpstailor/json_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

namespace tpstailor::io {

IoError::IoError(std::string code, std::string path, const std::string& message)
    : std::runtime_error(message), code_(std::move(code)), path_(std::move(path)) {}

namespace {

// 17 significant digits round-trip any double exactly.
std::string format_double(double x) {
  if (x == 0.0) {
    return "0";
  }
  std::array<char, 40> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                    std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

void append_escaped(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char ubuf[8];
          std::snprintf(ubuf, sizeof(ubuf), "\\u%04x", c);
          out += ubuf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void append_indent(std::string& out, int depth) {
  out.push_back('\n');
  out.append(static_cast<std::size_t>(2 * depth), ' ');
}

void dump_value(std::string& out, const Json& v, bool pretty, int depth,
                const std::string& path) {
  switch (v.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        throw IoError("non_finite", path, "non-finite number at " + path);
      }
      out += format_double(x);
      break;
    }
    case Json::value_t::string:
      append_escaped(out, v.get<std::string>());
      break;
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        break;
      }
      out.push_back('[');
      std::size_t i = 0;
      for (const Json& item : v) {
        if (i > 0) {
          out.push_back(',');
        }
        if (pretty) {
          append_indent(out, depth + 1);
        }
        dump_value(out, item, pretty, depth + 1, path + "/" + std::to_string(i));
        ++i;
      }
      if (pretty) {
        append_indent(out, depth);
      }
      out.push_back(']');
      break;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        break;
      }
      // nlohmann::json objects iterate in key order, which keeps output
      // byte-stable for identical documents.
      out.push_back('{');
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        if (i > 0) {
          out.push_back(',');
        }
        if (pretty) {
          append_indent(out, depth + 1);
        }
        append_escaped(out, it.key());
        out += pretty ? ": " : ":";
        dump_value(out, it.value(), pretty, depth + 1, path + "/" + it.key());
      }
      if (pretty) {
        append_indent(out, depth);
      }
      out.push_back('}');
      break;
    }
    default:
      throw IoError("schema", path, "unsupported value type at " + path);
  }
}

}  // namespace

std::string dump_document(const Json& doc, bool pretty) {
  std::string out;
  dump_value(out, doc, pretty, 0, "");
  return out;
}

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw IoError("parse_error", "", "input is not valid JSON");
  }
  return doc;
}

const Json& require_field(const Json& obj, const std::string& key,
                          const std::string& path) {
  if (!obj.is_object()) {
    throw IoError("schema", path, "expected an object at " + (path.empty() ? "/" : path));
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw IoError("schema", path + "/" + key, "missing field " + path + "/" + key);
  }
  return *it;
}

double require_finite_number(const Json& v, const std::string& path) {
  if (!v.is_number()) {
    throw IoError("schema", path, "expected a number at " + path);
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw IoError("non_finite", path, "non-finite number at " + path);
  }
  return x;
}

Index require_positive_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw IoError("schema", path, "expected an integer at " + path);
  }
  const std::int64_t value = v.get<std::int64_t>();
  if (value <= 0) {
    throw IoError("schema", path, "expected a positive integer at " + path);
  }
  return static_cast<Index>(value);
}

void require_kind(const Json& doc, const std::string& kind,
                  const std::string& path) {
  const Json& k = require_field(doc, "kind", path);
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw IoError("schema", path + "/kind",
                  "expected document kind \"" + kind + "\"");
  }
  const Json& version = require_field(doc, "version", path);
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1) {
    throw IoError("schema", path + "/version", "unsupported document version");
  }
}

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& v, const std::string& path) {
  if (v.is_number()) {
    return Complex(require_finite_number(v, path), 0.0);
  }
  if (!v.is_array() || v.size() != 2) {
    throw IoError("schema", path, "expected [re, im] at " + path);
  }
  return Complex(require_finite_number(v[0], path + "/0"),
                 require_finite_number(v[1], path + "/1"));
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    data.push_back(std::move(row));
  }
  return Json{{"kind", "matrix"},
              {"version", 1},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& v, const std::string& path) {
  require_kind(v, "matrix", path);
  const Index rows = require_positive_int(require_field(v, "rows", path), path + "/rows");
  const Index cols = require_positive_int(require_field(v, "cols", path), path + "/cols");
  const Json& data = require_field(v, "data", path);
  if (!data.is_array() || static_cast<Index>(data.size()) != rows) {
    throw IoError("schema", path + "/data",
                  "expected " + std::to_string(rows) + " rows at " + path + "/data");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = data[static_cast<std::size_t>(r)];
    const std::string row_path = path + "/data/" + std::to_string(r);
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw IoError("schema", row_path,
                    "expected " + std::to_string(cols) + " entries at " + row_path);
    }
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  row_path + "/" + std::to_string(c));
    }
  }
  return m;
}

Json state_to_json(const Vector& amplitudes) {
  Json amps = Json::array();
  for (Index i = 0; i < amplitudes.size(); ++i) {
    amps.push_back(complex_to_json(amplitudes[i]));
  }
  return Json{{"kind", "state"},
              {"version", 1},
              {"dim", amplitudes.size()},
              {"amplitudes", std::move(amps)}};
}

Vector state_from_json(const Json& v, const std::string& path) {
  require_kind(v, "state", path);
  const Index dim = require_positive_int(require_field(v, "dim", path), path + "/dim");
  const Json& amps = require_field(v, "amplitudes", path);
  if (!amps.is_array() || static_cast<Index>(amps.size()) != dim) {
    throw IoError("schema", path + "/amplitudes",
                  "expected " + std::to_string(dim) + " amplitudes at " + path +
                      "/amplitudes");
  }
  Vector out(dim);
  for (Index i = 0; i < dim; ++i) {
    out[i] = complex_from_json(amps[static_cast<std::size_t>(i)],
                               path + "/amplitudes/" + std::to_string(i));
  }
  if (!(out.squaredNorm() > 0.0)) {
    throw IoError("schema", path + "/amplitudes",
                  "state must have strictly positive norm");
  }
  return out;
}

Json report_to_json(const ZanardiReport& report) {
  return Json{{"independence_max_commutator", report.independence_max_commutator},
              {"generated_dim", report.generated_dim},
              {"independent", report.is_independent},
              {"complete", report.is_complete}};
}

Json pauli_map_to_json(const PauliMap& coefficients) {
  Json out = Json::object();
  for (const auto& [label, coeff] : coefficients) {
    out[label] = complex_to_json(coeff);
  }
  return out;
}

}  // namespace tpstailor::io
