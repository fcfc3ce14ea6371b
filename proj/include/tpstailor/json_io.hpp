// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tpstailor/algebra.hpp"
#include "tpstailor/tailor.hpp"
#include "tpstailor/types.hpp"

namespace tpstailor::io {

using Json = nlohmann::json;

/// Carries a machine-readable error code plus the JSON pointer-style path of
/// the offending field ("" when not tied to a field).
class IoError : public std::runtime_error {
 public:
  IoError(std::string code, std::string path, const std::string& message);

  const std::string& code() const { return code_; }
  const std::string& path() const { return path_; }

 private:
  std::string code_;
  std::string path_;
};

/// Deterministic serializer: object keys sorted, floating-point numbers
/// rendered with 17 significant digits (lossless for doubles), two-space
/// indentation in pretty mode. Rejects non-finite numbers with the path of
/// the offender.
std::string dump_document(const Json& doc, bool pretty = false);

/// Parse text into a document; malformed input raises IoError("parse_error").
Json parse_document(const std::string& text);

// Complex scalars travel as [re, im]; readers also accept a bare number as a
// real value. All documents are self-describing: {"kind": ..., "version": 1}.

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& v, const std::string& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& v, const std::string& path);

Json state_to_json(const Vector& amplitudes);
Vector state_from_json(const Json& v, const std::string& path);

Json report_to_json(const ZanardiReport& report);
Json pauli_map_to_json(const PauliMap& coefficients);

// Field access helpers; failures raise IoError("schema", path).
const Json& require_field(const Json& obj, const std::string& key,
                          const std::string& path);
Index require_positive_int(const Json& v, const std::string& path);
double require_finite_number(const Json& v, const std::string& path);
void require_kind(const Json& doc, const std::string& kind,
                  const std::string& path);

}  // namespace tpstailor::io
