#pragma once

#include <string>

#include "pathcover/witness.hpp"

namespace pathcover {

/// A certificate as stored on disk. Engines that fail still write one, with
/// `valid` false and the error text and state dump attached.
struct CertificateDocument {
  CoverCertificate cert;
  bool valid = true;
  std::string error;
  std::string state;
};

/// JSON object with keys shape, red_paths, red_tree, parts, power, valid,
/// error, state. Output is deterministic for equal inputs.
std::string certificate_to_json(const CertificateDocument& doc);
/// Inverse of certificate_to_json; throws PreconditionError on malformed input.
CertificateDocument parse_certificate(const std::string& text);
CertificateDocument read_certificate(const std::string& path);
void write_certificate(const std::string& path, const CertificateDocument& doc);

}  // namespace pathcover
