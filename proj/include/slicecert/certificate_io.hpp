#pragma once

#include <string>

#include "slicecert/aux_results.hpp"
#include "slicecert/casework.hpp"

namespace slicecert {

enum class CertFormat { json, markdown };

// Schema v1: {input, assumptions, decomposition, cases:[{label, citation,
// classes, parameters, verdict, witness}], verdict}.  Byte-stable: keys
// sorted, arrays in generation order, no timestamps.
std::string emit_certificate(const Certificate& cert, CertFormat format);
std::string emit_aux_certificate(const AuxCertificate& cert, CertFormat format);

// Round-trip of the JSON encoding back into a Certificate.
Certificate parse_certificate_json(const std::string& text);

// Command line surface; returns the process exit code
// (0 success / NOT_SLICE, 2 INCONCLUSIVE, 1 error).
int cli_dispatch(int argc, const char* const* argv);

}  // namespace slicecert
