/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (c) 2026 The carext authors
 */

#ifndef CAREXT_ERROR_HPP
#define CAREXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace carext {

// Stable error identifiers. Every failure mode the engine can signal maps to
// one of these; the CLI turns them into exit codes.
enum class errc {
  domain_error,                    // argument outside an operation's domain
  on_boundary,                     // point lies on a path where a predicate needs it off
  not_interior,                    // ball not certified inside the open disk
  endpoint_excluded,               // boundary extension undefined at arc endpoints
  injectivity_resolution_exceeded, // inverse-modulus search hit its cap
  approximation_too_coarse,        // polygonal approximant could not be repaired
  interior_not_found,              // interior-point search cap
  endpoint_search_failed,          // access-arc endpoint search cap
  arc_extension_failed,            // access-arc BFS cap
  safe_radius_failed,              // safe-radius enclosure too coarse
  boundary_value_stalled,          // length-area loop hit its iteration cap
  no_zero,                         // every subdivision cell excluded
  multiplicity_suspected,          // persistent zero clusters beyond cap
  oracle_protocol,                 // external oracle misbehaved
  cap_exceeded,                    // generic resource cap
  parse_error,                     // scenario file malformed
  certification_failed,            // requested tier not achieved
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::domain_error: return "domain-error";
    case errc::on_boundary: return "on-boundary";
    case errc::not_interior: return "not-interior";
    case errc::endpoint_excluded: return "endpoint-excluded";
    case errc::injectivity_resolution_exceeded: return "injectivity-resolution-exceeded";
    case errc::approximation_too_coarse: return "approximation-too-coarse";
    case errc::interior_not_found: return "interior-not-found";
    case errc::endpoint_search_failed: return "endpoint-search-failed";
    case errc::arc_extension_failed: return "arc-extension-failed";
    case errc::safe_radius_failed: return "safe-radius-failed";
    case errc::boundary_value_stalled: return "boundary-value-stalled";
    case errc::no_zero: return "no-zero";
    case errc::multiplicity_suspected: return "multiplicity-suspected";
    case errc::oracle_protocol: return "oracle-protocol-error";
    case errc::cap_exceeded: return "cap-exceeded";
    case errc::parse_error: return "parse-error";
    case errc::certification_failed: return "certification-failed";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace carext

#endif
