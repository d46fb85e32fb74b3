#pragma once

#include <iosfwd>
#include <string>

#include "orbitkit/verify.hpp"

namespace orbitkit {

// JSON conventions shared by the campaign reports and the CLI: complex
// numbers as [re, im] arrays, floats emitted with 17 significant digits so
// every value round-trips exactly.

ojson to_json(const cplx& z);
ojson to_json(const Point3C& p); // [[re,im],[re,im],[re,im]]
ojson to_json(const Target& t);  // {"a": [..], "b": [..], "c": ..}
ojson to_json(const CPoint& p);  // {"r": [..], "v": [[..]..]}
ojson to_json(const GroupElement& g);

/// {suite, n, samples, seed, failures, max_residual, elapsed_ms, ...}
ojson report_to_json(const CampaignReport& report);

/// Serialize with deterministic formatting: fixed key order (insertion
/// order), no whitespace, doubles via %.17g with a ".0" suffix when the
/// rendering would otherwise read as an integer.
void dump_json(const ojson& j, std::ostream& out);
std::string dump_json(const ojson& j);

/// Single double under the same rules (used by the CSV writer too).
std::string format_double(double v);

} // namespace orbitkit
