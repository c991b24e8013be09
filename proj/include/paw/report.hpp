#ifndef PAW_REPORT_HPP
#define PAW_REPORT_HPP

#include <json.hpp>

#include "paw/engine.hpp"
#include "paw/kernel.hpp"
#include "paw/parse.hpp"

// Stable JSON shapes for every machine-readable result. Key order is
// fixed (ordered_json) and arbitrary-precision values are rendered as
// decimal strings, so identical inputs serialize byte-identically.

namespace paw {

using Json = nlohmann::ordered_json;

Json to_json(const ParseError& e);
Json to_json(const Evidence& e);
Json to_json(const Verdict& v);
Json to_json(const VerifyTable& t);
Json to_json(const CheckReport& r);
Json to_json(const Decider& d);
Json to_json(const NotFound& n);
Json to_json(const ClassifyResult& c);
Json to_json(const ScanReport& s);

}  // namespace paw

#endif  // PAW_REPORT_HPP
