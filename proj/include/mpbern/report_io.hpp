#ifndef MPBERN_REPORT_IO_HPP
#define MPBERN_REPORT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mpbern/congruence.hpp"
#include "mpbern/mahler.hpp"
#include "mpbern/numbers.hpp"
#include "mpbern/padic_bounds.hpp"

// Rationals travel as "num/den" strings, valuations as integers or "inf",
// indices as "k1,k2,...". Every to_json has a matching from_json that
// reproduces an equal value.

namespace mpbern {

using json = nlohmann::json;

void to_json(json& j, const Valuation& v);
void from_json(const json& j, Valuation& v);

void to_json(json& j, const Hypotheses& h);
void from_json(const json& j, Hypotheses& h);

void to_json(json& j, const CongruenceReport& r);
void from_json(const json& j, CongruenceReport& r);

void to_json(json& j, const BoundReport& r);
void from_json(const json& j, BoundReport& r);

void to_json(json& j, const MahlerExpansion& e);
void from_json(const json& j, MahlerExpansion& e);

void to_json(json& j, const HValue& h);

void to_json(json& j, const MpbValue& v);
MpbValue mpb_value_from_json(const json& j);

/// CSV for the congruence reports and scan summaries (header + rows).
std::string csv_header_reports();
std::string csv_row(const CongruenceReport& r);
std::string csv_header_summary();
std::string csv_row(const ScanSummaryRow& row);

}  // namespace mpbern

#endif  // MPBERN_REPORT_IO_HPP
