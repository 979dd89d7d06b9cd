#pragma once

// Serialization of CheckReport records: one JSON object per line, or CSV with
// the columns name,equation,params,residual,tolerance,pass,detail.

#include <iosfwd>
#include <string>
#include <vector>

#include "e2fock/identities.hpp"

namespace e2fock {

enum class Format { json, csv };

/// Parses "json" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& s);

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite values and
/// "0" for both signed zeros.
std::string format_double(double v);

std::string csv_header();
/// One line without the trailing newline. NaN residuals become null in JSON.
std::string format_record(const CheckReport& r, Format f);

/// Params rendered as "k=3;x=0.5".
std::string format_params(const std::vector<Param>& params);

/// Writes the header (CSV only) followed by one line per record.
void write_reports(std::ostream& out, const std::vector<CheckReport>& records, Format f);

}  // namespace e2fock
