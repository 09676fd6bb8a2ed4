#pragma once

#include <optional>
#include <string>

#include "dicke/observables.hpp"

namespace dicke {

// Literal used for undefined values (Mandel Q in the vacuum limit, analytic
// columns outside their domain).
inline constexpr const char* kNaToken = "NA";

// Floats are printed with 12 significant digits ("%.12g"), which is what
// makes repeated runs byte-identical.
std::string format_value(double x);

// format_value, but NA for a disengaged optional.
std::string format_optional(const std::optional<double>& x);

// One data row of a *_records.csv file:
//   lambda,e0,gap,n_photon,var_n,q,var_x1,var_x2,converged,cutoff,status
// converged prints as 0/1; q may be NA.
inline constexpr const char* kRecordHeader =
    "lambda,e0,gap,n_photon,var_n,q,var_x1,var_x2,converged,cutoff,status";

struct RecordRow {
    double lambda;
    ObservableRecord record;
    std::string status;
};

std::string format_record_row(const RecordRow& row);

// Inverse of format_record_row. Throws std::invalid_argument on a malformed
// row; round-trips exactly: format(parse(line)) == line for emitted lines.
RecordRow parse_record_row(const std::string& line);

}  // namespace dicke
