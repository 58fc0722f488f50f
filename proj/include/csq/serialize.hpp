#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "csq/frames.hpp"
#include "csq/quantize.hpp"

namespace csq {

// All report numbers pass through here: rounded to 12 significant
// digits, and non-finite values are rejected (std::domain_error) so no
// NaN/Inf ever reaches an output artifact.
double round_significant(double v, int digits = 12);
nlohmann::json json_real(double v);
nlohmann::json json_complex(cdouble z);            // [re, im]
nlohmann::json json_matrix(const CMatrix& m);      // row-major nested [re, im]
nlohmann::json json_rmatrix(const RMatrix& m);
nlohmann::json json_real_vector(const std::vector<double>& v);
nlohmann::json json_complex_vector(const std::vector<cdouble>& v);

std::string format_real(double v);  // %.12g, finite-checked

nlohmann::json to_json(const MeasureSpace& space);
MeasureSpace space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Frame& frame);
Frame frame_from_json(const nlohmann::json& j);

// CSV with header "x0,lower_symbol", comma separated, LF line endings,
// 12 significant digits.
void write_csv_curve(std::ostream& out, const std::vector<double>& x0,
                     const std::vector<double>& values);

}  // namespace csq
