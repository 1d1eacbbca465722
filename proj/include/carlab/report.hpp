#pragma once

#include <string>

#include <json.hpp>

#include "carlab/dbar.hpp"
#include "carlab/lab.hpp"

namespace carlab {

inline constexpr const char* kReportSchema = "carlab-report/1";

/// Non-finite reals become the strings "inf", "-inf" or "nan".
nlohmann::json real_json(double v);

nlohmann::json to_json(const EmpiricalConstant& c);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const DbarSolution& s);
nlohmann::json to_json(const WitnessReport& w);
nlohmann::json to_json(const BootstrapTrace& t);
nlohmann::json to_json(const SupBound& b);

/// Header line for sweep CSV.
std::string csv_header();
/// One row per sweep point of every bound and observation:
/// check,constant,axis,axis_value,ratio,cap,witness
std::string to_csv(const VerificationReport& r);

}  // namespace carlab
