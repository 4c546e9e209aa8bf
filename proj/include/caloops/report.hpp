#pragma once

// JSON forms of the orbit and classification reports. Field order is fixed
// and nothing time- or host-dependent is emitted, so identical inputs give
// byte-identical documents.

#include <string>

#include "caloops/classify.hpp"
#include "caloops/orbits.hpp"

namespace caloops {

inline constexpr int kReportSchemaVersion = 1;

std::string orbit_report_json(const OrbitReport& rep);
std::string classification_report_json(const ClassificationReport& rep);

}  // namespace caloops
