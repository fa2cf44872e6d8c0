#pragma once

#include "foliadeg/bott.hpp"
#include "foliadeg/polynomial_lab.hpp"

#include <string>

namespace foliadeg {

/// {"family":..,"d":2,"weights":[0,2,7,10],"contributions":[{"pair":[1,2],"num":"..","den":"..","value":".."},..],
///  "degree":"2224"}, plus "method" for the legendrian family.
std::string to_json(const DegreeReport& r);
DegreeReport degree_report_from_json(const std::string& text);
std::string to_text(const DegreeReport& r);

std::string to_json(const InterpolationResult& r);
std::string to_text(const InterpolationResult& r);

}  // namespace foliadeg
