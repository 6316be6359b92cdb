#pragma once

#include <string>

#include "copack/kissing.hpp"

namespace copack::report {

// Doubles are printed with 17 significant digits so reruns byte-match.
std::string format_double(double v);

std::string kissing_json(const BoundReport& r);
std::string kissing_csv(const BoundReport& r);
std::string kissing_text(const BoundReport& r);

// One-line console summary: mode=<m> dim=<n> d=<d> bound=<b> certified=<bool>
std::string kissing_summary(const BoundReport& r);

}  // namespace copack::report
