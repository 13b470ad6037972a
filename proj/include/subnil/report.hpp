#pragma once

#include <string>

#include "subnil/probability.hpp"

namespace subnil {

// Ratios render as "num/den" strings ("1/2", "1"); no floating point unless
// decimals are explicitly requested.
std::string to_json(const NilReport &report, bool decimals = false);
std::string to_csv(const NilReport &report, bool decimals = false);
std::string csv_header_nilreport();

std::string to_json(const SweepReport &report);
std::string to_csv(const SweepReport &report);

} // namespace subnil
