#pragma once

// Named invariant sweeps.  Each suite adds one check per invariant, with the
// number of instances examined and the first counterexample on failure.

#include "eiscoh/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eiscoh {

struct suite_options {
  int max_g = 4;
  int max_entry = 6;
};

// Grid 0 <= m <= l <= bound, l = m (mod 2) used by the g2 and duality suites.
inline constexpr int kG2GridBound = 20;
// Even k in [0, bound] for the genus-one checks.
inline constexpr int kGenusOneBound = 40;

verification_report weyl_suite(const suite_options& opt);
verification_report telescope_suite(const suite_options& opt);
verification_report partition_suite(const suite_options& opt);
verification_report g2_suite(const suite_options& opt);
verification_report duality_suite(const suite_options& opt);

const std::vector<std::string>& suite_names(); // includes "all"

// Throws invalid_argument_error on an unknown name.
verification_report run_suite(std::string_view name, const suite_options& opt);

} // namespace eiscoh
