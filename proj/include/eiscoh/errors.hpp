#pragma once

#include <stdexcept>
#include <string>

namespace eiscoh {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class invalid_argument_error : public error {
public:
  using error::error;
};

// restrict_final called on an element outside the requested half.
class side_mismatch_error : public error {
public:
  using error::error;
};

// Two non-trivial symbols multiplied together.
class unsupported_product_error : public error {
public:
  using error::error;
};

// dual() met an Ec(g, lambda) with g >= 2 that cannot be rewritten.
class not_expandable_error : public error {
public:
  using error::error;
};

// A monomial sits exactly on the weight threshold.
class ambiguous_split_error : public error {
public:
  using error::error;
};

} // namespace eiscoh
