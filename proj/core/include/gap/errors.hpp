#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gap {

enum class Errc {
  division_by_zero,         // rational division by zero
  division_by_zero_series,  // divisor series is identically zero
  pole_at_origin,           // valuation(num) < valuation(den)
  order_underflow,          // derivative of an order-0 series
  invalid_parameter_c,      // (c)_k vanishes inside the working order
  unknown_family,
  not_strict_appell,        // A_0 = 0, beta coefficients undefined
  zero_shift_base,          // summation formula with y = 0
  order_exceeded,           // projection beyond the precomputed tables
  parse_error,
};

/// Name used in diagnostics and CLI reports, e.g. "InvalidParameterC".
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gap
