#include "gap/errors.hpp"

namespace gap {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::division_by_zero_series: return "DivisionByZeroSeries";
    case Errc::pole_at_origin: return "PoleAtOrigin";
    case Errc::order_underflow: return "OrderUnderflow";
    case Errc::invalid_parameter_c: return "InvalidParameterC";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::not_strict_appell: return "NotStrictAppell";
    case Errc::zero_shift_base: return "ZeroShiftBase";
    case Errc::order_exceeded: return "OrderExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gap
