#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fueter {

/// Base of every domain error raised by the library. `name()` is the stable
/// identifier used in CLI error reports.
class error : public std::runtime_error {
public:
    error(std::string_view name, const std::string& what)
        : std::runtime_error(what), name_(name) {}

    [[nodiscard]] std::string_view name() const noexcept { return name_; }

private:
    std::string_view name_;
};

#define FUETER_DEFINE_ERROR(type, label)                                   \
    class type : public error {                                            \
    public:                                                                \
        explicit type(const std::string& what) : error(label, what) {}     \
    }

FUETER_DEFINE_ERROR(zero_quaternion, "ZeroQuaternion");
FUETER_DEFINE_ERROR(on_real_axis, "OnRealAxis");
FUETER_DEFINE_ERROR(polar_axis, "PolarAxis");
FUETER_DEFINE_ERROR(not_unit, "NotUnit");
FUETER_DEFINE_ERROR(zero_denominator, "ZeroDenominator");
FUETER_DEFINE_ERROR(near_pole, "NearPole");
FUETER_DEFINE_ERROR(zero_element, "ZeroElement");
FUETER_DEFINE_ERROR(region_violation, "RegionViolation");
FUETER_DEFINE_ERROR(too_close_to_axis, "TooCloseToAxis");
FUETER_DEFINE_ERROR(dichotomy_violation, "DichotomyViolation");
FUETER_DEFINE_ERROR(precondition_violation, "PreconditionViolation");

#undef FUETER_DEFINE_ERROR

class syntax_error : public error {
public:
    syntax_error(std::size_t position, const std::string& what)
        : error("SyntaxError", what + " at position " + std::to_string(position)),
          position_(position) {}

    /// Zero-based byte offset into the seed text.
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace fueter
