#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schumult {

enum class Errc {
    bad_dimensions,
    not_strictly_increasing,
    out_of_range,
    not_dominated,
    not_special_case,
    method_inapplicable,
    size_guard,
    guard_exceeded,
    family_invalid,
    array_invalid,
    no_preimage,
    degenerate_shape,
    parse_error,
    index_out_of_range,
    disagreement,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::bad_dimensions:          return "BadDimensions";
        case Errc::not_strictly_increasing: return "NotStrictlyIncreasing";
        case Errc::out_of_range:            return "OutOfRange";
        case Errc::not_dominated:           return "NotDominated";
        case Errc::not_special_case:        return "NotSpecialCase";
        case Errc::method_inapplicable:     return "MethodInapplicable";
        case Errc::size_guard:              return "SizeGuard";
        case Errc::guard_exceeded:          return "GuardExceeded";
        case Errc::family_invalid:          return "FamilyInvalid";
        case Errc::array_invalid:           return "ArrayInvalid";
        case Errc::no_preimage:             return "NoPreimage";
        case Errc::degenerate_shape:        return "DegenerateShape";
        case Errc::parse_error:             return "ParseError";
        case Errc::index_out_of_range:      return "IndexOutOfRange";
        case Errc::disagreement:            return "DisagreementDetected";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace schumult
