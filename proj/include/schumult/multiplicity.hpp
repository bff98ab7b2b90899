#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schumult/tableaux.hpp"

namespace schumult {

enum class Method { rz, lw, thm5, enum_q, enum_p, enum_r, enum_tableaux, all };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::rz:            return "rz";
        case Method::lw:            return "lw";
        case Method::thm5:          return "thm5";
        case Method::enum_q:        return "enum_q";
        case Method::enum_p:        return "enum_p";
        case Method::enum_r:        return "enum_r";
        case Method::enum_tableaux: return "enum_tableaux";
        case Method::all:           return "all";
    }
    return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
    for (Method m : {Method::rz, Method::lw, Method::thm5, Method::enum_q, Method::enum_p,
                     Method::enum_r, Method::enum_tableaux, Method::all})
        if (s == method_name(m)) return m;
    return std::nullopt;
}

/// Raised by the all-method dispatch when two applicable formulas or
/// enumerations return different values. Carries every computed value:
/// if this is ever thrown on a valid datum, the payload is the finding.
class DisagreementError : public Error {
public:
    explicit DisagreementError(std::vector<std::pair<std::string, Integer>> values)
        : Error(Errc::disagreement, describe(values)), values_(std::move(values)) {}

    const std::vector<std::pair<std::string, Integer>>& values() const noexcept { return values_; }

private:
    static std::string describe(const std::vector<std::pair<std::string, Integer>>& values) {
        std::string s = "methods disagree:";
        for (const auto& [name, v] : values) s += " " + name + "=" + v.str();
        return s;
    }

    std::vector<std::pair<std::string, Integer>> values_;
};

struct MethodOptions {
    std::int64_t guard = default_guard;
    /// Substitutes the printed indexing of the alternative determinant for
    /// the corrected one; exists so the disagreement detector can be
    /// exercised end to end.
    bool fault_thm5_printed = false;
};

/// Number of valid arrays for the datum; d = 1 has the single empty array.
inline Integer count_tableaux(const SchubertDatum& datum, std::int64_t guard = default_guard) {
    if (datum.d < 2) return 1;
    return Integer(enumerate_arrays(shape_of(datum), guard).size());
}

namespace detail {

inline Integer enum_count(const FamilySpec& spec, std::int64_t guard) {
    return family_count(enumerate_nonintersecting(spec, guard));
}

} // namespace detail

/// Computes the multiplicity by one named route, or by all applicable
/// routes with a pairwise equality gate (method all). For method all the
/// special-case routes (lw, enum_p) run only when j = (1,...,d) and the
/// enumeration routes only when the guard admits them; a mismatch raises
/// DisagreementError carrying every computed value.
inline Integer multiplicity(const SchubertDatum& datum, Method method, MethodOptions opt = {}) {
    auto thm5_value = [&] {
        return opt.fault_thm5_printed ? thm5_printed_variant(datum) : multiplicity_thm5(datum);
    };
    switch (method) {
        case Method::rz:    return multiplicity_rz(datum);
        case Method::lw:
            if (!is_special_case(datum))
                throw Error(Errc::method_inapplicable, "method lw requires j=(1,...,d)");
            return multiplicity_lw(datum);
        case Method::thm5:  return thm5_value();
        case Method::enum_q: return detail::enum_count(q_spec(datum), opt.guard);
        case Method::enum_p:
            if (!is_special_case(datum))
                throw Error(Errc::method_inapplicable, "method enum_p requires j=(1,...,d)");
            return detail::enum_count(p_spec(datum), opt.guard);
        case Method::enum_r: return detail::enum_count(r_spec(datum), opt.guard);
        case Method::enum_tableaux: return count_tableaux(datum, opt.guard);
        case Method::all:
            break;
    }

    std::vector<std::pair<std::string, Integer>> values;
    values.emplace_back("rz", multiplicity_rz(datum));
    values.emplace_back("thm5", thm5_value());
    if (is_special_case(datum)) values.emplace_back("lw", multiplicity_lw(datum));
    auto try_enum = [&](const char* name, auto&& compute) {
        try {
            values.emplace_back(name, compute());
        } catch (const Error& e) {
            if (e.code() != Errc::guard_exceeded) throw;
        }
    };
    try_enum("enum_q", [&] { return detail::enum_count(q_spec(datum), opt.guard); });
    if (is_special_case(datum))
        try_enum("enum_p", [&] { return detail::enum_count(p_spec(datum), opt.guard); });
    try_enum("enum_r", [&] { return detail::enum_count(r_spec(datum), opt.guard); });
    try_enum("enum_tableaux", [&] { return count_tableaux(datum, opt.guard); });

    for (const auto& [name, v] : values)
        if (v != values.front().second) throw DisagreementError(values);
    return values.front().second;
}

} // namespace schumult
