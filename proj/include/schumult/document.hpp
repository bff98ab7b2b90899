#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schumult/multiplicity.hpp"

namespace schumult {

/// Schema tag carried by every interchange document.
inline constexpr std::string_view schema_tag = "schubert-mult/1";

/// A problem instance as it travels through files and pipes. Parses to a
/// valid SchubertDatum or yields a structured error.
struct InstanceDocument {
    int n = 0;
    int d = 0;
    std::vector<int> i;
    std::vector<int> j;
    std::string label;

    bool operator==(const InstanceDocument&) const = default;
};

inline SchubertDatum to_datum(const InstanceDocument& doc) {
    return validate(doc.n, doc.d, doc.i, doc.j);
}

inline InstanceDocument instance_of(const SchubertDatum& datum, std::string label = {}) {
    return InstanceDocument{datum.n, datum.d, datum.i, datum.j, std::move(label)};
}

/// Stable label used in file names when none was given: n4d2i2-4j1-2.
inline std::string default_label(const InstanceDocument& doc) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) s += '-';
            s += std::to_string(v[k]);
        }
        return s;
    };
    return "n" + std::to_string(doc.n) + "d" + std::to_string(doc.d) + "i" + join(doc.i) + "j" +
           join(doc.j);
}

/// Per-instance result: echo of the instance, every method value computed,
/// methods skipped (and why), the agreement verdict over the non-printed
/// methods, s-vector, and partition/Frobenius data in the special case.
/// Timings are carried but only serialized on request, so that identical
/// invocations stay byte-identical by default.
struct ResultDocument {
    InstanceDocument instance;
    SVector s;
    bool special = false;
    std::vector<int> partition;        // only meaningful when special
    FrobeniusCoords frob;              // only meaningful when special
    std::vector<std::pair<std::string, Integer>> methods;
    std::vector<std::pair<std::string, std::string>> skipped;
    bool agreement = false;
    std::vector<std::pair<std::string, std::int64_t>> timing_us;

    bool operator==(const ResultDocument&) const = default;
};

// ---------------------------------------------------------------------------
// Serialization: "schubert-mult/1" then "key: value" lines, arrays as
// comma-separated integers with "-" for the empty list. Instances also admit
// a compact one-line form "n=4 d=2 i=2,4 j=1,2 label=x" for batch files.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string int_list(const std::vector<int>& v) {
    if (v.empty()) return "-";
    return vec_str(v);
}

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text == "-") return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(Errc::parse_error, "bad integer list entry '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline int parse_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(Errc::parse_error, "bad integer '" + std::string(text) + "'");
    return value;
}

inline std::int64_t parse_int64(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(Errc::parse_error, "bad integer '" + std::string(text) + "'");
    return value;
}

inline bool parse_bool(std::string_view text) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw Error(Errc::parse_error, "bad boolean '" + std::string(text) + "'");
}

inline Integer parse_big(std::string_view text) {
    if (text.empty()) throw Error(Errc::parse_error, "empty integer value");
    std::size_t k = text[0] == '-' ? 1 : 0;
    if (k == text.size()) throw Error(Errc::parse_error, "bad integer '" + std::string(text) + "'");
    for (; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw Error(Errc::parse_error, "bad integer '" + std::string(text) + "'");
    return Integer(std::string(text));
}

inline void check_label(const std::string& label) {
    for (char c : label) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '-' || c == '_' || c == '.';
        if (!ok)
            throw Error(Errc::parse_error, "label may contain only [A-Za-z0-9._-], got '" + label + "'");
    }
}

/// Parsed "key: value" lines below the schema tag.
inline std::vector<std::pair<std::string, std::string>> document_pairs(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (line.empty()) continue;
        if (first) {
            if (line != schema_tag)
                throw Error(Errc::parse_error, "expected schema tag '" + std::string(schema_tag) +
                                                   "', got '" + std::string(line) + "'");
            first = false;
            continue;
        }
        std::size_t sep = line.find(": ");
        if (sep == std::string_view::npos)
            throw Error(Errc::parse_error, "expected 'key: value', got '" + std::string(line) + "'");
        pairs.emplace_back(std::string(line.substr(0, sep)), std::string(line.substr(sep + 2)));
    }
    if (first) throw Error(Errc::parse_error, "empty document");
    return pairs;
}

} // namespace detail

inline std::string print_document(const InstanceDocument& doc) {
    std::string out(schema_tag);
    out += "\nkind: instance\n";
    if (!doc.label.empty()) out += "label: " + doc.label + "\n";
    out += "n: " + std::to_string(doc.n) + "\n";
    out += "d: " + std::to_string(doc.d) + "\n";
    out += "i: " + detail::int_list(doc.i) + "\n";
    out += "j: " + detail::int_list(doc.j) + "\n";
    return out;
}

/// One-line form used by batch files.
inline std::string print_instance_line(const InstanceDocument& doc) {
    std::string out = "n=" + std::to_string(doc.n) + " d=" + std::to_string(doc.d) +
                      " i=" + detail::int_list(doc.i) + " j=" + detail::int_list(doc.j);
    if (!doc.label.empty()) out += " label=" + doc.label;
    return out;
}

inline InstanceDocument parse_instance(std::string_view text) {
    InstanceDocument doc;
    bool saw_n = false, saw_d = false, saw_i = false, saw_j = false;
    auto apply = [&](std::string_view key, std::string_view value) {
        if (key == "n") {
            doc.n = detail::parse_int(value);
            saw_n = true;
        } else if (key == "d") {
            doc.d = detail::parse_int(value);
            saw_d = true;
        } else if (key == "i") {
            doc.i = detail::parse_int_list(value);
            saw_i = true;
        } else if (key == "j") {
            doc.j = detail::parse_int_list(value);
            saw_j = true;
        } else if (key == "label") {
            doc.label = std::string(value);
            detail::check_label(doc.label);
        } else if (key == "kind") {
            if (value != "instance")
                throw Error(Errc::parse_error, "expected kind instance, got '" + std::string(value) + "'");
        } else {
            throw Error(Errc::parse_error, "unknown instance key '" + std::string(key) + "'");
        }
    };
    if (text.find('\n') != std::string_view::npos || text.starts_with(schema_tag)) {
        for (const auto& [key, value] : detail::document_pairs(text)) apply(key, value);
    } else {
        // one-line form: whitespace-separated key=value tokens
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos >= text.size()) break;
            std::size_t end = text.find(' ', pos);
            std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                                  : end - pos);
            pos = end == std::string_view::npos ? text.size() : end + 1;
            std::size_t eq = tok.find('=');
            if (eq == std::string_view::npos)
                throw Error(Errc::parse_error, "expected key=value, got '" + std::string(tok) + "'");
            apply(tok.substr(0, eq), tok.substr(eq + 1));
        }
    }
    if (!saw_n || !saw_d || !saw_i || !saw_j)
        throw Error(Errc::parse_error, "instance needs n, d, i and j");
    return doc;
}

inline std::string print_document(const ResultDocument& doc, bool with_timings = false) {
    std::string out(schema_tag);
    out += "\nkind: result\n";
    if (!doc.instance.label.empty()) out += "label: " + doc.instance.label + "\n";
    out += "n: " + std::to_string(doc.instance.n) + "\n";
    out += "d: " + std::to_string(doc.instance.d) + "\n";
    out += "i: " + detail::int_list(doc.instance.i) + "\n";
    out += "j: " + detail::int_list(doc.instance.j) + "\n";
    out += "s: " + detail::int_list(doc.s) + "\n";
    out += std::string("special: ") + (doc.special ? "true" : "false") + "\n";
    if (doc.special) {
        out += "partition: " + detail::int_list(doc.partition) + "\n";
        out += "frobenius.r: " + std::to_string(doc.frob.r) + "\n";
        out += "frobenius.alpha: " + detail::int_list(doc.frob.alpha) + "\n";
        out += "frobenius.beta: " + detail::int_list(doc.frob.beta) + "\n";
    }
    for (const auto& [name, value] : doc.methods) out += "method." + name + ": " + value.str() + "\n";
    for (const auto& [name, why] : doc.skipped) out += "skipped." + name + ": " + why + "\n";
    out += std::string("agreement: ") + (doc.agreement ? "true" : "false") + "\n";
    if (with_timings)
        for (const auto& [name, us] : doc.timing_us)
            out += "timing_us." + name + ": " + std::to_string(us) + "\n";
    return out;
}

inline ResultDocument parse_result(std::string_view text) {
    ResultDocument doc;
    bool saw_kind = false;
    for (const auto& [key, value] : detail::document_pairs(text)) {
        if (key == "kind") {
            if (value != "result")
                throw Error(Errc::parse_error, "expected kind result, got '" + value + "'");
            saw_kind = true;
        } else if (key == "label") {
            doc.instance.label = value;
            detail::check_label(doc.instance.label);
        } else if (key == "n") {
            doc.instance.n = detail::parse_int(value);
        } else if (key == "d") {
            doc.instance.d = detail::parse_int(value);
        } else if (key == "i") {
            doc.instance.i = detail::parse_int_list(value);
        } else if (key == "j") {
            doc.instance.j = detail::parse_int_list(value);
        } else if (key == "s") {
            doc.s = detail::parse_int_list(value);
        } else if (key == "special") {
            doc.special = detail::parse_bool(value);
        } else if (key == "partition") {
            doc.partition = detail::parse_int_list(value);
        } else if (key == "frobenius.r") {
            doc.frob.r = detail::parse_int(value);
        } else if (key == "frobenius.alpha") {
            doc.frob.alpha = detail::parse_int_list(value);
        } else if (key == "frobenius.beta") {
            doc.frob.beta = detail::parse_int_list(value);
        } else if (key == "agreement") {
            doc.agreement = detail::parse_bool(value);
        } else if (key.starts_with("method.")) {
            doc.methods.emplace_back(key.substr(7), detail::parse_big(value));
        } else if (key.starts_with("skipped.")) {
            doc.skipped.emplace_back(key.substr(8), value);
        } else if (key.starts_with("timing_us.")) {
            doc.timing_us.emplace_back(key.substr(10), detail::parse_int64(value));
        } else {
            throw Error(Errc::parse_error, "unknown result key '" + key + "'");
        }
    }
    if (!saw_kind) throw Error(Errc::parse_error, "missing kind line");
    return doc;
}

// ---------------------------------------------------------------------------
// Result construction.
// ---------------------------------------------------------------------------

/// Evaluates the requested methods on one instance. rz, thm5 and the printed
/// thm5 variant are always reported; lw/enum_p require the special case
/// (an explicit request outside it throws, under `all` they are recorded as
/// skipped); enumerations that trip the guard are recorded as skipped when
/// running under `all`, and throw when requested explicitly.
inline ResultDocument compute_result(const InstanceDocument& instance, std::vector<Method> methods,
                                     MethodOptions opt = {}, bool collect_timings = false) {
    SchubertDatum datum = to_datum(instance);
    ResultDocument doc;
    doc.instance = instance;
    doc.s = s_vector(datum);
    doc.special = is_special_case(datum);
    if (doc.special) {
        Partition lambda = partition_from_i(datum);
        doc.partition = lambda.parts();
        doc.frob = frobenius(lambda);
    }

    bool all = methods.empty();
    for (Method m : methods)
        if (m == Method::all) all = true;
    auto requested = [&](Method m) {
        if (all) return true;
        for (Method r : methods)
            if (r == m) return true;
        return false;
    };

    auto timed = [&](const char* name, auto&& compute) {
        auto t0 = std::chrono::steady_clock::now();
        Integer value = compute();
        auto t1 = std::chrono::steady_clock::now();
        doc.methods.emplace_back(name, std::move(value));
        if (collect_timings)
            doc.timing_us.emplace_back(
                name, std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    };
    auto run = [&](Method m, const char* name, auto&& compute) {
        if (!requested(m)) return;
        bool applicable = (m != Method::lw && m != Method::enum_p) || doc.special;
        if (!applicable) {
            if (all)
                doc.skipped.emplace_back(name, "not-applicable");
            else
                throw Error(Errc::method_inapplicable, std::string("method ") + name +
                                                           " requires j=(1,...,d)");
            return;
        }
        try {
            timed(name, compute);
        } catch (const Error& e) {
            if (e.code() == Errc::guard_exceeded && all)
                doc.skipped.emplace_back(name, "guard-exceeded");
            else
                throw;
        }
    };

    // rz, thm5 and the printed variant are part of every record
    timed("rz", [&] { return multiplicity_rz(datum); });
    timed("thm5", [&] {
        return opt.fault_thm5_printed ? thm5_printed_variant(datum) : multiplicity_thm5(datum);
    });
    timed("thm5_printed", [&] { return thm5_printed_variant(datum); });
    run(Method::lw, "lw", [&] { return multiplicity_lw(datum); });
    run(Method::enum_q, "enum_q", [&] { return detail::enum_count(q_spec(datum), opt.guard); });
    run(Method::enum_p, "enum_p", [&] { return detail::enum_count(p_spec(datum), opt.guard); });
    run(Method::enum_r, "enum_r", [&] { return detail::enum_count(r_spec(datum), opt.guard); });
    run(Method::enum_tableaux, "enum_tableaux", [&] { return count_tableaux(datum, opt.guard); });

    doc.agreement = true;
    for (const auto& [name, value] : doc.methods) {
        if (name == "thm5_printed") continue;
        if (value != doc.methods.front().second) doc.agreement = false;
    }
    return doc;
}

} // namespace schumult
