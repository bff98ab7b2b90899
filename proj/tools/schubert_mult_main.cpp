// schubert-mult: multiplicities of points on Schubert varieties in
// Grassmannians, computed by independent determinant formulas and
// enumeration oracles that cross-check each other.
//
// Exit codes: 0 success/agreement, 1 usage or validation error,
// 2 mathematical disagreement, 3 enumeration guard exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schumult/schumult.hpp"

namespace {

using namespace schumult;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_disagreement = 2;
constexpr int exit_guard = 3;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::disagreement:   return exit_disagreement;
        case Errc::guard_exceeded: return exit_guard;
        default:                   return exit_usage;
    }
}

std::int64_t env_guard() {
    if (const char* env = std::getenv("SCHUBERT_MULT_GUARD")) {
        try {
            return std::stoll(env);
        } catch (...) {
            std::cerr << "error: bad SCHUBERT_MULT_GUARD value '" << env << "'\n";
            std::exit(exit_usage);
        }
    }
    return default_guard;
}

struct InstanceFlags {
    int n = 0;
    int d = 0;
    std::string i, j, label;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
    cmd->add_option("--n", flags.n, "ambient dimension");
    cmd->add_option("--d", flags.d, "subspace dimension");
    cmd->add_option("--i", flags.i, "index vector i, comma separated");
    cmd->add_option("--j", flags.j, "index vector j, comma separated");
    cmd->add_option("--label", flags.label, "instance label used in output and file names");
}

InstanceDocument instance_from_flags(const InstanceFlags& flags) {
    InstanceDocument doc;
    doc.n = flags.n;
    doc.d = flags.d;
    doc.i = detail::parse_int_list(flags.i.empty() ? "-" : flags.i);
    doc.j = detail::parse_int_list(flags.j.empty() ? "-" : flags.j);
    doc.label = flags.label;
    detail::check_label(doc.label);
    return doc;
}

std::vector<Method> parse_method_list(const std::string& text) {
    std::vector<Method> methods;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::optional<Method> m = parse_method(tok);
        if (!m) throw Error(Errc::parse_error, "unknown method '" + tok + "'");
        methods.push_back(*m);
    }
    return methods;
}

int run_compute_one(const InstanceDocument& instance, const std::vector<Method>& methods,
                    const MethodOptions& opt, bool timings, std::ostream& out) {
    ResultDocument doc = compute_result(instance, methods, opt, timings);
    out << print_document(doc, timings);
    return doc.agreement ? exit_ok : exit_disagreement;
}

int cmd_compute(const InstanceFlags& flags, const std::string& method_list,
                const std::string& batch, std::int64_t guard, bool timings) {
    MethodOptions opt;
    opt.guard = guard;
    std::vector<Method> methods = parse_method_list(method_list);
    if (batch.empty())
        return run_compute_one(instance_from_flags(flags), methods, opt, timings, std::cout);

    std::ifstream file;
    std::istream* in = &std::cin;
    if (batch != "-") {
        file.open(batch);
        if (!file) {
            std::cerr << "error: cannot open batch file '" << batch << "'\n";
            return exit_usage;
        }
        in = &file;
    }
    // one instance per line; failed lines are reported and do not abort
    int worst = exit_ok;
    auto bump = [&](int code) {
        if (code == exit_disagreement || worst == exit_disagreement)
            worst = exit_disagreement;
        else if (code != exit_ok)
            worst = std::max(worst, code);
    };
    std::string line;
    bool first = true;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        if (!first) std::cout << "\n";
        first = false;
        try {
            bump(run_compute_one(parse_instance(line), methods, opt, timings, std::cout));
        } catch (const Error& e) {
            std::cout << schema_tag << "\nkind: error\ninput: " << line << "\nerror: " << e.what()
                      << "\n";
            bump(exit_code_for(e));
        }
    }
    return worst;
}

int cmd_enumerate(const InstanceFlags& flags, const std::string& model, long limit,
                  std::int64_t guard) {
    InstanceDocument instance = instance_from_flags(flags);
    SchubertDatum datum = to_datum(instance);
    std::cout << schema_tag << "\nkind: enumeration\n";
    if (!instance.label.empty()) std::cout << "label: " << instance.label << "\n";
    std::cout << "n: " << datum.n << "\nd: " << datum.d << "\ni: " << detail::int_list(datum.i)
              << "\nj: " << detail::int_list(datum.j) << "\nmodel: " << model << "\n";

    auto list_paths = [&](const FamilySpec& spec) {
        std::vector<PathFamily> fams = enumerate_families(spec, guard);
        std::cout << "count: " << fams.size() << "\n";
        long shown = 0;
        for (std::size_t k = 0; k < fams.size(); ++k) {
            if (limit >= 0 && shown >= limit) break;
            std::cout << "family." << k << ":";
            for (const MonotonePath& p : fams[k].paths)
                std::cout << " " << (p.steps.empty() ? "-" : p.steps);
            std::cout << "\n";
            ++shown;
        }
    };
    if (model == "q") {
        list_paths(q_spec(datum));
    } else if (model == "p") {
        list_paths(p_spec(datum));
    } else if (model == "r") {
        list_paths(r_spec(datum));
    } else if (model == "tableaux") {
        if (datum.d < 2) {
            std::cout << "count: 1\narray.0: -\n";
            return exit_ok;
        }
        std::vector<UnusualArray> arrays = enumerate_arrays(shape_of(datum), guard);
        std::cout << "count: " << arrays.size() << "\n";
        long shown = 0;
        for (std::size_t k = 0; k < arrays.size(); ++k) {
            if (limit >= 0 && shown >= limit) break;
            std::cout << "array." << k << ":";
            for (const std::vector<int>& col : arrays[k].columns)
                std::cout << " [" << detail::vec_str(col) << "]";
            std::cout << "\n";
            ++shown;
        }
    } else {
        throw Error(Errc::parse_error, "unknown model '" + model + "' (expected q|p|r|tableaux)");
    }
    return exit_ok;
}

int cmd_render(const InstanceFlags& flags, const std::string& model, const std::string& index,
               const std::string& format, const std::string& out_dir, std::int64_t guard) {
    InstanceDocument instance = instance_from_flags(flags);
    SchubertDatum datum = to_datum(instance);
    std::string label = instance.label.empty() ? default_label(instance) : instance.label;
    if (format != "ascii" && format != "svg")
        throw Error(Errc::parse_error, "unknown format '" + format + "' (expected ascii|svg)");
    const std::string ext = format == "ascii" ? "txt" : "svg";

    std::vector<std::pair<std::size_t, std::string>> outputs; // index -> content
    if (model == "q" || model == "p" || model == "r") {
        FamilySpec spec = model == "q" ? q_spec(datum) : model == "p" ? p_spec(datum) : r_spec(datum);
        std::vector<PathFamily> fams = enumerate_families(spec, guard);
        auto render_one = [&](std::size_t k) {
            if (k >= fams.size())
                throw Error(Errc::index_out_of_range, "index " + std::to_string(k) + " out of range, count is " +
                                                          std::to_string(fams.size()));
            outputs.emplace_back(k, format == "ascii" ? render_ascii(spec, fams[k])
                                                      : render_svg(spec, fams[k]));
        };
        if (index == "all")
            for (std::size_t k = 0; k < fams.size(); ++k) render_one(k);
        else
            render_one(static_cast<std::size_t>(detail::parse_int(index)));
    } else if (model == "tableaux") {
        if (datum.d < 2)
            throw Error(Errc::degenerate_shape, "d=1 has only the empty array, nothing to draw");
        UnusualShape shape = shape_of(datum);
        std::vector<UnusualArray> arrays = enumerate_arrays(shape, guard);
        auto render_one = [&](std::size_t k) {
            if (k >= arrays.size())
                throw Error(Errc::index_out_of_range, "index " + std::to_string(k) + " out of range, count is " +
                                                          std::to_string(arrays.size()));
            outputs.emplace_back(k, format == "ascii" ? render_array_ascii(shape, arrays[k])
                                                      : render_array_svg(shape, arrays[k]));
        };
        if (index == "all")
            for (std::size_t k = 0; k < arrays.size(); ++k) render_one(k);
        else
            render_one(static_cast<std::size_t>(detail::parse_int(index)));
    } else {
        throw Error(Errc::parse_error, "unknown model '" + model + "' (expected q|p|r|tableaux)");
    }

    std::filesystem::create_directories(out_dir);
    for (const auto& [k, content] : outputs) {
        std::filesystem::path file = std::filesystem::path(out_dir) /
                                     (label + "." + model + "." + std::to_string(k) + "." + ext);
        std::ofstream os(file, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write '" << file.string() << "'\n";
            return exit_usage;
        }
        os << content;
        std::cout << file.string() << "\n";
    }
    return exit_ok;
}

int cmd_verify(std::uint64_t seed, int counts, const std::string& bounds, std::int64_t guard,
               const std::string& fault, const std::string& format, const std::string& out_file) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.counts = counts;
    opt.guard = guard;
    if (!bounds.empty()) {
        // "n=12,d=5"
        std::stringstream ss(bounds);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t eq = tok.find('=');
            if (eq == std::string::npos)
                throw Error(Errc::parse_error, "bad bounds token '" + tok + "' (expected n=..,d=..)");
            std::string key = tok.substr(0, eq);
            int value = detail::parse_int(tok.substr(eq + 1));
            if (key == "n")
                opt.bound_n = value;
            else if (key == "d")
                opt.bound_d = value;
            else
                throw Error(Errc::parse_error, "bad bounds key '" + key + "'");
        }
    }
    if (!fault.empty()) {
        if (fault != "thm5-printed")
            throw Error(Errc::parse_error, "unknown fault '" + fault + "' (expected thm5-printed)");
        opt.fault_thm5_printed = true;
    }

    VerifyReport report = run_verify(opt);
    std::string text = format == "csv" ? report_csv(report) : report_table(report);
    std::cout << text;
    if (!out_file.empty()) {
        std::ofstream os(out_file, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write '" << out_file << "'\n";
            return exit_usage;
        }
        os << text;
    }
    return report.pass() ? exit_ok : exit_disagreement;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicities of points on Schubert varieties in Grassmannians"};
    app.require_subcommand(1);

    std::int64_t guard = env_guard();

    InstanceFlags compute_flags;
    std::string method_list = "all";
    std::string batch;
    bool timings = false;
    CLI::App* compute = app.add_subcommand("compute", "evaluate the multiplicity formulas");
    add_instance_flags(compute, compute_flags);
    compute->add_option("--method", method_list, "comma list of rz,lw,thm5,enum_q,enum_p,enum_r,enum_tableaux,all");
    compute->add_option("--batch", batch, "file with one instance per line, - for stdin");
    compute->add_option("--guard", guard, "enumeration guard (path tuples / search nodes)");
    compute->add_flag("--timings", timings, "include per-method timings in the output");

    InstanceFlags enum_flags;
    std::string model = "q";
    long limit = -1;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list nonintersecting families or arrays");
    add_instance_flags(enumerate, enum_flags);
    enumerate->add_option("--model", model, "q|p|r|tableaux");
    enumerate->add_option("--limit", limit, "print at most this many items (count is always full)");
    enumerate->add_option("--guard", guard, "enumeration guard");

    InstanceFlags render_flags;
    std::string render_model = "q";
    std::string render_index = "0";
    std::string render_format = "ascii";
    std::string out_dir = ".";
    CLI::App* render = app.add_subcommand("render", "draw families or arrays to files");
    add_instance_flags(render, render_flags);
    render->add_option("--model", render_model, "q|p|r|tableaux");
    render->add_option("--index", render_index, "family/array index, or all");
    render->add_option("--format", render_format, "ascii|svg");
    render->add_option("--out", out_dir, "output directory");
    render->add_option("--guard", guard, "enumeration guard");

    std::uint64_t seed = 42;
    int counts = 200;
    std::string bounds = "n=12,d=5";
    std::string fault;
    std::string verify_format = "table";
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run the randomized cross-verification harness");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--counts", counts, "number of random instances");
    verify->add_option("--bounds", bounds, "random instance bounds, n=12,d=5");
    verify->add_option("--guard", guard, "enumeration guard");
    verify->add_option("--fault", fault, "inject a known fault (thm5-printed)");
    verify->add_option("--format", verify_format, "table|csv");
    verify->add_option("--out", verify_out, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(compute_flags, method_list, batch, guard, timings);
        if (enumerate->parsed()) return cmd_enumerate(enum_flags, model, limit, guard);
        if (render->parsed())
            return cmd_render(render_flags, render_model, render_index, render_format, out_dir, guard);
        if (verify->parsed())
            return cmd_verify(seed, counts, bounds, guard, fault, verify_format, verify_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
