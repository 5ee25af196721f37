#include "fuzztop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzztop/errors.hpp"
#include "fuzztop/oracle.hpp"
#include "fuzztop/serialize.hpp"

namespace fuzztop::cli {

namespace {

constexpr const char* kWindowHelp =
    "Chain window N: the chain topologies are represented by their first N members. "
    "Default: carrier size + 2, enough for every depth on the carrier to appear and for "
    "the chain to repeat its tail at least once.";

struct Common {
    std::string input;
    std::size_t window = 0;
    std::string format = "json";
};

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

InstanceFile load(const Common& c, std::istream& in) {
    std::string text;
    if (c.input.empty() || c.input == "-") {
        text = read_all(in);
    } else {
        std::ifstream file(c.input);
        if (!file) throw InputError("cannot open instance file \"" + c.input + "\"");
        text = read_all(file);
    }
    auto inst = parse_instance(text);
    if (c.window != 0) inst.window = c.window;
    return inst;
}

std::size_t window_of(const InstanceFile& inst) {
    return inst.window.value_or(default_window(inst.f.size()));
}

OrbitData orbit_of(const InstanceFile& inst) {
    if (!inst.tau3) {
        throw InputError("space tau3 needs a \"tau3\": {\"x0\", \"k\"} block: the orbit topology is built "
                         "from a base point and a parameter k >= 1");
    }
    return orbit_data(inst.f, inst.tau3->first, inst.tau3->second);
}

Space build_space(const std::string& name, const InstanceFile& inst) {
    const auto w = window_of(inst);
    if (name == "tau1") return WindowedChain(tau1_basis(inst.f), w);
    if (name == "tau1c") return WindowedChain(tau1_complement_basis(inst.f), w);
    if (name == "tau2") return WindowedChain(tau2_basis(inst.f), w);
    if (name == "tau3") return tau3_topology(orbit_of(inst));
    throw InputError("unknown space \"" + name + "\"");
}

// TSV view of a JSON document: one "path<TAB>value" line per leaf, so the
// two formats carry the same strings.
void flatten(const json& j, const std::string& path, std::string& out) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out += path;
        out += '\t';
        out += j.is_string() ? j.get<std::string>() : j.dump();
        out += '\n';
    }
}

std::string render(const json& doc, const std::string& format) {
    if (format == "tsv") {
        std::string out;
        flatten(doc, "", out);
        return out;
    }
    return doc.dump(2) + "\n";
}

struct Row {
    std::string name;
    FuzzySet grades;
};

json basis_doc(const std::string& space, const InstanceFile& inst, std::vector<Row>& rows) {
    if (space == "tau3") {
        const auto b = tau3_basis(orbit_of(inst));
        rows.push_back({"C", b.c});
        for (std::size_t n = 0; n < b.cn.size(); ++n) rows.push_back({"C_" + std::to_string(n), b.cn[n]});
    } else {
        const auto s = build_space(space, inst);
        const auto& chain = std::get<WindowedChain>(s);
        const std::string stem = space == "tau2" ? "K_" : "A_";
        const std::string suffix = space == "tau1c" ? "^c" : "";
        auto members = chain.basis();
        for (std::size_t n = 0; n < members.size(); ++n) {
            rows.push_back({stem + std::to_string(n + 1) + suffix, members[n]});
        }
    }
    json out = {{"space", space}, {"size", inst.f.size()}};
    if (space != "tau3") out["window"] = window_of(inst);
    json rj = json::array();
    for (const auto& r : rows) rj.push_back({{"name", r.name}, {"grades", to_json(r.grades)}});
    out["rows"] = rj;
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy topologies induced by a self-map of a finite set.", "fuzztop"};
    app.require_subcommand(1);

    Common common;
    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) {
            sub->add_option("input", common.input, "Instance JSON file (default: stdin)");
            sub->add_option("--window", common.window, kWindowHelp)->check(CLI::PositiveNumber);
        }
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    };
    const auto space_names = CLI::IsMember({"tau1", "tau1c", "tau2", "tau3"});

    std::string space, left, right;
    auto* basis = app.add_subcommand("basis", "Grade table of the basis, one row per member");
    basis->add_option("--space", space, "tau1|tau1c|tau2|tau3")->required()->check(space_names);
    add_common(basis, true);

    auto* check = app.add_subcommand("check", "Property report of a space");
    check->add_option("--space", space, "tau1|tau1c|tau2|tau3")->required()->check(space_names);
    add_common(check, true);

    auto* map = app.add_subcommand("map", "Open-map and continuity verdicts for f");
    map->add_option("--space", space, "tau1|tau1c|tau2|tau3")->required()->check(space_names);
    add_common(map, true);

    auto* equal = app.add_subcommand("equal", "Compare two spaces on the same map");
    equal->add_option("--left", left, "tau1|tau1c|tau2|tau3")->required()->check(space_names);
    equal->add_option("--right", right, "tau1|tau1c|tau2|tau3")->required()->check(space_names);
    add_common(equal, true);

    SweepParams params;
    std::size_t sweep_window = 0;
    auto* verify = app.add_subcommand("verify", "Exhaustive check of every registered claim");
    verify->add_option("--max-size", params.max_size, "Largest carrier (at most 6)")->required();
    verify->add_option("--k", params.k_values, "Orbit parameters, comma separated")->delimiter(',')->required();
    verify->add_option("--window", sweep_window, "Chain window (default: max size + 2)");
    add_common(verify, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream parse_out, parse_err;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, parse_out, parse_err);
        out << parse_out.str();
        err << parse_err.str();
        return code == 0 ? ok : malformed_input;
    }

    try {
        json doc;
        std::string text;
        if (basis->parsed()) {
            const auto inst = load(common, in);
            std::vector<Row> rows;
            doc = basis_doc(space, inst, rows);
            if (common.format == "tsv") {
                for (const auto& r : rows) {
                    text += r.name;
                    for (const auto& g : r.grades.grades()) text += "\t" + g.str();
                    text += "\n";
                }
            }
        } else if (check->parsed()) {
            const auto inst = load(common, in);
            doc = to_json(property_report(build_space(space, inst)));
        } else if (map->parsed()) {
            const auto inst = load(common, in);
            doc = to_json(map_report(inst.f, build_space(space, inst)));
        } else if (equal->parsed()) {
            const auto inst = load(common, in);
            doc = to_json(topologies_equal(build_space(left, inst), build_space(right, inst)));
        } else if (verify->parsed()) {
            params.window = sweep_window != 0 ? sweep_window : params.max_size + 2;
            doc = to_json(sweep(params));
        }
        if (text.empty()) text = render(doc, common.format);
        out << text;
        out.flush();
        return ok;
    } catch (const InputError& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return malformed_input;
    } catch (const PreconditionError& e) {
        err << "error: precondition violated: " << e.what() << "\n";
        return precondition;
    } catch (const ConsistencyError& e) {
        err << "error: internal consistency failure: " << e.what() << "\n";
        return inconsistency;
    } catch (const json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return malformed_input;
    }
}

}  // namespace fuzztop::cli
