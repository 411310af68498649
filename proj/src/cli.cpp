#include "cremona/cli.hpp"

#include "cremona/combinatorics.hpp"
#include "cremona/determinantal.hpp"
#include "cremona/fan.hpp"
#include "cremona/json_io.hpp"
#include "cremona/mixed_volume.hpp"
#include "cremona/multidegree.hpp"
#include "cremona/polytope.hpp"
#include "cremona/rational.hpp"
#include "cremona/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        parts.push_back(item);
    }
    return parts;
}

std::vector<Integer> parse_integer_list(const std::string& csv, const std::string& what) {
    const auto parts = split_list(csv);
    if (parts.empty()) {
        throw std::invalid_argument(what + ": empty list");
    }
    std::vector<Integer> values;
    values.reserve(parts.size());
    for (const auto& p : parts) {
        try {
            values.push_back(parse_integer(p));
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": '" + p + "' is not an integer");
        }
    }
    return values;
}

// Same traversal as the CSV flattening, rendered as "key = value" lines.
void flatten_plain(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten_plain(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten_plain(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else if (j.is_string()) {
        out << prefix << " = " << j.get<std::string>() << "\n";
    } else {
        out << prefix << " = " << j.dump() << "\n";
    }
}

// `bare` carries the single-value payloads whose plain form is just the
// value (the volume commands print "21/2", not "volume = 21/2").
void emit(const Json& payload, const std::string& format, const std::string& bare,
          std::ostream& out) {
    if (format == "json") {
        out << payload.dump(2) << "\n";
    } else if (format == "csv") {
        out << csv_from_json(payload);
    } else if (!bare.empty()) {
        out << bare << "\n";
    } else {
        flatten_plain(payload, "", out);
    }
}

Json verify_to_json(const VerificationReport& report, int max_n) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["range"] = c.range;
        entry["passed"] = c.passed;
        if (!c.passed) {
            entry["counterexample"] = c.counterexample;
        }
        checks.push_back(std::move(entry));
    }
    Json doc;
    doc["max_n"] = max_n;
    doc["checks"] = std::move(checks);
    doc["all_passed"] = report.all_passed();
    return doc;
}

void verify_to_plain(const VerificationReport& report, std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        if (c.passed) {
            out << "PASS " << c.name << " (" << c.range << ")\n";
        } else {
            ++failed;
            out << "FAIL " << c.name << " (" << c.range << "): " << c.counterexample << "\n";
        }
    }
    out << report.checks.size() << " checks, " << (report.checks.size() - failed)
        << " passed, " << failed << " failed\n";
}

struct Request {
    std::string command;
    std::string format;
    int n = 0;
    std::string method = "all";
    bool check_hypergeometric = false;
    std::string degrees_csv;
    std::string segre_csv;
    long long deg = 0;
    std::string polytope_path;
    std::string polytopes_csv;
    std::string matrix_path;
    std::string fan_action = "count";
    int max_n = 5;
    bool inject_volume_fault = false;
};

int run_multidegrees(const Request& r, std::ostream& out) {
    Json doc;
    doc["n"] = r.n;
    if (r.method != "all") {
        doc["method"] = r.method;
    }
    std::vector<Integer> degrees;
    if (r.method == "formula" || r.method == "all") {
        degrees = multidegrees_standard(r.n).degrees();
    }
    std::vector<Integer> by_mixed;
    std::vector<Integer> by_extraction;
    if (r.method == "mixed-volume" || r.method == "all") {
        for (int k = 0; k <= r.n; ++k) {
            by_mixed.push_back(multidegree_by_mixed_volume(r.n, k));
        }
        if (degrees.empty()) degrees = by_mixed;
    }
    if (r.method == "extraction" || r.method == "all") {
        for (int k = 0; k <= r.n; ++k) {
            by_extraction.push_back(multidegree_by_coefficient_extraction(r.n, k));
        }
        if (degrees.empty()) degrees = by_extraction;
    }
    doc["degrees"] = json_integer_array(degrees);
    if (r.method == "all") {
        doc["paths_agree"] = (degrees == by_mixed && degrees == by_extraction);
    }
    emit(doc, r.format, "", out);
    return kExitOk;
}

int run_segre(const Request& r, std::ostream& out) {
    const SegreVector s = segre_numbers_standard(r.n);
    Json doc;
    doc["n"] = r.n;
    doc["segre"] = json_integer_array(s.numbers());
    if (r.check_hypergeometric) {
        bool agrees = true;
        for (int k = 0; k <= r.n - 2; ++k) {
            const Rational h =
                hypergeom_terminating(-r.n, k - r.n, 1, make_rational(-1, Integer(r.n)));
            const Rational value =
                -h * rational_pow(Rational(-r.n), static_cast<unsigned>(r.n - k));
            if (value != Rational(s.numbers()[k])) {
                agrees = false;
                break;
            }
        }
        doc["hypergeometric_agrees"] = agrees;
    }
    emit(doc, r.format, "", out);
    return kExitOk;
}

int run_convert(const Request& r, std::ostream& out) {
    Json doc;
    if (!r.degrees_csv.empty()) {
        const std::vector<Integer> entries = parse_integer_list(r.degrees_csv, "--degrees");
        if (r.n != 0 && entries.size() != static_cast<std::size_t>(r.n) + 1) {
            throw std::invalid_argument("--degrees: expected n+1 entries");
        }
        const MultidegreeSequence d(entries, Integer(r.deg));
        doc["segre"] = json_integer_array(segre_from_multidegrees(d).numbers());
    } else {
        if (r.n == 0) {
            throw std::invalid_argument("--segre requires --n");
        }
        const std::vector<Integer> entries = parse_integer_list(r.segre_csv, "--segre");
        const SegreVector s(r.n, entries);
        doc["degrees"] = json_integer_array(multidegrees_from_segre(s, Integer(r.deg)).degrees());
    }
    emit(doc, r.format, "", out);
    return kExitOk;
}

int run_volume(const Request& r, std::ostream& out) {
    const VPolytope p = load_polytope(r.polytope_path);
    const Rational v = volume(p);
    Json doc;
    doc["volume"] = json_rational(v);
    emit(doc, r.format, to_string(v), out);
    return kExitOk;
}

int run_mixed_volume(const Request& r, std::ostream& out) {
    const auto paths = split_list(r.polytopes_csv);
    if (paths.empty()) {
        throw std::invalid_argument("--polytopes: empty list");
    }
    MixedVolumeQuery q;
    q.dimension = paths.size();
    for (const auto& path : paths) {
        q.bodies.push_back(load_polytope(path));
    }
    const Rational v = mixed_coefficient(q);
    Json doc;
    doc["mixed_coefficient"] = json_rational(v);
    emit(doc, r.format, to_string(v), out);
    return kExitOk;
}

int run_minors(const Request& r, std::ostream& out) {
    const LinearFormMatrix m = load_matrix(r.matrix_path);
    const auto minors = maximal_minors(m);
    Json list = Json::array();
    for (const auto& p : minors) {
        list.push_back(p.to_string());
    }
    Json doc;
    doc["n"] = m.n();
    doc["minors"] = std::move(list);
    emit(doc, r.format, "", out);
    return kExitOk;
}

int run_fan(const Request& r, std::ostream& out) {
    Json doc;
    doc["n"] = r.n;
    if (r.fan_action == "count") {
        doc["cells"] = static_cast<int>(common_refinement(r.n).size());
    } else if (r.fan_action == "list") {
        Json cells = Json::array();
        for (const auto& cell : common_refinement(r.n)) {
            Json inequalities = Json::array();
            for (const auto& c : cell.cell.constraints()) {
                Json normal = Json::array();
                for (const auto& coord : c.normal) {
                    normal.push_back(json_rational(coord));
                }
                Json ineq;
                ineq["normal"] = std::move(normal);
                ineq["offset"] = json_rational(c.offset);
                inequalities.push_back(std::move(ineq));
            }
            Json entry;
            entry["pair"] = Json::array({cell.source_delta, cell.source_negative});
            entry["inequalities"] = std::move(inequalities);
            cells.push_back(std::move(entry));
        }
        doc["cells"] = std::move(cells);
    } else {
        const auto [covered, box] = covering_check(r.n);
        doc["cell_volume_sum"] = json_rational(covered);
        doc["box_volume"] = json_rational(box);
        doc["covers"] = (covered == box);
    }
    emit(doc, r.format, "", out);
    return kExitOk;
}

int run_report(const Request& r, std::ostream& out) {
    const SegreReport report = segre_report(r.n);
    Json degrees;
    degrees["formula"] = json_integer_array(report.degrees_formula);
    degrees["mixed_volume"] = json_integer_array(report.degrees_mixed_volume);
    degrees["extraction"] = json_integer_array(report.degrees_extraction);
    degrees["agree"] = report.degrees_agree;
    Json segre;
    segre["formula"] = json_integer_array(report.segre_formula);
    segre["conversion"] = json_integer_array(report.segre_conversion);
    segre["hypergeometric"] = json_integer_array(report.segre_hypergeometric);
    segre["agree"] = report.segre_agree;
    Json base;
    base["count"] = json_integer(report.component_count);
    base["matches_segre"] = report.components_match_segre;
    Json chow;
    chow["applicable"] = report.chow_applicable;
    Json ranks = Json::array();
    for (const auto& [k, rank] : report.chow) {
        ranks.push_back(Json::array({k, json_integer(rank)}));
    }
    chow["ranks"] = std::move(ranks);
    Json doc;
    doc["n"] = report.n;
    doc["degrees"] = std::move(degrees);
    doc["segre"] = std::move(segre);
    doc["base_components"] = std::move(base);
    doc["chow"] = std::move(chow);
    emit(doc, r.format, "", out);
    return kExitOk;
}

int run_verify(const Request& r, std::ostream& out) {
    VerifyOptions options;
    options.max_n = r.max_n;
    if (r.inject_volume_fault) {
        options.closed_form = [](const Rational& a, const Rational& b, int n) {
            Rational v = volume_closed_form(a, b, n);
            if (a == 1 && b == 1 && n == 2) {
                v += 1;
            }
            return v;
        };
    }
    const VerificationReport report = run_verification(options);
    if (r.format == "json" || r.format == "csv") {
        emit(verify_to_json(report, r.max_n), r.format, "", out);
    } else {
        verify_to_plain(report, out);
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multidegrees, Segre numbers, and fan geometry of the standard "
                 "Cremona transformation",
                 "cremona"};
    app.require_subcommand(1);

    Request r;

    std::map<CLI::App*, std::string> default_format;
    const auto add_format_option = [&](CLI::App* sub, const std::string& fallback) {
        default_format[sub] = fallback;
        sub->add_option("--format", r.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    CLI::App* multidegrees =
        app.add_subcommand("multidegrees", "Multidegrees d_0..d_n of the standard map");
    multidegrees->add_option("--n", r.n, "Ambient dimension")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    multidegrees->add_option("--method", r.method, "Computation path")
        ->check(CLI::IsMember({"formula", "mixed-volume", "extraction", "all"}));

    CLI::App* segre = app.add_subcommand("segre", "Segre numbers s_0..s_{n-2} of the standard map");
    segre->add_option("--n", r.n, "Ambient dimension")->required()->check(CLI::Range(2, 1 << 20));
    segre->add_flag("--check-hypergeometric", r.check_hypergeometric,
                    "Also evaluate the hypergeometric form and report agreement");

    CLI::App* convert = app.add_subcommand(
        "convert", "Convert multidegrees to Segre numbers or back (exactly one direction)");
    auto* degrees_opt =
        convert->add_option("--degrees", r.degrees_csv, "Comma-separated d_0..d_n");
    auto* segre_opt = convert->add_option("--segre", r.segre_csv, "Comma-separated s_0..s_{n-2}");
    degrees_opt->excludes(segre_opt);
    segre_opt->excludes(degrees_opt);
    convert->add_option("--deg", r.deg, "Algebraic degree of the map")
        ->required()
        ->check(CLI::PositiveNumber);
    convert->add_option("--n", r.n, "Ambient dimension (required with --segre)")
        ->check(CLI::Range(1, 1 << 20));

    CLI::App* volume_cmd = app.add_subcommand("volume", "Exact volume of a polytope JSON file");
    volume_cmd->add_option("--polytope", r.polytope_path, "Polytope JSON file")->required();

    CLI::App* mixed = app.add_subcommand(
        "mixed-volume", "Mixed coefficient of n polytope JSON files in dimension n");
    mixed->add_option("--polytopes", r.polytopes_csv, "Comma-separated polytope JSON files")
        ->required();

    CLI::App* minors =
        app.add_subcommand("minors", "Maximal minors of a matrix of linear forms");
    minors->add_option("--matrix", r.matrix_path, "Matrix JSON file")->required();

    CLI::App* fan = app.add_subcommand("fan", "Common refinement of the fan and its negation");
    fan->add_option("--n", r.n, "Ambient dimension")->required()->check(CLI::Range(2, 1 << 20));
    fan->add_option("--action", r.fan_action, "What to report")
        ->check(CLI::IsMember({"count", "list", "cover-check"}));

    CLI::App* report =
        app.add_subcommand("report", "Every computation path for one n, with agreement flags");
    report->add_option("--n", r.n, "Ambient dimension")->required()->check(CLI::Range(2, 1 << 20));

    CLI::App* verify = app.add_subcommand("verify", "Run the full cross-check suite");
    verify->add_option("--max-n", r.max_n, "Largest n any check may use")
        ->check(CLI::Range(2, 1 << 20));
    verify->add_flag("--inject-volume-fault", r.inject_volume_fault,
                     "Corrupt the closed-form volume at a=1 b=1 n=2 (harness fixture)")
        ->group("");

    add_format_option(multidegrees, "json");
    add_format_option(segre, "json");
    add_format_option(convert, "json");
    add_format_option(volume_cmd, "plain");
    add_format_option(mixed, "plain");
    add_format_option(minors, "json");
    add_format_option(fan, "json");
    add_format_option(report, "json");
    add_format_option(verify, "plain");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* active = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    if (active != nullptr && active->count("--format") == 0) {
        r.format = default_format[active];
    }

    try {
        if (app.got_subcommand(multidegrees)) {
            return run_multidegrees(r, out);
        }
        if (app.got_subcommand(segre)) return run_segre(r, out);
        if (app.got_subcommand(convert)) {
            if (r.degrees_csv.empty() && r.segre_csv.empty()) {
                throw std::invalid_argument("convert needs --degrees or --segre");
            }
            return run_convert(r, out);
        }
        if (app.got_subcommand(volume_cmd)) return run_volume(r, out);
        if (app.got_subcommand(mixed)) return run_mixed_volume(r, out);
        if (app.got_subcommand(minors)) return run_minors(r, out);
        if (app.got_subcommand(fan)) return run_fan(r, out);
        if (app.got_subcommand(report)) return run_report(r, out);
        if (app.got_subcommand(verify)) return run_verify(r, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cremona
