// Batch driver for the plane-certificate pipeline. Every subcommand writes
// one report to stdout (or --output) in json, csv or text form; json output
// is byte-stable for identical invocations.
#include <planecert/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using planecert::Json;

constexpr int kSchemaVersion = 1;

struct OutputOptions {
    std::string format = "json";  // json | csv | text
    std::string path;             // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, const std::string& formats) {
    cmd->add_option("--format", opts.format, "output format: " + formats)
        ->check(CLI::IsMember(std::vector<std::string>{"json", "csv", "text"}));
    cmd->add_option("-o,--output", opts.path, "write the report to a file instead of stdout");
}

int emit(const OutputOptions& opts, const std::string& body) {
    if (opts.path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(opts.path, std::ios::binary);
    out << body;
    if (!out) {
        std::cerr << "error: cannot write " << opts.path << "\n";
        return 3;
    }
    return 0;
}

std::string dump(Json j) {
    Json wrapped;
    wrapped["schema_version"] = kSchemaVersion;
    for (auto& [key, value] : j.items()) wrapped[key] = value;
    return wrapped.dump(2) + "\n";
}

int run_partitions(int d, const OutputOptions& opts) {
    const auto classes = planecert::enumerate_partitions(d);
    if (opts.format == "json") {
        Json listing = Json::array();
        for (const auto& p : classes) listing.push_back(planecert::to_json(planecert::class_info(p)));
        return emit(opts, dump(Json{{"d", d}, {"classes", listing}}));
    }
    std::ostringstream out;
    if (opts.format == "csv") {
        out << "cycle_type,size,fixed_points,sign\n";
        for (const auto& p : classes) {
            const auto info = planecert::class_info(p);
            std::string cell;
            for (std::size_t i = 0; i < p.parts().size(); ++i)
                cell += (i ? "+" : "") + std::to_string(p.parts()[i]);
            out << cell << "," << info.size.get_str() << "," << info.fixed_points << "," << info.sign << "\n";
        }
    } else {
        out << "conjugacy classes of S_" << d << " (" << classes.size() << " classes)\n";
        for (const auto& p : classes) {
            const auto info = planecert::class_info(p);
            out << "  " << p.to_string() << "  size " << info.size.get_str() << ", fixed points "
                << info.fixed_points << ", sign " << (info.sign > 0 ? "+1" : "-1") << "\n";
        }
    }
    return emit(opts, out.str());
}

int run_table(int d, const OutputOptions& opts) {
    const auto table = planecert::character_table(d);
    if (opts.format == "csv") return emit(opts, planecert::to_csv(table));
    if (opts.format == "json") {
        Json j = planecert::to_json(table);
        j["validation"] = planecert::to_json(planecert::validate_table(table));
        return emit(opts, dump(j));
    }
    std::ostringstream out;
    out << "character table of S_" << d << " (" << table.irreps.size() << " irreducibles)\n";
    out << planecert::to_csv(table);
    return emit(opts, out.str());
}

int run_system(int d, bool even, const OutputOptions& opts) {
    const auto system = planecert::build_system(d, even);
    if (opts.format == "json") return emit(opts, dump(planecert::to_json(system)));
    return emit(opts, planecert::to_lp_text(system));
}

int run_solve(int d, bool even, bool with_bounds, const OutputOptions& opts) {
    const auto system = planecert::build_system(d, even);
    const auto report =
        with_bounds ? planecert::full_report(system) : planecert::solve_feasibility(system);
    if (opts.format == "json") {
        Json j = Json{{"d", d}};
        const Json body = planecert::to_json(report, system);
        for (const auto& [key, value] : body.items()) j[key] = value;
        return emit(opts, dump(j));
    }
    std::ostringstream out;
    out << "order d = " << d << ": "
        << (report.status == planecert::FeasibilityReport::Status::feasible ? "feasible" : "infeasible")
        << "\n";
    if (report.witness) {
        out << "witness (theta per class):\n";
        for (const auto& v : system.variables)
            out << "  theta" << v.to_string() << " = " << planecert::to_string(report.witness->at(v)) << "\n";
    }
    if (!report.bounds.empty()) {
        out << "bounds:\n";
        for (std::size_t i = 0; i < system.variables.size(); ++i)
            out << "  theta" << system.variables[i].to_string() << " in ["
                << planecert::to_string(report.bounds[i].min) << ", "
                << planecert::to_string(report.bounds[i].max) << "]\n";
        out << "unique: " << (report.unique.value_or(false) ? "yes" : "no") << "\n";
    }
    return emit(opts, out.str());
}

int run_certify(int d, const OutputOptions& opts) {
    const auto system = planecert::build_system(d);
    const auto report = planecert::certify(system);
    if (opts.format == "json") return emit(opts, dump(planecert::to_json(report, system)));
    return emit(opts, planecert::render_transcript(report, system));
}

int run_oracle(int q, const OutputOptions& opts) {
    const auto plane = planecert::build_plane(q);
    const auto subset = planecert::theta_of_subset(plane.lines);
    const auto system = planecert::build_system(q);
    const auto violations = planecert::evaluate_theta(subset.theta, system);
    const auto products = planecert::proposition_check(subset.theta, system.table);

    bool all_even = true;
    for (const auto& [cls, value] : subset.theta.entries())
        if (!(cls == planecert::Partition::identity_class(q)) && !planecert::is_even_integer(value))
            all_even = false;
    bool all_nonneg = true;
    for (const auto& [mu, value] : products)
        if (value < 0) all_nonneg = false;

    if (opts.format == "json") {
        Json j;
        j["q"] = q;
        j["lines"] = planecert::to_json(plane)["lines"];
        j["theta"] = planecert::to_json(subset.theta);
        Json viol = Json::array();
        for (const auto& v : violations) viol.push_back(Json{{"label", v.label}, {"residual", planecert::to_json(v.residual)}});
        j["violations"] = viol;
        Json prods = Json::array();
        for (const auto& [mu, value] : products)
            prods.push_back(Json{{"irrep", planecert::to_json(mu)}, {"value", planecert::to_json(value)}});
        j["character_products"] = prods;
        j["all_entries_even"] = all_even;
        j["all_products_nonnegative"] = all_nonneg;
        return emit(opts, dump(j));
    }

    std::ostringstream out;
    out << "affine plane of order " << q << ": " << plane.lines.size() << " lines\n";
    out << "difference counts:\n";
    for (const auto& [cls, value] : subset.theta.entries())
        out << "  theta" << cls.to_string() << " = " << planecert::to_string(value) << "\n";
    out << "system violations: " << violations.size() << "\n";
    for (const auto& v : violations)
        out << "  " << v.label << " residual " << planecert::to_string(v.residual) << "\n";
    out << "character scalar products all nonnegative: " << (all_nonneg ? "yes" : "no") << "\n";
    out << "non-identity entries all even: " << (all_even ? "yes" : "no") << "\n";
    return emit(opts, out.str());
}

int run_random_check(int d, int n, std::uint64_t seed, int trials, const OutputOptions& opts) {
    const auto table = planecert::character_table(d);
    Json results = Json::array();
    bool all_pass = true;
    for (int t = 0; t < trials; ++t) {
        const auto subset = planecert::random_subset(d, static_cast<std::size_t>(n), seed + static_cast<std::uint64_t>(t));
        const auto theta = planecert::theta_of_subset(subset).theta;
        const auto products = planecert::proposition_check(theta, table);
        planecert::Rational min_value = products.front().second;
        for (const auto& [mu, value] : products) min_value = std::min(min_value, value);
        const bool pass = min_value >= 0;
        all_pass = all_pass && pass;
        results.push_back(Json{{"trial", t},
                               {"seed", seed + static_cast<std::uint64_t>(t)},
                               {"min_scalar_product", planecert::to_json(min_value)},
                               {"pass", pass}});
    }
    if (opts.format == "json") {
        const int rc = emit(opts, dump(Json{{"d", d},
                                            {"subset_size", n},
                                            {"trials", trials},
                                            {"all_pass", all_pass},
                                            {"results", results}}));
        return rc != 0 ? rc : (all_pass ? 0 : 1);
    }
    std::ostringstream out;
    out << "proposition check, " << trials << " random subset(s) of S_" << d << ", size " << n << "\n";
    for (const auto& r : results)
        out << "  trial " << r["trial"] << ": min scalar product num=" << r["min_scalar_product"]["num"]
            << " -> " << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    out << (all_pass ? "all passed\n" : "FAILURES PRESENT\n");
    const int rc = emit(opts, out.str());
    return rc != 0 ? rc : (all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for the existence constraints of finite projective planes"};
    app.require_subcommand(1);

    int d = 0, q = 0, n = 0, trials = 1;
    std::uint64_t seed = 0;
    bool even = false, no_bounds = false;
    OutputOptions opts;

    auto* partitions = app.add_subcommand("partitions", "conjugacy classes of S_d with sizes, fixed points, signs");
    partitions->add_option("d", d, "degree")->required()->check(CLI::Range(1, 25));
    add_output_options(partitions, opts, "json|csv|text");

    auto* table = app.add_subcommand("table", "exact character table of S_d");
    table->add_option("d", d, "degree")->required()->check(CLI::Range(1, 14));
    add_output_options(table, opts, "json|csv|text");

    auto* system = app.add_subcommand("system", "linear system on the difference counts for order d");
    system->add_option("d", d, "plane order")->required()->check(CLI::Range(2, 14));
    system->add_flag("--even", even, "record the evenness side-condition");
    add_output_options(system, opts, "json|text (text = LP file)");

    auto* solve = app.add_subcommand("solve", "exact feasibility, witness, bounds and uniqueness");
    solve->add_option("d", d, "plane order")->required()->check(CLI::Range(2, 14));
    solve->add_flag("--even", even, "record the evenness side-condition");
    solve->add_flag("--no-bounds", no_bounds, "skip the per-variable bound solves");
    add_output_options(solve, opts, "json|text");

    auto* certify = app.add_subcommand("certify", "full pipeline: solve, then parity and evenness refuters");
    certify->add_option("d", d, "plane order")->required()->check(CLI::Range(2, 14));
    add_output_options(certify, opts, "json|text (text = step-by-step transcript)");

    auto* oracle = app.add_subcommand("oracle", "build a prime-power plane and verify its difference counts");
    oracle->add_option("q", q, "prime power in {2,3,4,5,7,8,9}")->required();
    add_output_options(oracle, opts, "json|text");

    auto* random_check = app.add_subcommand("random-check", "character scalar products on random subsets of S_d");
    random_check->add_option("d", d, "degree")->required()->check(CLI::Range(1, 10));
    random_check->add_option("n", n, "subset size")->required()->check(CLI::PositiveNumber);
    random_check->add_option("seed", seed, "RNG seed")->required();
    random_check->add_option("--trials", trials, "number of subsets, seeds counting up from seed")
        ->check(CLI::PositiveNumber);
    add_output_options(random_check, opts, "json|text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*partitions) return run_partitions(d, opts);
        if (*table) return run_table(d, opts);
        if (*system) return run_system(d, even, opts);
        if (*solve) return run_solve(d, even, !no_bounds, opts);
        if (*certify) return run_certify(d, opts);
        if (*oracle) return run_oracle(q, opts);
        if (*random_check) return run_random_check(d, n, seed, trials, opts);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
