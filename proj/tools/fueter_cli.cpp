// fueter: command-line front end for the lifted-solution library.
//
//   fueter verify "<seed>"      property suite, JSON report on stdout
//   fueter scan "<seed>"        Jacobian / singular-set scan, CSV (or --json)
//   fueter components "<seed>"  zero-sphere radii and component count
//   fueter classify "<seed>"    Degenerate / DiffeoAlmostEverywhere
//   fueter eval "<seed>" --at t,x,y,z
//
// Exit codes: 0 success, 1 usage or parse error, 2 property failure or domain error.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fueter/seed_parser.hpp"
#include "fueter/singular_scan.hpp"
#include "fueter/verify.hpp"

namespace {

using fueter::box4;
using fueter::quaternion;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failure = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw usage_error("not a number: '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

/// "lo:hi" for all four axes, or four comma-separated "lo:hi" ranges (t, x, y, z).
box4 parse_box(const std::string& text) {
    const auto ranges = split(text, ',');
    if (ranges.size() != 1 && ranges.size() != 4) {
        throw usage_error("--box expects lo:hi or four comma-separated lo:hi ranges");
    }
    box4 b;
    for (std::size_t axis = 0; axis < 4; ++axis) {
        const auto parts = split(ranges[ranges.size() == 1 ? 0 : axis], ':');
        if (parts.size() != 2) {
            throw usage_error("malformed range in --box: '" + text + "'");
        }
        b.lo[axis] = parse_double(parts[0]);
        b.hi[axis] = parse_double(parts[1]);
        if (!(b.lo[axis] < b.hi[axis])) {
            throw usage_error("--box ranges need lo < hi");
        }
    }
    return b;
}

quaternion parse_point(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw usage_error("--at expects t,x,y,z");
    }
    return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]), parse_double(parts[3])};
}

void report_error(std::string_view name, const std::string& message, std::optional<std::size_t> position = {}) {
    json j = {{"error", name}, {"message", message}};
    if (position) {
        j["position"] = *position;
    }
    std::cerr << j.dump() << '\n';
}

struct options {
    std::string seed;
    std::optional<double> tol;
    int stencil_order = 4;
    std::optional<double> h;
    std::uint64_t rng_seed = 0;
    std::size_t points = 100;
    std::string box;
    int res = 5;
    bool json_out = false;
    bool csv_out = false;
    std::string at;
};

int cmd_verify(const options& o) {
    const auto seed = fueter::parse_seed(o.seed);
    fueter::verify_options vo;
    vo.tol = o.tol;
    vo.stencil_order = o.stencil_order;
    vo.h = o.h;
    vo.rng_seed = o.rng_seed;
    vo.points = o.points;
    if (!o.box.empty()) {
        vo.box = parse_box(o.box);
    }
    const auto reports = fueter::run_verify_suite(seed, vo);
    json out = json::array();
    bool all = true;
    for (const auto& r : reports) {
        out.push_back(fueter::to_json(r));
        all = all && r.pass;
    }
    std::cout << out.dump(2) << '\n';
    return all ? exit_ok : exit_failure;
}

std::string csv_number(double v) { return std::isnan(v) ? std::string("nan") : format_double(v); }

int cmd_scan(const options& o) {
    const auto seed = fueter::parse_seed(o.seed);
    if (o.res < 2) {
        throw usage_error("--res must be at least 2");
    }
    const box4 b = o.box.empty() ? box4::uniform(-1.0, 1.0) : parse_box(o.box);
    std::optional<fueter::stencil_spec> fixed;
    if (o.h) {
        fixed = fueter::stencil_spec{o.stencil_order, *o.h};
    } else if (o.stencil_order != 4) {
        throw usage_error("--stencil-order other than 4 requires --h");
    }
    const auto result = fueter::scan(fueter::lifted_solution{seed}, b, o.res, fixed);
    if (o.json_out) {
        json rows = json::array();
        for (const auto& s : result.samples) {
            rows.push_back({{"t", s.point.t},
                            {"x", s.point.x},
                            {"y", s.point.y},
                            {"z", s.point.z},
                            {"u", s.u},
                            {"v", s.v},
                            {"det_fd", s.det_fd},
                            {"det_analytic", s.det_analytic},
                            {"locus", fueter::to_string(s.locus)},
                            {"residual_left", s.residual_left},
                            {"residual_right", s.residual_right}});
        }
        std::cout << json{{"rows", rows}, {"skipped", result.skipped}}.dump(2) << '\n';
        return exit_ok;
    }
    std::cout << "t,x,y,z,u,v,det_fd,det_analytic,locus,residual_left,residual_right\n";
    for (const auto& s : result.samples) {
        std::cout << csv_number(s.point.t) << ',' << csv_number(s.point.x) << ',' << csv_number(s.point.y) << ','
                  << csv_number(s.point.z) << ',' << csv_number(s.u) << ',' << csv_number(s.v) << ','
                  << csv_number(s.det_fd) << ',' << csv_number(s.det_analytic) << ',' << fueter::to_string(s.locus)
                  << ',' << csv_number(s.residual_left) << ',' << csv_number(s.residual_right) << '\n';
    }
    return exit_ok;
}

int cmd_components(const options& o) {
    const auto seed = fueter::parse_seed(o.seed);
    const auto rep = fueter::component_report(seed, o.rng_seed);
    json j = {{"n", rep.n},
              {"radii", rep.radii.radii},
              {"multiplicity", rep.radii.multiplicity},
              {"verified_by_sampling", rep.verified_by_sampling}};
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_classify(const options& o) {
    const auto seed = fueter::parse_seed(o.seed);
    const auto verdict = fueter::dichotomy_verdict(seed, o.rng_seed);
    json j = {{"seed", seed.to_string()},
              {"class", fueter::to_string(fueter::classify(seed))},
              {"dichotomy", fueter::to_string(verdict.verdict)},
              {"nonsingular_fraction", verdict.nonsingular_fraction()}};
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_eval(const options& o) {
    const auto seed = fueter::parse_seed(o.seed);
    if (o.at.empty()) {
        throw usage_error("eval requires --at t,x,y,z");
    }
    const quaternion q = parse_point(o.at);
    const fueter::lifted_solution f{seed};
    const quaternion value = f(q);
    const auto w = f.radial(q.t, q.imag_norm());
    json j = {{"seed", seed.to_string()},
              {"point", {q.t, q.x, q.y, q.z}},
              {"value", {value.t, value.x, value.y, value.z}},
              {"u", w.u},
              {"v", w.v}};
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lifted solutions of the modified Fueter-Dirac equation"};
    app.require_subcommand(1);
    // -h would clash with the --h step option
    app.set_help_flag("--help", "print this help message and exit");
    options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("seed", o.seed, "seed expression in z, e.g. \"(z^2+1)/z\"")->required();
        sub->add_option("--rng-seed", o.rng_seed, "seed for all randomized sampling");
    };

    auto* verify = app.add_subcommand("verify", "run the property suite and print a JSON report");
    add_common(verify);
    verify->add_option("--tol", o.tol, "tolerance for the finite-difference residual checks");
    verify->add_option("--stencil-order", o.stencil_order, "central difference order")->check(CLI::IsMember({2, 4}));
    verify->add_option("--h", o.h, "fixed stencil step (default 1e-2 (1 + |q|))")->check(CLI::PositiveNumber);
    verify->add_option("--points", o.points, "random points per property")->check(CLI::PositiveNumber);
    verify->add_option("--box", o.box, "sampling box lo:hi or four ranges");
    verify->add_flag("--json", o.json_out, "JSON output (default)");

    auto* scan = app.add_subcommand("scan", "sample the Jacobian on a grid and print CSV rows");
    add_common(scan);
    scan->add_option("--box", o.box, "grid box lo:hi or four ranges (default -1:1)");
    scan->add_option("--res", o.res, "grid points per axis (>= 2)");
    scan->add_option("--stencil-order", o.stencil_order, "central difference order")->check(CLI::IsMember({2, 4}));
    scan->add_option("--h", o.h, "fixed stencil step")->check(CLI::PositiveNumber);
    auto* csv_flag = scan->add_flag("--csv", o.csv_out, "CSV output (default)");
    scan->add_flag("--json", o.json_out, "JSON output")->excludes(csv_flag);

    auto* components = app.add_subcommand("components", "zero-sphere radii and component count");
    add_common(components);
    components->add_flag("--json", o.json_out, "JSON output (default)");

    auto* classify = app.add_subcommand("classify", "degenerate / local diffeomorphism almost everywhere");
    add_common(classify);
    classify->add_flag("--json", o.json_out, "JSON output (default)");

    auto* eval = app.add_subcommand("eval", "evaluate the lifted field at a point");
    add_common(eval);
    eval->add_option("--at", o.at, "point t,x,y,z")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("UsageError", e.what());
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o);
        }
        if (scan->parsed()) {
            return cmd_scan(o);
        }
        if (components->parsed()) {
            return cmd_components(o);
        }
        if (classify->parsed()) {
            return cmd_classify(o);
        }
        return cmd_eval(o);
    } catch (const fueter::syntax_error& e) {
        report_error(e.name(), e.what(), e.position());
        return exit_usage;
    } catch (const fueter::zero_denominator& e) {
        report_error(e.name(), e.what());
        return exit_usage;
    } catch (const usage_error& e) {
        report_error("UsageError", e.what());
        return exit_usage;
    } catch (const fueter::error& e) {
        report_error(e.name(), e.what());
        return exit_failure;
    }
}
