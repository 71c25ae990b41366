// gencomplex: generalized Renyi-difference complexity of quantum-state densities.
//
//   gencomplex compute --system hydrogen --n 2 --l 1 --m 0 --alpha 2 --beta inf
//   gencomplex figure fig1a -o fig1a.csv
//   gencomplex table-sqwell --d 3
//   gencomplex verify --suite all
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 numerical divergence, 4 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gencomplex/complexity.hpp"
#include "gencomplex/figures.hpp"
#include "gencomplex/quantum.hpp"
#include "gencomplex/verify.hpp"

namespace {

using namespace gencomplex;
using nlohmann::ordered_json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kDivergence = 3, kIoError = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OrderParam parse_order(const std::string& token)
{
    if (token == "inf" || token == "infinity")
        return OrderParam::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw DomainError("cannot parse order '" + token + "'");
    }
    if (used != token.size())
        throw DomainError("cannot parse order '" + token + "'");
    return OrderParam::from_value(v);
}

ordered_json json_real(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

// Writes to the path, or to stdout when the path is empty.
template <class Writer>
void emit(const std::string& path, Writer&& write)
{
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    write(out);
    out.close();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

struct ComputeArgs {
    std::string system = "hydrogen";
    int n = 1;
    int l = 0;
    int m = 0;
    int k = 1;
    double lambda = 1.0;
    std::string space = "position";
    std::string alpha = "2";
    std::string beta = "inf";
    double tol = 1e-10;
    std::string format = "json";
    std::string out;
};

int run_compute(const ComputeArgs& args)
{
    const auto alpha = parse_order(args.alpha);
    const auto beta = parse_order(args.beta);
    const Space space = args.space == "momentum" ? Space::Momentum : Space::Position;

    QuadratureSpec spec;
    spec.rel_tol = args.tol;
    spec.validate();

    ordered_json state;
    Density density;
    if (args.system == "hydrogen") {
        const HydrogenState s{args.n, args.l, args.m, space};
        s.validate();
        density = hydrogen_density(s);
        state = {{"n", s.n}, {"l", s.l}, {"m", s.m}};
    } else if (args.system == "oscillator") {
        const OscillatorState s{args.n, args.l, args.m, args.lambda, space};
        s.validate();
        density = oscillator_density(s);
        state = {{"n", s.n}, {"l", s.l}, {"m", s.m}, {"lambda", s.strength}};
    } else if (args.system == "sqwell") {
        if (space != Space::Position)
            throw DomainError("square well is available in position space only");
        const SquareWellState s{args.k, 1.0, 1};
        s.validate();
        density = square_well_density(s);
        state = {{"k", s.k}, {"L", s.width}};
    } else {
        throw DomainError("unknown system '" + args.system + "'");
    }

    const auto c = complexity(density, alpha, beta, spec);
    if (!c.converged())
        std::cerr << "warning: quadrature did not reach the requested tolerance\n";

    emit(args.out, [&](std::ostream& os) {
        if (args.format == "csv") {
            os << "system,space,alpha,beta,complexity,r_alpha,r_beta,error_estimate\n";
            os << args.system << ',' << to_string(space) << ',' << alpha.to_string() << ',' << beta.to_string()
               << ',' << format_real(c.value) << ',' << format_real(c.r_alpha.value) << ','
               << format_real(c.r_beta.value) << ',' << format_real(c.error_estimate) << '\n';
            return;
        }
        ordered_json doc;
        doc["system"] = args.system;
        doc["state"] = state;
        doc["space"] = to_string(space);
        doc["alpha"] = json_real(alpha.value());
        doc["beta"] = json_real(beta.value());
        doc["complexity"] = json_real(c.value);
        doc["r_alpha"] = json_real(c.r_alpha.value);
        doc["r_beta"] = json_real(c.r_beta.value);
        doc["error_estimate"] = json_real(c.error_estimate);
        doc["converged"] = c.converged();
        doc["units"] = "atomic";
        os << doc.dump(2) << '\n';
    });
    return kOk;
}

int run_figure(const std::string& id_text, const std::string& format, const std::string& path)
{
    const auto id = parse_figure_id(id_text);
    if (!id)
        throw DomainError("unknown figure '" + id_text + "'");
    const auto rows = compute_figure(*id);
    emit(path, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json doc = ordered_json::array();
            for (const auto& r : rows)
                doc.push_back({{"l", r.l},
                               {"abs_m", r.abs_m},
                               {"complexity", r.value},
                               {"r_alpha", r.r_alpha},
                               {"sup_norm", r.sup_norm}});
            os << doc.dump(2) << '\n';
        } else {
            write_figure_csv(os, rows);
        }
    });
    return kOk;
}

int run_table_sqwell(int dimensions, const std::string& format, const std::string& path)
{
    if (dimensions < 1)
        throw DomainError("--d must be >= 1");
    struct Row {
        double alpha, g, value;
    };
    std::vector<Row> rows;
    for (int i = 0; i <= 32; ++i) {
        const double alpha = 0.25 * i;
        const auto order = OrderParam::from_value(alpha);
        const double g = square_well_g(order);
        rows.push_back({alpha, g, box_complexity(order, dimensions)});
    }
    emit(path, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json doc = ordered_json::array();
            for (const auto& r : rows)
                doc.push_back({{"alpha", r.alpha}, {"g", r.g}, {"complexity", r.value}});
            os << doc.dump(2) << '\n';
            return;
        }
        os << "alpha,g,complexity\n";
        for (const auto& r : rows)
            os << format_real(r.alpha) << ',' << format_real(r.g) << ',' << format_real(r.value) << '\n';
    });
    return kOk;
}

int run_verify(const std::string& suite_text, std::optional<double> tol)
{
    const auto suite = parse_suite(suite_text);
    if (!suite)
        throw DomainError("unknown suite '" + suite_text + "'");
    const auto checks = run_suite(*suite, tol);
    bool ok = true;
    for (const auto& c : checks) {
        print_check(std::cout, c);
        ok = ok && c.pass();
    }
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Renyi-difference statistical complexity of quantum densities"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "complexity of a single state");
    cmd_compute->add_option("--system", compute.system)->check(CLI::IsMember({"hydrogen", "oscillator", "sqwell"}));
    cmd_compute->add_option("--n", compute.n);
    cmd_compute->add_option("--l", compute.l);
    cmd_compute->add_option("--m", compute.m);
    cmd_compute->add_option("--k", compute.k, "square-well quantum number");
    cmd_compute->add_option("--lambda", compute.lambda, "oscillator strength");
    cmd_compute->add_option("--space", compute.space)->check(CLI::IsMember({"position", "momentum"}));
    cmd_compute->add_option("--alpha", compute.alpha, "order: positive real, 0, 1 or inf");
    cmd_compute->add_option("--beta", compute.beta, "order: positive real, 0, 1 or inf");
    cmd_compute->add_option("--tol", compute.tol, "quadrature relative tolerance");
    cmd_compute->add_option("--format", compute.format)->check(CLI::IsMember({"json", "csv"}));
    cmd_compute->add_option("-o", compute.out, "output path (default stdout)");

    std::string figure_id;
    std::string figure_format = "csv";
    std::string figure_out;
    auto* cmd_figure = app.add_subcommand("figure", "emit C(alpha,inf) versus |m| data for one figure");
    cmd_figure->add_option("id", figure_id, "fig1a|fig1b|fig2a|fig2b|fig3a|fig3b")->required();
    cmd_figure->add_option("--format", figure_format)->check(CLI::IsMember({"json", "csv"}));
    cmd_figure->add_option("-o", figure_out, "output path (default stdout)");

    int table_d = 1;
    std::string table_format = "csv";
    std::string table_out;
    auto* cmd_table = app.add_subcommand("table-sqwell", "square-well 2g(alpha) over alpha = 0, 0.25, ..., 8");
    cmd_table->add_option("--d", table_d, "box dimension");
    cmd_table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
    cmd_table->add_option("-o", table_out, "output path (default stdout)");

    std::string suite = "all";
    std::optional<double> verify_tol;
    auto* cmd_verify = app.add_subcommand("verify", "run property-verification suites");
    cmd_verify->add_option("--suite", suite, "symmetry|bounds|scaling|replica|nearcont|extremal|quantum|all");
    cmd_verify->add_option("--tol", verify_tol, "replace the tolerance of every tolerance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        if (*cmd_compute)
            return run_compute(compute);
        if (*cmd_figure)
            return run_figure(figure_id, figure_format, figure_out);
        if (*cmd_table)
            return run_table_sqwell(table_d, table_format, table_out);
        if (*cmd_verify)
            return run_verify(suite, verify_tol);
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDivergence;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadArgs;
    } catch (const EvaluationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDivergence;
    }
    return kBadArgs;
}
