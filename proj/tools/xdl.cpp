// Command-line front-end for exact analysis of cross-dimensional linear
// systems x(t+1) = A (v-product) x(t): dimension trajectories, reachable
// subspaces, membership verdicts and minimal annihilator polynomials.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "xdl/report.hpp"

namespace {

using xdl::report::json;

struct CommonOpts {
    std::string format = "text";
    bool no_timing = false;
};

void add_format_opts(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--no-timing", opts.no_timing, "Suppress the timing field");
}

void emit(json doc, const CommonOpts& opts, double elapsed_ms) {
    const std::string command = doc.value("command", "");
    if (!opts.no_timing) doc["timing_ms"] = elapsed_ms;
    if (opts.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
        if (command != "dims")
            throw std::invalid_argument("csv output is only available for the dims command");
        std::cout << xdl::report::render_dims_csv(doc);
        if (!opts.no_timing) std::cout << "timing_ms," << elapsed_ms << "\n";
    } else {
        std::cout << xdl::report::render_text(doc);
        if (!opts.no_timing) std::cout << "timing_ms = " << elapsed_ms << "\n";
    }
}

struct SystemParams {
    std::uint64_t m = 0, k = 0;
};

/// m and k either given directly or derived from a matrix file; derivation
/// enforces the dimension-bounded requirement m | n.
SystemParams resolve_mk(std::uint64_t m, std::uint64_t k, const std::string& matrix_path) {
    if (!matrix_path.empty()) {
        const xdl::RMatrix A = xdl::parse_matrix_file(matrix_path);
        if (A.cols() % A.rows() != 0)
            throw xdl::precondition_error(
                "matrix is not dimension-bounded: rows (" + std::to_string(A.rows()) +
                ") do not divide columns (" + std::to_string(A.cols()) + ")");
        return {A.rows(), A.cols() / A.rows()};
    }
    if (m == 0 || k == 0)
        throw std::invalid_argument("either --matrix or both --m and --k are required");
    return {m, k};
}

xdl::RMatrix load_bounded_matrix(const std::string& path, const char* who) {
    const xdl::RMatrix A = xdl::parse_matrix_file(path);
    if (A.cols() % A.rows() != 0)
        throw xdl::precondition_error(std::string(who) +
                                      ": matrix is not dimension-bounded (rows must divide columns)");
    return A;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for dimension-bounded linear systems"};
    app.require_subcommand(1);

    std::uint64_t m = 0, k = 0, p = 0, r = 0;
    std::size_t t = 0;
    std::optional<std::size_t> t_opt;
    std::optional<std::size_t> t_max_opt;
    std::optional<std::size_t> space_opt;
    std::optional<std::uint64_t> p_opt;
    std::string matrix_path, vector_path;
    CommonOpts opts;

    auto* dims = app.add_subcommand("dims", "State-dimension trajectory r(0..t_max)");
    dims->add_option("--m", m, "Row count of A");
    dims->add_option("--k", k, "Column multiplier (A is m x km)");
    dims->add_option("--matrix", matrix_path, "Derive m, k from a matrix file");
    dims->add_option("--p", p, "Initial state dimension")->required();
    dims->add_option("--t-max", t_max_opt, "Last time step (default: t* bound + 2)");
    add_format_opts(dims, opts);

    auto* profile = app.add_subcommand("profile", "Factorization profile of (m, k, p)");
    profile->add_option("--m", m, "Row count of A");
    profile->add_option("--k", k, "Column multiplier");
    profile->add_option("--matrix", matrix_path, "Derive m, k from a matrix file");
    profile->add_option("--p", p, "Initial state dimension")->required();
    add_format_opts(profile, opts);

    auto* reachdim = app.add_subcommand("reachdim", "Is r a reachable dimension?");
    reachdim->add_option("--m", m, "Row count of A");
    reachdim->add_option("--k", k, "Column multiplier");
    reachdim->add_option("--matrix", matrix_path, "Derive m, k from a matrix file");
    reachdim->add_option("--p", p, "Initial state dimension")->required();
    reachdim->add_option("--r", r, "Candidate dimension")->required();
    add_format_opts(reachdim, opts);

    auto* basis = app.add_subcommand("basis", "Reduced basis of the t-step reachable subspace");
    basis->add_option("--matrix", matrix_path, "System matrix file")->required();
    basis->add_option("--p", p, "Initial state dimension")->required();
    basis->add_option("--t", t, "Time step")->required();
    add_format_opts(basis, opts);

    auto* member = app.add_subcommand("member", "t-step reachability of a state vector");
    member->add_option("--matrix", matrix_path, "System matrix file")->required();
    member->add_option("--p", p, "Initial state dimension")->required();
    member->add_option("--vector", vector_path, "State vector file")->required();
    member->add_option("--t", t_opt, "Single time step to test");
    member->add_option("--t-max", t_max_opt, "Scan all t in [0, t_max] (default 8)");
    add_format_opts(member, opts);

    auto* annihilator = app.add_subcommand("annihilator", "Minimal A-annihilator polynomials");
    annihilator->add_option("--matrix", matrix_path, "System matrix file")->required();
    annihilator->add_option("--vector", vector_path, "Minimal annihilator of this vector");
    annihilator->add_option("--space", space_opt, "Minimal annihilator of the full space V_n");
    annihilator->add_option("--p", p_opt, "Minimal annihilator of the reachable union for V_p");
    add_format_opts(annihilator, opts);

    auto* report = app.add_subcommand("report", "Full analysis of one system (A, V_p)");
    report->add_option("--matrix", matrix_path, "System matrix file")->required();
    report->add_option("--p", p, "Initial state dimension")->required();
    add_format_opts(report, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        json doc;
        if (dims->parsed()) {
            const auto [mm, kk] = resolve_mk(m, k, matrix_path);
            const auto prof = xdl::build_profile(mm, kk, p);
            const std::size_t t_max = t_max_opt.value_or(prof.t_star_bound + 2);
            doc = xdl::report::dims_document(mm, kk, p, t_max);
        } else if (profile->parsed()) {
            const auto [mm, kk] = resolve_mk(m, k, matrix_path);
            doc = xdl::report::profile_document(mm, kk, p);
        } else if (reachdim->parsed()) {
            const auto [mm, kk] = resolve_mk(m, k, matrix_path);
            doc = xdl::report::reachdim_document(mm, kk, p, r);
        } else if (basis->parsed()) {
            doc = xdl::report::basis_document(xdl::parse_matrix_file(matrix_path), p, t);
        } else if (member->parsed()) {
            const xdl::RMatrix A = xdl::parse_matrix_file(matrix_path);
            const xdl::RVector x = xdl::parse_vector_file(vector_path);
            doc = xdl::report::member_document(A, p, x, t_opt, t_max_opt.value_or(8));
        } else if (annihilator->parsed()) {
            const xdl::RMatrix A = load_bounded_matrix(matrix_path, "annihilator");
            xdl::report::AnnihilatorRequest req;
            if (!vector_path.empty()) req.vector = xdl::parse_vector_file(vector_path);
            req.space = space_opt;
            req.p = p_opt ? std::optional<std::size_t>(static_cast<std::size_t>(*p_opt))
                          : std::nullopt;
            doc = xdl::report::annihilator_document(A, req);
        } else if (report->parsed()) {
            doc = xdl::report::report_document(load_bounded_matrix(matrix_path, "report"), p);
        }
        const auto stop = std::chrono::steady_clock::now();
        const double elapsed_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        emit(std::move(doc), opts, elapsed_ms);
        return 0;
    } catch (const xdl::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const xdl::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
