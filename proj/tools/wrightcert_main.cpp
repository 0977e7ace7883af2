#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wrightcert/globalchecks.hpp"
#include "wrightcert/oracle.hpp"

namespace {

using namespace wrightcert;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitNonConverged = 3;
constexpr int kExitUsage = 64;

struct VerifyOptions {
    std::string target;
    std::string output;
    std::string params_file;
    bool json = true;
    int jobs = 1;
    std::optional<double> r_alpha, r_omega, r_c, eps0, rho;
};

ParamTable load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open parameter file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    ParamTable t = ParamTable::builtin();
    t.version = j.at("version").get<std::string>();
    auto read_case = [&](const char* key, ParamCase& pc) {
        if (!j.at("cases").contains(key)) return;
        const auto& c = j["cases"][key];
        pc.eps0 = c.at("eps0").get<double>();
        auto r = c.at("r").get<std::vector<double>>();
        if (r.size() != 3) throw std::runtime_error("parameter case needs 3 radii");
        pc.r = {r[0], r[1], r[2]};
        pc.rho = c.at("rho").get<double>();
    };
    read_case("bigbox-a", t.bigbox_a);
    read_case("bigbox-b", t.bigbox_b);
    read_case("tight", t.tight);
    return t;
}

void write_out(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << body;
}

int run_verify(const VerifyOptions& opt) {
    ParamTable params = ParamTable::builtin();
    bool canonical = true;
    if (!opt.params_file.empty()) {
        params = load_params(opt.params_file);
        canonical = false;
    }
    auto override_case = [&](ParamCase& pc) {
        if (opt.eps0) pc.eps0 = *opt.eps0;
        if (opt.r_alpha) pc.r[0] = *opt.r_alpha;
        if (opt.r_omega) pc.r[1] = *opt.r_omega;
        if (opt.r_c) pc.r[2] = *opt.r_c;
        if (opt.rho) pc.rho = *opt.rho;
        canonical = canonical && !opt.eps0 && !opt.r_alpha && !opt.r_omega && !opt.r_c && !opt.rho;
    };

    Certificate cert;
    if (opt.target == "all") {
        cert = certify_all(params, opt.jobs);
    } else if (opt.target == "contraction-a") {
        override_case(params.bigbox_a);
        cert = certify_contraction_case(params.bigbox_a);
    } else if (opt.target == "contraction-b") {
        override_case(params.bigbox_b);
        cert = certify_contraction_case(params.bigbox_b);
    } else if (opt.target == "tight") {
        override_case(params.tight);
        cert = certify_contraction_case(params.tight);
    } else if (opt.target == "wright") {
        cert = certify_wright(params);
    } else if (opt.target == "nofold") {
        cert = certify_nofold(params);
    } else if (opt.target == "uniqueness") {
        cert = certify_uniqueness(params);
    } else if (opt.target == "opnorms") {
        cert = certify_opnorms();
    } else if (opt.target == "omega-window") {
        cert = certify_omega_window();
    } else {
        std::cerr << "unknown verify target: " << opt.target << "\n";
        return kExitUsage;
    }
    cert.parameter_table_version = params.version;
    cert.canonical = canonical;

    write_out(opt.output, opt.json ? certificate_to_json(cert) : certificate_to_text(cert));
    if (cert.inconclusive) return kExitInconclusive;
    return cert.overall ? kExitPass : kExitFail;
}

int run_branch(double eps_max, int points, int modes, const std::string& output) {
    std::vector<double> grid(static_cast<size_t>(points));
    for (int i = 1; i <= points; ++i) grid[static_cast<size_t>(i - 1)] = eps_max * i / points;

    std::vector<oracle::BranchPoint> branch;
    std::vector<double> failed;
    try {
        branch = oracle::continue_branch(grid, modes);
    } catch (const ConvergenceError&) {
        // fall back to per-point solves so every non-converged eps is reported
        oracle::TruncatedState seed;
        bool have_seed = false;
        for (double e : grid) {
            try {
                oracle::TruncatedState g =
                    have_seed ? seed : oracle::approximate_state(e, modes);
                oracle::BranchPoint p;
                p.eps = e;
                p.state = oracle::newton_solve(e, g);
                seed = p.state;
                have_seed = true;
                branch.push_back(p);
            } catch (const ConvergenceError&) {
                failed.push_back(e);
            }
        }
    }

    std::ostringstream csv;
    csv << "eps,alpha,omega,dalpha_deps,c_norm,defect\n";
    for (const auto& p : branch)
        csv << format_double(p.eps) << ',' << format_double(p.state.alpha) << ','
            << format_double(p.state.omega) << ',' << format_double(p.dalpha_deps) << ','
            << format_double(p.c_norm) << ',' << format_double(p.defect) << "\n";
    write_out(output, csv.str());

    if (!failed.empty()) {
        std::cerr << "non-converged eps values:";
        for (double e : failed) std::cerr << ' ' << format_double(e);
        std::cerr << "\n";
        return kExitNonConverged;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified inequality batteries and branch data for the delay equation "
                 "y'(t) = -alpha y(t-1)(1 + y(t)) near its first Hopf bifurcation"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    int default_jobs = 1;
    if (const char* env = std::getenv("WRIGHTCERT_JOBS")) default_jobs = std::atoi(env);
    if (default_jobs < 1) default_jobs = 1;
    vopt.jobs = default_jobs;

    CLI::App* verify = app.add_subcommand("verify", "run a certified inequality battery");
    verify->add_option("target", vopt.target,
                       "one of: all, contraction-a, contraction-b, tight, wright, nofold, "
                       "uniqueness, opnorms, omega-window")
        ->required();
    verify->add_option("--output", vopt.output, "write the certificate to FILE");
    verify->add_option("--params", vopt.params_file, "JSON parameter table override");
    verify->add_option("--jobs", vopt.jobs, "run independent checks concurrently");
    bool text = false, json_flag = false;
    verify->add_flag("--json", json_flag, "JSON certificate (default)");
    verify->add_flag("--text", text, "human-readable certificate");
    double r_alpha, r_omega, r_c, eps0, rho;
    auto* oa = verify->add_option("--r-alpha", r_alpha, "override the alpha radius");
    auto* ow = verify->add_option("--r-omega", r_omega, "override the omega radius");
    auto* oc = verify->add_option("--r-c", r_c, "override the c radius");
    auto* oe = verify->add_option("--eps0", eps0, "override eps0");
    auto* orh = verify->add_option("--rho", rho, "override rho");

    double eps_max = 0.1;
    int points = 100, modes = 32;
    std::string branch_out;
    CLI::App* branch = app.add_subcommand("branch", "numerically continue the periodic branch");
    branch->add_option("--eps-max", eps_max, "largest eps on the grid (0 < eps <= 0.12)");
    branch->add_option("--points", points, "number of grid points");
    branch->add_option("--modes", modes, "truncation order (>= 8)");
    branch->add_option("--output", branch_out, "write CSV to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (text && json_flag) {
                std::cerr << "--json and --text are mutually exclusive\n";
                return kExitUsage;
            }
            vopt.json = !text;
            if (*oa) vopt.r_alpha = r_alpha;
            if (*ow) vopt.r_omega = r_omega;
            if (*oc) vopt.r_c = r_c;
            if (*oe) vopt.eps0 = eps0;
            if (*orh) vopt.rho = rho;
            if (vopt.jobs < 1) {
                std::cerr << "--jobs must be >= 1\n";
                return kExitUsage;
            }
            return run_verify(vopt);
        }
        if (eps_max <= 0.0 || eps_max > 0.12 || modes < 8 || points < 1) {
            std::cerr << "branch requires 0 < eps-max <= 0.12, modes >= 8, points >= 1\n";
            return kExitUsage;
        }
        return run_branch(eps_max, points, modes, branch_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
