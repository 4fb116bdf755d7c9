#include "xxz/det/gmatrix.hpp"
#include "xxz/efp/verify.hpp"
#include "xxz/harness/suites.hpp"
#include "xxz/harness/tables.hpp"
#include "xxz/qkz/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace xxz;

namespace {

constexpr int kUsage = 2;

struct Output {
    std::string format = "text";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        f << text;
    }
};

void add_output(CLI::App* app, Output& out, const std::string& default_format) {
    out.format = default_format;
    app->add_option("--format", out.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app->add_option("--out", out.path, "write to a file instead of stdout");
}

int report_exit(const SuiteReport& r, const Output& out) {
    out.write(render_report(r, parse_format(out.format)));
    return r.exit_code();
}

std::string check_json_rows(const CheckReport& rep, const std::string& suite) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : rep.items)
        rows.push_back({{"instance", c.name}, {"lhs", c.got}, {"rhs", c.expected}, {"pass", c.pass}});
    return nlohmann::json{{"suite", suite},
                          {"rows", rows},
                          {"summary",
                           {{"total", rep.items.size()},
                            {"passed", rep.items.size() - rep.failures()},
                            {"failed", rep.failures()}}}}
               .dump(2) +
           "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for the XXZ chain at Delta = -1/2"};
    app.require_subcommand(1);

    // verify
    SuiteConfig cfg;
    bool serial = false;
    Output verify_out;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "suite id")->check(CLI::IsMember(suite_names()))->capture_default_str();
    verify->add_option("--N,--N-max", cfg.N_max, "largest chain size")->check(CLI::Range(2, 8))->capture_default_str();
    verify->add_option("--n-max", cfg.n_max, "largest half-size")->check(CLI::Range(1, 12))->capture_default_str();
    verify->add_option("--k", cfg.k_max, "largest k for polynomial determinant checks")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    verify->add_option("--instances", cfg.instances, "random instances")->check(CLI::Range(1, 100000))->capture_default_str();
    verify->add_flag("--serial", serial, "run the suite grid serially");
    add_output(verify, verify_out, "text");

    // table
    std::string table_family, table_N, table_k, table_t;
    Output table_out;
    auto* table = app.add_subcommand("table", "tabulate exact values");
    table->add_option("--family", table_family, "table family")->required()->check(CLI::IsMember(table_families()));
    table->add_option("--N", table_N, "sizes, e.g. 3,5,7 or 3..9");
    table->add_option("--k", table_k, "k values, e.g. 1..4");
    table->add_option("--t", table_t, "rational t for t-ratio tables");
    add_output(table, table_out, "csv");

    // counts
    std::string counts_family, counts_N, counts_k;
    Output counts_out;
    auto* counts = app.add_subcommand("counts", "enumeration constants");
    counts->add_option("--family", counts_family, "asm, aht, csscpp or lgv")
        ->required()
        ->check(CLI::IsMember({"asm", "aht", "csscpp", "lgv"}));
    counts->add_option("--N,--n", counts_N, "sizes, e.g. 3..13")->required();
    counts->add_option("--k", counts_k, "k values (csscpp, lgv)");
    add_output(counts, counts_out, "csv");

    // qkz
    std::string qkz_mu = "e";
    int qkz_N = 4;
    bool qkz_check = false;
    Output qkz_out;
    auto* qkz = app.add_subcommand("qkz", "solve the qKZ system at generic q");
    qkz->add_option("--mu", qkz_mu, "e, - or +")->check(CLI::IsMember({"e", "-", "+", "minus", "plus"}))->capture_default_str();
    qkz->add_option("--N", qkz_N, "chain size")->check(CLI::Range(2, 8))->capture_default_str();
    qkz->add_flag("--check", qkz_check, "run the structural checks instead of dumping the solution");
    add_output(qkz, qkz_out, "json");

    // efp
    std::string efp_mu = "e";
    int efp_N = 4, efp_k = 1;
    bool efp_pseudo = false, efp_check = false;
    Output efp_out;
    auto* efp = app.add_subcommand("efp", "inhomogeneous EFP at generic q");
    efp->add_option("--mu", efp_mu, "e, - or +")->check(CLI::IsMember({"e", "-", "+", "minus", "plus"}))->capture_default_str();
    efp->add_option("--N", efp_N, "chain size")->check(CLI::Range(2, 8))->capture_default_str();
    efp->add_option("--k", efp_k, "string length")->check(CLI::Range(0, 8))->capture_default_str();
    efp->add_flag("--pseudo", efp_pseudo, "bilinear pairing");
    efp->add_flag("--check", efp_check, "run symmetry and degree checks instead of dumping");
    add_output(efp, efp_out, "json");

    // detcheck
    std::string det_suite = "appendixA";
    std::uint64_t det_seed = 0;
    int det_instances = 200;
    int det_n = 8;
    Output det_out;
    auto* detcheck = app.add_subcommand("detcheck", "determinant identities on seeded instances");
    detcheck->add_option("--suite", det_suite, "appendixA or appendixB")
        ->check(CLI::IsMember({"appendixA", "appendixB"}))
        ->capture_default_str();
    detcheck->add_option("--seed", det_seed, "random seed")->capture_default_str();
    detcheck->add_option("--instances", det_instances, "random instances")->check(CLI::Range(1, 100000))->capture_default_str();
    detcheck->add_option("--n-max", det_n, "largest n for appendixB")->check(CLI::Range(0, 12))->capture_default_str();
    add_output(detcheck, det_out, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*verify) {
            cfg.exec = serial ? Exec::serial : Exec::parallel;
            return report_exit(run_suite(cfg), verify_out);
        }
        if (*table) {
            std::vector<int> Ns = table_N.empty() ? std::vector<int>{} : parse_int_list(table_N);
            std::vector<int> ks = table_k.empty() ? std::vector<int>{} : parse_int_list(table_k);
            if (Ns.empty() && ks.empty()) throw std::invalid_argument("table needs --N or --k");
            std::optional<Rational> t;
            if (!table_t.empty()) t = parse_rational(table_t);
            table_out.write(render_table(make_table(table_family, Ns, ks, t), parse_format(table_out.format)));
            return 0;
        }
        if (*counts) {
            std::vector<int> ks = counts_k.empty() ? std::vector<int>{} : parse_int_list(counts_k);
            counts_out.write(
                render_table(counts_table(counts_family, parse_int_list(counts_N), ks), parse_format(counts_out.format)));
            return 0;
        }
        if (*qkz) {
            Mu mu = parse_mu(qkz_mu);
            if (!mu_matches(mu, qkz_N)) throw std::invalid_argument("mu does not match the parity of N");
            auto sol = solve_qkz<GenericQ>(mu, qkz_N);
            if (qkz_check) {
                CheckReport rep = verify_structure(sol);
                rep.append(verify_kernel(sol));
                return report_exit(run_tasks("qkz", {{"qkz", [&] { return rep; }}}, Exec::serial), qkz_out);
            }
            qkz_out.write(solution_to_json(sol).dump(2) + "\n");
            return 0;
        }
        if (*efp) {
            Mu mu = parse_mu(efp_mu);
            if (!mu_matches(mu, efp_N)) throw std::invalid_argument("mu does not match the parity of N");
            const int ups = mu_ups(mu, efp_N);
            if (efp_k > ups || (efp_pseudo && mu == Mu::plus && efp_k == ups))
                throw std::invalid_argument("k out of range for this sector");
            auto sol = solve_qkz<GenericQ>(mu, efp_N);
            auto e = efp_pseudo ? inhom_pseudo_efp(sol, efp_k) : inhom_efp(sol, efp_k);
            if (efp_check) {
                CheckReport rep = verify_efp_symmetry(e);
                rep.append(verify_efp_degree(e));
                return report_exit(run_tasks("efp", {{"efp", [&] { return rep; }}}, Exec::serial), efp_out);
            }
            efp_out.write(efp_to_json(e).dump(2) + "\n");
            return 0;
        }
        if (*detcheck) {
            SuiteConfig dc;
            dc.suite = det_suite;
            dc.seed = det_seed;
            dc.instances = det_instances;
            dc.n_max = det_n;
            SuiteReport r = run_suite(dc);
            if (det_out.format != "json") return report_exit(r, det_out);
            CheckReport rep;
            for (const auto& row : r.rows) rep.add(row.instance, row.pass, row.expected, row.got, row.provenance);
            det_out.write(check_json_rows(rep, det_suite));
            return r.exit_code();
        }
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
