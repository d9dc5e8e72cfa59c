#include "irrpoly/brute.hpp"
#include "irrpoly/census.hpp"
#include "irrpoly/emit.hpp"
#include "irrpoly/graded.hpp"
#include "irrpoly/spectral.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace irrpoly;

void apply_thread_override() {
#ifdef _OPENMP
    if (const char* env = std::getenv("IRRPOLY_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif
}

// symbolic counts carry q-exponents up to B(d,n)-1; refuse runaway requests
void guard_symbolic_size(int d, int n) {
    const long cap = 50000;
    Int size = degree_space_size(d, n);
    if (size > cap)
        throw std::invalid_argument("symbolic count for d=" + std::to_string(d) +
                                    ", n=" + std::to_string(n) + " needs q-degree " +
                                    size.get_str() + "; the supported range is B(d,n) <= " +
                                    std::to_string(cap));
}

int write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_file, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file '" << out_file << "'\n";
        return 1;
    }
    os << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_override();

    CLI::App app{"exact census and stable graded-series calculus for spaces of "
                 "irreducible multivariate polynomials"};
    app.require_subcommand(1);

    std::string format_name = "md";
    std::string out_file;
    app.add_option("--format", format_name, "output format: json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--out", out_file, "write output to a file instead of stdout");

    // count
    auto* count_cmd = app.add_subcommand("count", "exact irreducible count as a polynomial in q");
    int c_d = 0, c_n = 0;
    bool c_symbolic = false;
    std::vector<long> c_evals{2, 3, 4, 5};
    count_cmd->add_option("-d,--degree", c_d, "total degree")->required();
    count_cmd->add_option("-n,--vars", c_n, "number of variables")->required();
    count_cmd->add_flag("--symbolic", c_symbolic, "print the symbolic polynomial (md format)");
    count_cmd->add_option("--eval", c_evals, "evaluation points q (default 2 3 4 5)");

    // euler
    auto* euler_cmd = app.add_subcommand("euler", "compactly supported Euler characteristics");
    int e_dmax = 8, e_nmax = 6;
    euler_cmd->add_option("--d-max", e_dmax, "largest degree (default 8)");
    euler_cmd->add_option("--n-max", e_nmax, "largest variable count (default 6)");

    // carlitz
    auto* carlitz_cmd =
        app.add_subcommand("carlitz", "exact ratios irreducible/all, approaching 1/(1-1/q)");
    int ca_q = 2, ca_n = 2, ca_dmax = 10;
    carlitz_cmd->add_option("-q,--prime", ca_q, "prime field size")->required();
    carlitz_cmd->add_option("-n,--vars", ca_n, "number of variables (needs n >= 2)")->required();
    carlitz_cmd->add_option("--d-max", ca_dmax, "largest degree (default 10)");

    // hyde
    auto* hyde_cmd =
        app.add_subcommand("hyde", "low-coefficient stabilization of the counts as n grows");
    int h_d = 0, h_K = 6, h_nmax = 12;
    hyde_cmd->add_option("-d,--degree", h_d, "total degree")->required();
    hyde_cmd->add_option("-K,--window", h_K, "track coefficients of q^0..q^K (default 6)");
    hyde_cmd->add_option("--n-max", h_nmax, "scan n up to this bound (default 12)");

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "stable Betti numbers from the page-1 window");
    int b_d = 0, b_max = 11;
    std::string b_conv = "koszul";
    betti_cmd->add_option("-d,--degree", b_d, "total degree (2, 3 or 4)")->required();
    betti_cmd->add_option("--max-degree", b_max, "report b_i for i <= max (default 11)");
    betti_cmd->add_option("--convention", b_conv, "koszul or naive (default koszul)")
        ->check(CLI::IsMember({"koszul", "naive"}));

    // e1
    auto* e1_cmd = app.add_subcommand("e1", "page-1 window of the stratification sequence");
    int w_d = 0, w_max = 10;
    std::string w_conv = "koszul";
    bool w_betti = false;
    e1_cmd->add_option("-d,--degree", w_d, "total degree (2, 3 or 4)")->required();
    e1_cmd->add_option("--max-degree", w_max, "window total degree bound (default 10)");
    e1_cmd->add_option("--convention", w_conv, "koszul or naive (default koszul)")
        ->check(CLI::IsMember({"koszul", "naive"}));
    e1_cmd->add_flag("--betti", w_betti, "include resolved Betti values");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "every explicit threshold formula, exact");
    int bo_d = 0, bo_n = 0;
    bounds_cmd->add_option("-d,--degree", bo_d, "total degree")->required();
    bounds_cmd->add_option("-n,--vars", bo_n, "number of variables")->required();

    // brute
    auto* brute_cmd =
        app.add_subcommand("brute", "ground-truth enumeration over a small prime field");
    int br_d = 0, br_n = 0, br_p = 0;
    bool br_verify = false, br_serial = false;
    std::uint64_t br_cap = BruteContext::kDefaultStateCap;
    std::vector<std::string> br_tuples;
    brute_cmd->add_option("-d,--degree", br_d, "total degree");
    brute_cmd->add_option("-n,--vars", br_n, "number of variables");
    brute_cmd->add_option("-p,--prime", br_p, "prime field size (2, 3 or 5)");
    brute_cmd->add_flag("--verify", br_verify,
                        "cross-validate the sieve against the symbolic counts");
    brute_cmd->add_option("--tuple", br_tuples, "verification tuple d,n,p (repeatable)");
    brute_cmd->add_flag("--serial", br_serial, "use the serial reference kernel");
    brute_cmd->add_option("--state-cap", br_cap, "state-space budget (default 2^24)");

    // series
    auto* series_cmd = app.add_subcommand("series", "stable dimension series for d <= 3");
    int s_d = 0, s_trunc = 40;
    std::string s_conv = "koszul";
    bool s_compare = false;
    series_cmd->add_option("-d,--degree", s_d, "total degree (1, 2 or 3)")->required();
    series_cmd->add_option("--trunc", s_trunc, "truncation order (default 40)");
    series_cmd->add_option("--convention", s_conv, "koszul or naive (default koszul)")
        ->check(CLI::IsMember({"koszul", "naive"}));
    series_cmd->add_flag("--compare", s_compare,
                         "compare the pipeline value with the tabulated closed form");

    // audit
    auto* audit_cmd =
        app.add_subcommand("audit", "verify stratum series vanish below their r-threshold");
    int a_dmax = 4;
    std::string a_conv = "koszul";
    audit_cmd->add_option("--d-max", a_dmax, "audit 2 <= d <= d_max (default 4, at most 6)");
    audit_cmd->add_option("--convention", a_conv, "koszul or naive (default koszul)")
        ->check(CLI::IsMember({"koszul", "naive"}));

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Format fmt = parse_format(format_name);
        std::string text;
        int status = 0;

        if (*count_cmd) {
            guard_symbolic_size(c_d, c_n);
            QPoly count = irr_count(c_d, c_n);
            std::vector<Int> evals(c_evals.begin(), c_evals.end());
            if (fmt == Format::md && c_symbolic)
                text = "count d=" + std::to_string(c_d) + " n=" + std::to_string(c_n) + "\n\n    " +
                       count.to_string() + "\n";
            else
                text = emit_count(c_d, c_n, count, evals, fmt);
        } else if (*euler_cmd) {
            text = emit_euler(e_dmax, e_nmax, euler_table(e_dmax, e_nmax), fmt);
        } else if (*carlitz_cmd) {
            guard_symbolic_size(ca_dmax, ca_n);
            text = emit_carlitz(ca_q, ca_n, carlitz_table(ca_q, ca_n, ca_dmax), fmt);
        } else if (*hyde_cmd) {
            guard_symbolic_size(h_d, h_nmax);
            HydeResult res = hyde_stabilization(h_d, h_K, h_nmax);
            text = emit_hyde(res, fmt);  // not-found is reported explicitly, never silently
        } else if (*betti_cmd) {
            SymConvention conv = parse_convention(b_conv);
            BettiWindow w = stable_betti_window(b_d, b_max, conv, known_differential_rules(b_d));
            text = emit_betti(w, fmt);
        } else if (*e1_cmd) {
            SymConvention conv = parse_convention(w_conv);
            E1Window window = e1_window(w_d, w_max, conv);
            auto rules = known_differential_rules(w_d);
            if (w_betti || fmt == Format::json) {
                BettiWindow bw = stable_betti_window(w_d, w_max + 1, conv, rules);
                text = emit_e1(window, rules, &bw, fmt);
            } else {
                text = emit_e1(window, rules, nullptr, fmt);
            }
        } else if (*bounds_cmd) {
            text = emit_bounds(bounds_report(bo_d, bo_n), fmt);
        } else if (*brute_cmd) {
            if (br_verify) {
                std::vector<std::array<int, 3>> tuples = default_validation_tuples();
                if (!br_tuples.empty()) {
                    tuples.clear();
                    for (const std::string& t : br_tuples) {
                        int d, n, p;
                        if (std::sscanf(t.c_str(), "%d,%d,%d", &d, &n, &p) != 3)
                            throw std::invalid_argument("bad --tuple '" + t + "' (want d,n,p)");
                        tuples.push_back({d, n, p});
                    }
                }
                CrossValidationReport report = cross_validate(tuples, !br_serial, br_cap);
                text = emit_cross_validation(report, fmt);
                if (!report.all_pass) status = 1;
            } else {
                if (br_d < 1 || br_n < 1 || br_p < 2)
                    throw std::invalid_argument("brute census needs -d, -n and -p (or --verify)");
                BruteContext ctx(br_d, br_n, br_p, br_cap);
                text = emit_census(ctx.census(!br_serial), br_d, br_n, br_p, fmt);
            }
        } else if (*series_cmd) {
            SymConvention conv = parse_convention(s_conv);
            Series pipeline = stable_irr_series(s_d, s_trunc, conv);
            if (s_compare) {
                RationalForm form = reference_closed_form(s_d);
                text = emit_series_comparison(s_d, pipeline, form.expand(s_trunc), form, conv, fmt);
            } else {
                text = emit_series(s_d, pipeline, conv, fmt);
            }
        } else if (*audit_cmd) {
            VanishingAuditReport report = vanishing_audit(a_dmax, parse_convention(a_conv));
            text = emit_vanishing_audit(report, fmt);
            if (!report.all_ok) status = 1;
        }

        int write_status = write_output(text, out_file);
        return write_status ? write_status : status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
