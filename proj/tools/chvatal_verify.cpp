// chvatal-verify: exact and certified verification of the minimum-location
// theorem for binomial tails q_m = P(B(n, m/n) <= m), its two lemmas, and
// every displayed inequality of the case-split proof.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chvatal/lemmas.hpp"
#include "chvatal/parallel.hpp"
#include "chvatal/verify.hpp"

namespace {

using namespace chvatal;

struct CommonOpts {
    long n = 0;
    long n_min = 2;
    long n_max = 100;
    long s_max = 50;
    std::string mode = "exact";
    long precision = 53;
    int jobs = default_jobs();
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::string v_grid;
    int decimals = 12;
};

std::vector<Rational> parse_v_grid(const std::string& csv,
                                   std::vector<Rational> fallback) {
    if (csv.empty()) return fallback;
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
    return out;
}

// exit 0: all pass; 1: at least one failed check (counterexample); 2: usage
int emit(const CommonOpts& opts, std::vector<VerdictRecord> records) {
    std::size_t failed = 0;
    for (const auto& r : records)
        if (!r.pass) ++failed;
    ReportFormat fmt = opts.format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    if (!opts.out.empty()) {
        std::ofstream f(opts.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file '" << opts.out << "'\n";
            return 2;
        }
        write_report(f, std::move(records), fmt);
        std::cerr << "report written to " << opts.out << "\n";
    } else {
        write_report(std::cout, std::move(records), fmt);
    }
    if (failed) {
        std::cerr << "FAIL: " << failed << " check(s) failed -- counterexample found\n";
        return 1;
    }
    std::cerr << "ok: all checks passed\n";
    return 0;
}

int run_table(const CommonOpts& opts) {
    auto table = q_table(opts.n);
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!opts.out.empty()) {
        f.open(opts.out, std::ios::binary);
        if (!f) return 2;
        os = &f;
    }
    bool csv = opts.format == "csv";
    if (csv) *os << "m,q\n";
    for (long m = 0; m <= table.n; ++m) {
        if (csv)
            *os << m << "," << to_string(table.q[m]) << "\n";
        else
            *os << "{\"m\":" << m << ",\"q\":\"" << to_string(table.q[m]) << "\"}\n";
    }
    return 0;
}

int run_plot_data(const CommonOpts& opts) {
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!opts.out.empty()) {
        f.open(opts.out, std::ios::binary);
        if (!f) return 2;
        os = &f;
    }
    *os << "n,m,q_decimal,is_min,target_m\n";
    for (long n = opts.n_min; n <= opts.n_max; ++n) {
        auto table = q_table(n);
        auto verdict = theorem_check(n);
        for (long m = 0; m <= n; ++m) {
            *os << n << "," << m << "," << decimal_string(table.q[m], opts.decimals)
                << "," << (m == verdict.argmin_m ? 1 : 0) << "," << verdict.target_m
                << "\n";
        }
    }
    return 0;
}

int run_bench(const CommonOpts& opts) {
    using clock = std::chrono::steady_clock;
    std::vector<long> sample;
    long span = opts.n_max - opts.n_min;
    for (int i = 0; i <= 4; ++i) sample.push_back(opts.n_min + span * i / 4);
    bool all_faster = true;
    std::printf("%8s %16s %16s %10s %10s\n", "n", "exact_ns", "certified_ns",
                "speedup", "fallback");
    for (long n : sample) {
        auto t0 = clock::now();
        auto exact = theorem_check(n);
        auto t1 = clock::now();
        auto cert = certified_theorem_check(n, static_cast<Prec>(opts.precision));
        auto t2 = clock::now();
        auto exact_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        auto cert_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
        bool agree = exact.pass() == cert.verdict.pass() &&
                     exact.argmin_m == cert.verdict.argmin_m;
        if (!agree) {
            std::cerr << "bench: verdict mismatch at n=" << n << "\n";
            return 1;
        }
        if (cert_ns >= exact_ns) all_faster = false;
        std::printf("%8ld %16lld %16lld %9.2fx %9.4f\n", n,
                    static_cast<long long>(exact_ns), static_cast<long long>(cert_ns),
                    static_cast<double>(exact_ns) / static_cast<double>(cert_ns),
                    cert.fallback_fraction());
    }
    if (!all_faster) {
        std::cerr << "bench: certified path was not faster everywhere\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive exact-arithmetic verification of the binomial-tail "
                 "minimum conjecture"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* sub, bool with_range) {
        if (with_range) {
            sub->add_option("--n-min", opts.n_min)->envname("CHVERIFY_N_MIN");
            sub->add_option("--n-max", opts.n_max)->envname("CHVERIFY_N_MAX");
        }
        sub->add_option("--s-max", opts.s_max)->envname("CHVERIFY_S_MAX");
        sub->add_option("--mode", opts.mode)
            ->check(CLI::IsMember({"exact", "certified", "both"}))
            ->envname("CHVERIFY_MODE");
        sub->add_option("--precision", opts.precision)
            ->check(CLI::Range(8L, 1L << 20))
            ->envname("CHVERIFY_PRECISION");
        sub->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber)
            ->envname("CHVERIFY_JOBS");
        sub->add_option("--format", opts.format)
            ->check(CLI::IsMember({"json", "csv"}))
            ->envname("CHVERIFY_FORMAT");
        sub->add_option("--out", opts.out)->envname("CHVERIFY_OUT");
        sub->add_option("--seed", opts.seed)->envname("CHVERIFY_SEED");
        sub->add_option("--samples", opts.samples)->envname("CHVERIFY_SAMPLES");
        sub->add_option("--v-grid", opts.v_grid)->envname("CHVERIFY_V_GRID");
        sub->add_option("--decimals", opts.decimals)->check(CLI::Range(1, 200))
            ->envname("CHVERIFY_DECIMALS");
    };

    auto* table = app.add_subcommand("table", "print the exact tail table for one n");
    table->add_option("--n", opts.n)->required()->check(CLI::Range(2L, 1000000L));
    add_common(table, false);

    auto* vt = app.add_subcommand("verify-theorem",
                                  "minimizer location and switch pattern over a range");
    add_common(vt, true);
    auto* vl1 = app.add_subcommand("verify-lemma1", "four-way equivalence of the "
                                   "q_m >= q_{m+1} characterizations");
    add_common(vl1, true);
    auto* vl2 = app.add_subcommand("verify-lemma2",
                                   "monotonicity of g_v and h at integer points");
    add_common(vl2, true);
    auto* vp = app.add_subcommand("verify-proof",
                                  "case-split integrals, closed-form bounds, signs");
    add_common(vp, false);
    auto* vs = app.add_subcommand("verify-scalars",
                                  "side inequalities (exact and enclosure-decided)");
    add_common(vs, false);
    auto* mc = app.add_subcommand("mc-check", "Monte Carlo sanity suite");
    add_common(mc, false);
    auto* bench = app.add_subcommand("bench", "exact vs certified timing");
    add_common(bench, true);
    auto* plot = app.add_subcommand("emit-plot-data", "decimal q_m values for plotting");
    add_common(plot, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return run_table(opts);
        if (plot->parsed()) return run_plot_data(opts);
        if (bench->parsed()) return run_bench(opts);

        if (vt->parsed()) {
            std::vector<VerdictRecord> recs;
            if (opts.mode == "exact" || opts.mode == "both") {
                auto r = verify_theorem_exact(opts.n_min, opts.n_max, opts.jobs);
                recs.insert(recs.end(), std::make_move_iterator(r.begin()),
                            std::make_move_iterator(r.end()));
            }
            if (opts.mode == "certified" || opts.mode == "both") {
                auto r = verify_theorem_certified(
                    opts.n_min, opts.n_max, static_cast<Prec>(opts.precision),
                    opts.jobs);
                recs.insert(recs.end(), std::make_move_iterator(r.begin()),
                            std::make_move_iterator(r.end()));
            }
            return emit(opts, std::move(recs));
        }
        if (vl1->parsed())
            return emit(opts, verify_lemma1(opts.n_min, opts.n_max, opts.jobs));
        if (vl2->parsed())
            return emit(opts, verify_lemma2(opts.n_min, opts.n_max,
                                            parse_v_grid(opts.v_grid, default_v_grid()),
                                            opts.jobs));
        if (vp->parsed())
            return emit(opts, verify_proof(opts.s_max,
                                           parse_v_grid(opts.v_grid,
                                                        default_scalar_v_grid()),
                                           opts.jobs));
        if (vs->parsed())
            return emit(opts, verify_scalars(opts.s_max,
                                             parse_v_grid(opts.v_grid,
                                                          default_scalar_v_grid()),
                                             static_cast<Prec>(opts.precision)));
        if (mc->parsed())
            return emit(opts, verify_mc(default_mc_triples(opts.seed), opts.samples,
                                        opts.jobs));
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
