// End-to-end acceptance suite: one printed pass/fail line per criterion.
// Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chvatal/lemmas.hpp"
#include "chvatal/parallel.hpp"
#include "chvatal/verify.hpp"

using namespace chvatal;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(CHVATAL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// criterion 1: minimizer location and switch pattern, exactly, for all
// n in [2, 500], via the CLI
void c1_theorem_exact() {
    int rc = run_cli("verify-theorem --n-min 2 --n-max 500 --mode exact --jobs " +
                     std::to_string(default_jobs()));
    report("theorem holds exactly for n in [2,500]", rc == 0,
           "cli exit " + std::to_string(rc));
}

// criterion 2: the direct sum and the order-statistic integral agree for
// every (n, m) with n <= 100
void c2_route_equivalence() {
    bool ok = true;
    std::string detail;
    for (long n = 2; n <= 100 && ok; ++n)
        for (long m = 0; m <= n - 1; ++m)
            if (q_direct(n, m) != q_integral(n, m)) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
                break;
            }
    report("sum and integral routes agree for n <= 100", ok, detail);
}

// criterion 3: the four decrease characterizations agree, and match the
// switch predicate, for every (n, m) with n <= 200
void c3_lemma1() {
    std::vector<char> bad(201, 0);
    parallel_for(2, 201, default_jobs(), [&](long n) {
        auto table = q_table(n);
        for (long m = 0; m <= n - 2; ++m) {
            auto c = lemma1_conditions(table, m);
            if (!c.all_agree() || c.direct != switch_predicate(n, m)) bad[n] = 1;
        }
    });
    long first = 0;
    for (long n = 2; n <= 200; ++n)
        if (bad[n] && !first) first = n;
    report("four-way decrease equivalence holds for n <= 200", first == 0,
           first ? "fails at n=" + std::to_string(first) : "");
}

// criterion 4: h decreases strictly and g_v decreases on the grid for
// every n <= 200
void c4_lemma2() {
    std::vector<char> bad(201, 0);
    parallel_for(4, 201, default_jobs(), [&](long n) {
        auto s = lemma2_scan(n);
        if (!s.strictly_decreasing || !s.g_all_decreasing) bad[n] = 1;
    });
    long first = 0;
    for (long n = 4; n <= 200; ++n)
        if (bad[n] && !first) first = n;
    report("integrated and pointwise monotonicity hold for n <= 200", first == 0,
           first ? "fails at n=" + std::to_string(first) : "");
}

// criterion 5: every displayed integral comparison holds for s <= 200, and
// the fixed spot values match
void c5_proof_scan() {
    bool spot = I_of(2) == make_rational(5997, 6250) &&
                J_of(1, 1) == make_rational(109, 108) &&
                H_of(1, 1) == make_rational(175, 256);
    std::vector<char> bad(201, 0);
    parallel_for(1, 201, default_jobs(), [&](long s) {
        if (!proof_step_row(s).all_ok()) bad[s] = 1;
    });
    long first = 0;
    for (long s = 1; s <= 200; ++s)
        if (bad[s] && !first) first = s;
    report("case-split integral chain holds for s <= 200", spot && first == 0,
           !spot ? "spot value mismatch"
                 : (first ? "fails at s=" + std::to_string(first) : ""));
}

// criterion 6: the stated sign claims hold for s <= 200
void c6_signs() {
    bool ok = true;
    std::string detail;
    for (const auto& c : truncation_sign_scan(200, default_scalar_v_grid()))
        if (!c.negative) {
            ok = false;
            detail = "truncation not negative at s=" + std::to_string(c.s);
            break;
        }
    for (long s = 3; ok && s <= 200; ++s)
        if (i_bound_numerator1(s) >= 0 || i_bound_numerator2(s) >= 0) {
            ok = false;
            detail = "I-bound numerator sign at s=" + std::to_string(s);
        }
    for (long s = 2; ok && s <= 200; ++s)
        if (h2_bound_numerator(s) >= 0) {
            ok = false;
            detail = "H2-bound numerator sign at s=" + std::to_string(s);
        }
    report("all sign claims hold for s <= 200", ok, detail);
}

// criterion 7: every scalar side inequality passes at 128-bit precision for
// s <= 50 with no inconclusive points, and a 256-bit re-run changes nothing
void c7_scalars() {
    bool ok = true;
    std::string detail;
    auto grid = default_scalar_v_grid();
    for (ScalarKind k :
         {ScalarKind::Eq5, ScalarKind::Eq6, ScalarKind::Eq7, ScalarKind::RecipBound,
          ScalarKind::ExpBound, ScalarKind::Bernoulli, ScalarKind::PowerMonotone,
          ScalarKind::Ratio54, ScalarKind::Ratio65, ScalarKind::LogTailI,
          ScalarKind::LogTailH}) {
        auto lo = scalar_inequality_check(k, 1, 50, grid, 128);
        if (!lo.all_pass || lo.any_inconclusive) {
            ok = false;
            detail = std::string("undecided or failing points in ") + to_string(k);
            break;
        }
        auto hi = scalar_inequality_check(k, 1, 50, grid, 256);
        if (hi.points.size() != lo.points.size()) {
            ok = false;
            detail = std::string("point count changed for ") + to_string(k);
            break;
        }
        for (std::size_t i = 0; i < lo.points.size(); ++i)
            if (lo.points[i].result != hi.points[i].result) {
                ok = false;
                detail = std::string("verdict changed under refinement in ") +
                         to_string(k);
            }
    }
    report("scalar inequalities decided at 128 bits, stable at 256", ok, detail);
}

// criterion 8: certified interval verdicts equal the exact ones for
// n <= 500, enclosures contain the exact values for n <= 100 at several
// precisions, the certified route covers n <= 3000 via the CLI, and the
// benchmark shows it beating the exact route there
void c8_certified() {
    bool ok = true;
    std::string detail;

    std::vector<char> bad(501, 0);
    parallel_for(2, 501, default_jobs(), [&](long n) {
        auto e = theorem_check(n);
        auto c = certified_theorem_check(n, 53).verdict;
        if (c.argmin_m != e.argmin_m || c.unique_min != e.unique_min ||
            c.minimizer_matches != e.minimizer_matches ||
            c.switch_iff_holds != e.switch_iff_holds)
            bad[n] = 1;
    });
    for (long n = 2; n <= 500 && ok; ++n)
        if (bad[n]) {
            ok = false;
            detail = "certified/exact verdict mismatch at n=" + std::to_string(n);
        }

    if (ok) {
        std::vector<char> miss(101, 0);
        parallel_for(2, 101, default_jobs(), [&](long n) {
            for (Prec prec : {24, 53, 128})
                for (long m = 0; m <= n; ++m)
                    if (!certified_q(n, m, prec).contains(q_direct(n, m))) miss[n] = 1;
        });
        for (long n = 2; n <= 100 && ok; ++n)
            if (miss[n]) {
                ok = false;
                detail = "containment failure at n=" + std::to_string(n);
            }
    }

    if (ok) {
        int rc = run_cli("verify-theorem --n-min 2 --n-max 3000 --mode certified "
                         "--precision 53 --jobs " + std::to_string(default_jobs()));
        if (rc != 0) {
            ok = false;
            detail = "certified cli run exit " + std::to_string(rc);
        }
    }

    if (ok) {
        int rc = run_cli("bench --n-min 1000 --n-max 3000 --precision 53");
        if (rc != 0) {
            ok = false;
            detail = "bench exit " + std::to_string(rc);
        }
    }

    report("certified route matches, contains, scales, and wins", ok, detail);
}

// criterion 9: all 20 Monte Carlo estimates fall within four standard
// errors of the exact values
void c9_mc() {
    auto recs = verify_mc(default_mc_triples(1), 100000, default_jobs());
    bool ok = recs.size() == 20;
    std::string detail = ok ? "" : "unexpected record count";
    for (const auto& r : recs)
        if (!r.pass) {
            ok = false;
            detail = "estimate outside 4 sigma at n=" + std::to_string(r.n);
        }
    report("Monte Carlo suite agrees within four standard errors", ok, detail);
}

// criterion 10: reports are byte-identical regardless of worker count
void c10_determinism() {
    bool ok = true;
    std::string detail;
    struct Run {
        const char* sub;
        const char* extra;
    };
    for (const Run& run : {Run{"verify-theorem", "--n-min 2 --n-max 80 --mode both"},
                           Run{"verify-proof", "--s-max 25"}}) {
        std::string a = std::string("acc_det_a.json");
        std::string b = std::string("acc_det_b.json");
        int ra = run_cli(std::string(run.sub) + " " + run.extra + " --jobs 1 --out " + a);
        int rb = run_cli(std::string(run.sub) + " " + run.extra + " --jobs 4 --out " + b);
        if (ra != 0 || rb != 0) {
            ok = false;
            detail = std::string(run.sub) + " exit codes " + std::to_string(ra) + "/" +
                     std::to_string(rb);
            break;
        }
        std::string ca = slurp(a), cb = slurp(b);
        if (ca.empty() || ca != cb) {
            ok = false;
            detail = std::string(run.sub) + " reports differ across --jobs";
            break;
        }
        std::remove(a.c_str());
        std::remove(b.c_str());
    }
    report("reports are byte-identical across worker counts", ok, detail);
}

}  // namespace

int main() {
    c1_theorem_exact();
    c2_route_equivalence();
    c3_lemma1();
    c4_lemma2();
    c5_proof_scan();
    c6_signs();
    c7_scalars();
    c8_certified();
    c9_mc();
    c10_determinism();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
