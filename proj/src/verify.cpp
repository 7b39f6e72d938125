#include "chvatal/verify.hpp"

#include <stdexcept>

#include "chvatal/lemmas.hpp"
#include "chvatal/parallel.hpp"

namespace chvatal {

namespace {

// fan out one batch of records per index, then flatten in index order
template <class F>
std::vector<VerdictRecord> sharded(long begin, long end, int jobs, F&& per_index) {
    std::vector<std::vector<VerdictRecord>> batches(
        static_cast<std::size_t>(end - begin));
    parallel_for(begin, end, jobs,
                 [&](long i) { batches[i - begin] = per_index(i); });
    std::vector<VerdictRecord> out;
    for (auto& b : batches)
        out.insert(out.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
    return out;
}

void check_range(long n_min, long n_max) {
    if (n_min < 2 || n_max < n_min)
        throw std::invalid_argument("need 2 <= n_min <= n_max");
}

}  // namespace

std::vector<VerdictRecord> verify_theorem_exact(long n_min, long n_max, int jobs) {
    check_range(n_min, n_max);
    return sharded(n_min, n_max + 1, jobs, [](long n) {
        std::vector<VerdictRecord> recs;
        auto nums = q_numerators(n);
        auto v = theorem_check_from(n, nums);
        recs.push_back(make_record("theorem.i", n, Rational(v.argmin_m),
                                   Rational(v.argmin_m), Rational(v.target_m),
                                   v.minimizer_matches && v.unique_min));
        Int nn;
        mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(n));
        for (long m = 0; m < n; ++m) {
            bool ge = nums[m] >= nums[m + 1];
            recs.push_back(make_record(
                "theorem.ii", n, Rational(m), make_rational(nums[m], nn),
                make_rational(nums[m + 1], nn), ge == switch_predicate(n, m)));
        }
        return recs;
    });
}

std::vector<VerdictRecord> verify_theorem_certified(long n_min, long n_max, Prec prec,
                                                    int jobs) {
    check_range(n_min, n_max);
    return sharded(n_min, n_max + 1, jobs, [prec](long n) {
        std::vector<VerdictRecord> recs;
        auto cv = certified_theorem_check(n, prec);
        const auto& v = cv.verdict;
        recs.push_back(make_record("theorem.i", n, Rational(v.argmin_m),
                                   Rational(v.argmin_m), Rational(v.target_m),
                                   v.minimizer_matches && v.unique_min, "certified"));
        recs.push_back(make_record(
            "theorem.ii", n,
            v.first_violation_m ? std::optional<Rational>(Rational(*v.first_violation_m))
                                : std::nullopt,
            Rational(v.switch_iff_holds ? 0 : 1), Rational(0), v.switch_iff_holds,
            "certified"));
        recs.push_back(make_record(
            "certified.fallback", n, std::nullopt,
            Rational(static_cast<long>(cv.fallbacks)),
            Rational(static_cast<long>(cv.comparisons)), true, "certified"));
        return recs;
    });
}

std::vector<VerdictRecord> verify_lemma1(long n_min, long n_max, int jobs) {
    check_range(n_min, n_max);
    return sharded(n_min, n_max + 1, jobs, [](long n) {
        std::vector<VerdictRecord> recs;
        auto table = q_table(n);
        for (long m = 0; m <= n - 2; ++m) {
            auto c = lemma1_conditions(table, m);
            bool pass = c.all_agree() && c.direct == switch_predicate(n, m);
            recs.push_back(make_record("lemma1.equiv", n, Rational(m), c.main_lhs,
                                       c.main_rhs, pass));
        }
        return recs;
    });
}

std::vector<VerdictRecord> verify_lemma2(long n_min, long n_max,
                                         const std::vector<Rational>& v_grid, int jobs) {
    check_range(n_min, n_max);
    long lo = std::max(n_min, 4L);  // needs two integer points in [1, n-2]
    if (lo > n_max) return {};
    return sharded(lo, n_max + 1, jobs, [&v_grid](long n) {
        std::vector<VerdictRecord> recs;
        auto scan = lemma2_scan(n, v_grid);
        for (std::size_t i = 0; i + 1 < scan.h_values.size(); ++i) {
            const auto& [m, hm] = scan.h_values[i];
            const auto& [m1, hm1] = scan.h_values[i + 1];
            recs.push_back(make_record("lemma2.h", n, Rational(m), hm, hm1, hm > hm1));
        }
        for (const auto& g : scan.g_checks) {
            recs.push_back(make_record("lemma2.g", n, g.v, g_of(n, 1, g.v),
                                       g_of(n, n - 2, g.v), g.pass));
        }
        return recs;
    });
}

std::vector<VerdictRecord> verify_proof(long s_max, const std::vector<Rational>& v_grid,
                                        int jobs) {
    if (s_max < 3) throw std::invalid_argument("verify_proof: need s_max >= 3");
    auto recs = sharded(1, s_max + 1, jobs, [](long s) {
        std::vector<VerdictRecord> r;
        auto row = proof_step_row(s);
        r.push_back(make_record("eq8.first", s, std::nullopt, row.ineq8_first_v,
                                row.eq8_lower, row.eq8_first_ok));
        r.push_back(make_record("eq8.I", s, std::nullopt, row.I, Rational(1),
                                row.I_lt_1));
        if (s >= 3)
            r.push_back(make_record("bound.I", s, std::nullopt, row.I, *row.I_bnd,
                                    row.I_lt_bound));
        r.push_back(make_record("eq9", s, Rational(1), row.J1, Rational(1),
                                row.J1_ge_1));
        r.push_back(make_record("eq9", s, Rational(2), row.J2, Rational(1),
                                row.J2_ge_1));
        r.push_back(make_record("bound.J1", s, std::nullopt, row.J1, row.J1_bnd,
                                row.J1_ge_bound));
        r.push_back(make_record("mono.J", s, std::nullopt, row.J1, row.J2,
                                row.J1_le_J2));
        r.push_back(make_record("eq10", s, Rational(1), row.H1, Rational(1),
                                row.H1_lt_1));
        r.push_back(make_record("eq10", s, Rational(2), row.H2, Rational(1),
                                row.H2_lt_1));
        if (s >= 2)
            r.push_back(make_record("bound.H2", s, std::nullopt, row.H2, *row.H2_bnd,
                                    row.H2_lt_bound));
        r.push_back(make_record("mono.H", s, std::nullopt, row.H1, row.H2,
                                row.H1_le_H2));
        if (s >= 3) {
            auto n1 = i_bound_numerator1(s);
            auto n2 = i_bound_numerator2(s);
            r.push_back(make_record("sign.Inum1", s, std::nullopt, n1, Rational(0),
                                    n1 < 0));
            r.push_back(make_record("sign.Inum2", s, std::nullopt, n2, Rational(0),
                                    n2 < 0));
        }
        if (s >= 2) {
            auto hn = h2_bound_numerator(s);
            r.push_back(make_record("sign.H2num", s, std::nullopt, hn, Rational(0),
                                    hn < 0));
        }
        return r;
    });
    for (auto& c : truncation_sign_scan(s_max, v_grid)) {
        const char* id = c.variant == Truncation::Gamma ? "sign.gamma" : "sign.lambda";
        recs.push_back(make_record(id, c.s, c.v, c.value, Rational(0), c.negative));
    }
    return recs;
}

std::vector<VerdictRecord> verify_scalars(long s_max, const std::vector<Rational>& v_grid,
                                          Prec prec) {
    if (s_max < 2) throw std::invalid_argument("verify_scalars: need s_max >= 2");
    std::vector<VerdictRecord> recs;
    for (ScalarKind kind :
         {ScalarKind::Eq5, ScalarKind::Eq6, ScalarKind::Eq7, ScalarKind::RecipBound,
          ScalarKind::ExpBound, ScalarKind::Bernoulli, ScalarKind::PowerMonotone,
          ScalarKind::Ratio54, ScalarKind::Ratio65, ScalarKind::LogTailI,
          ScalarKind::LogTailH}) {
        auto rep = scalar_inequality_check(kind, 1, s_max, v_grid, prec);
        std::string id = std::string("scalar.") + to_string(kind);
        std::string mode = scalar_kind_uses_enclosure(kind) ? "enclosure" : "exact";
        for (const auto& p : rep.points) {
            recs.push_back(make_record(id, p.s.value_or(0), p.v, p.lhs, p.rhs,
                                       p.result == ScalarCheckPoint::Result::Pass,
                                       mode));
        }
    }
    return recs;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<McTriple> default_mc_triples(std::uint64_t base_seed) {
    // fixed (n, m) pairs: trivial edges, small exact cases, and target-m
    // minima at moderate n
    static constexpr std::pair<long, long> pairs[20] = {
        {2, 1},  {3, 0},  {3, 2},   {4, 2},   {4, 3},  {5, 3},  {6, 4},
        {7, 5},  {8, 5},  {10, 7},  {12, 8},  {15, 10}, {20, 13}, {25, 17},
        {30, 20}, {40, 27}, {50, 33}, {60, 40}, {80, 53}, {100, 67}};
    std::vector<McTriple> out;
    out.reserve(20);
    for (auto [n, m] : pairs) {
        std::uint64_t mix = splitmix64(
            base_seed ^ (static_cast<std::uint64_t>(n) << 32 |
                         static_cast<std::uint64_t>(m)));
        out.push_back({n, m, mix});
    }
    return out;
}

std::vector<VerdictRecord> verify_mc(const std::vector<McTriple>& triples,
                                     std::uint64_t samples, int jobs) {
    return sharded(0, static_cast<long>(triples.size()), jobs, [&](long i) {
        const auto& t = triples[static_cast<std::size_t>(i)];
        auto mc = mc_estimate(t.n, t.m, samples, t.seed);
        Rational exact = q_direct(t.n, t.m);
        // |phat - q| <= 4*sqrt(phat(1-phat)/N), compared by squaring
        Rational diff = mc.estimate_exact - exact;
        Rational var = mc.estimate_exact * (1 - mc.estimate_exact) /
                       Rational(static_cast<unsigned long>(samples));
        bool pass = diff * diff <= 16 * var;
        std::vector<VerdictRecord> recs;
        recs.push_back(make_record("mc.estimate", t.n, Rational(t.m),
                                   mc.estimate_exact, exact, pass));
        return recs;
    });
}

}  // namespace chvatal
