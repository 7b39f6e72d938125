#pragma once

#include <cstdint>
#include <vector>

#include "chvatal/enclosure.hpp"
#include "chvatal/proofsteps.hpp"
#include "chvatal/report.hpp"

namespace chvatal {

// Range drivers behind the CLI subcommands; each shards independent work
// items over `jobs` workers and returns an unsorted record batch.

std::vector<VerdictRecord> verify_theorem_exact(long n_min, long n_max, int jobs);
std::vector<VerdictRecord> verify_theorem_certified(long n_min, long n_max, Prec prec,
                                                    int jobs);

std::vector<VerdictRecord> verify_lemma1(long n_min, long n_max, int jobs);
std::vector<VerdictRecord> verify_lemma2(long n_min, long n_max,
                                         const std::vector<Rational>& v_grid, int jobs);

std::vector<VerdictRecord> verify_proof(long s_max, const std::vector<Rational>& v_grid,
                                        int jobs);
std::vector<VerdictRecord> verify_scalars(long s_max, const std::vector<Rational>& v_grid,
                                          Prec prec);

struct McTriple {
    long n = 0;
    long m = 0;
    std::uint64_t seed = 0;
};

// The fixed sanity suite: 20 (n, m) pairs; per-pair seeds are derived from
// the base seed with a splitmix64 step over (n, m).
std::vector<McTriple> default_mc_triples(std::uint64_t base_seed);

std::vector<VerdictRecord> verify_mc(const std::vector<McTriple>& triples,
                                     std::uint64_t samples, int jobs);

}  // namespace chvatal
