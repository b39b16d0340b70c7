#pragma once

#include <cstdint>
#include <string>

#include "macdual/duality.hpp"

namespace macdual {

struct ArtinianReport {
    bool artinian = false;
    int cap_used = 0;
    std::vector<int> hf;    // Hilbert function, indices 0..socdeg
    int nilpotency = -1;    // least N with M^N contained in the ideal
    int socdeg = -1;        // N - 1
    int dim_K = 0;          // total dimension = sum of hf
    int type = 0;           // minimal generator count of the dual module
    std::vector<int> dual_gen_degrees;  // ascending
    bool level = false;     // all dual generator degrees equal socdeg
};

// Exact Hilbert function of R/J from window ranks; the least N <= cap with a
// vanishing Hilbert value certifies M^N inside J (the window argument absorbs
// products beyond the cap).  Throws "not Artinian within cap" if none.
ArtinianReport artinian_report(const Ideal& J, int cap);
// Same, but reports artinian=false instead of throwing.
ArtinianReport try_artinian_report(const Ideal& J, int cap);

// I + (z_1^{n_1}, ..., z_d^{n_d}); the z must be independent linear forms.
Ideal quotient_by_powers(const Ideal& I, const std::vector<Polynomial>& z,
                         const std::vector<int>& n);

struct LevelReport {
    int dimension = 0;  // d, user-asserted
    std::uint64_t seed = 0;
    int trials = 0;
    int stability = 0;                  // trials agreeing with the first
    std::vector<Polynomial> reduction;  // forms used by the reported trial
    ArtinianReport artinian;
    int multiplicity = 0;  // dim_K of the Artinian reduction
    int s = -1;            // socle degree of the reduction
    bool level = false;
    std::vector<std::string> disagreements;  // reported, never resolved
};

// Cuts by d linear forms with random integer coefficients in
// [-coeff_bound, coeff_bound] drawn from a seeded generator (trial t uses
// seed+t), retrying a non-Artinian draw up to a fixed budget, then reports
// the Artinian quotient and the agreement count across trials.  An explicit
// reduction skips sampling and runs once.  cap < 0 selects the default
// 2*(nvars + max generator degree).
LevelReport is_level(const Ideal& I, int d, std::uint64_t seed, int trials,
                     const std::vector<Polynomial>* explicit_reduction = nullptr,
                     int cap = -1, int coeff_bound = 100);

struct PowerCheck {
    std::vector<int> n;
    int expected = 0;  // socle degree or type, per the check run
    ArtinianReport report;
    bool pass = false;
};

// For each n: quotient by z_i^{n_i} must have socle degree s + |n| - d.
std::vector<PowerCheck> socdeg_power_check(const Ideal& I,
                                           const std::vector<Polynomial>& z,
                                           int s,
                                           const std::vector<std::vector<int>>& ns,
                                           int cap = -1);

// For each n: the quotient must be level of the same type as the n = 1_d one.
std::vector<PowerCheck> level_power_check(const Ideal& I,
                                          const std::vector<Polynomial>& z,
                                          const std::vector<std::vector<int>>& ns,
                                          int cap = -1);

}  // namespace macdual
