#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "levymd/cumulants.hpp"
#include "levymd/random.hpp"
#include "levymd/subordinators.hpp"

namespace levymd {

// ==== configurations =========================================================
//
// Condition 1: X_i(t) = S_i(c_i L_i(t) + c_0 L_0(t)), i = 1..h, where L_0 is a
// shared inverse stable clock of index nu_0 and L_i are component clocks of
// index nu_i, all independent.  c and nus store the shared entry at index 0.
//
// Condition 2: X_i(t) = S_i(sum_j c_ij L_j(t)) with k shared clocks of a
// single index nu and a strictly positive h x k weight matrix.

struct Condition1Config {
    std::vector<CumulantModel> components;
    std::vector<double> c;    // size h+1; c[0] multiplies the shared clock
    std::vector<double> nus;  // size h+1; nus[0] is the shared clock index

    [[nodiscard]] std::size_t dim() const { return components.size(); }
    void validate() const;  // throws std::invalid_argument on any violation
};

struct Condition2Config {
    std::vector<CumulantModel> components;
    std::vector<std::vector<double>> weights;  // h rows of k positive entries
    double nu;

    [[nodiscard]] std::size_t dim() const { return components.size(); }
    [[nodiscard]] std::size_t clock_count() const {
        return weights.empty() ? 0 : weights.front().size();
    }
    void validate() const;
};

// ==== sampling ===============================================================
//
// Clock draws always precede component draws, in index order; the split API
// exists so tests can pin the clocks and observe the coupling directly.

[[nodiscard]] std::vector<double> draw_clocks_cond1(const Condition1Config& cfg, double t,
                                                    RandomStream& rng);  // [L_0, L_1..L_h]
[[nodiscard]] std::vector<double> sample_cond1_given_clocks(const Condition1Config& cfg,
                                                            std::span<const double> clocks,
                                                            RandomStream& rng);
[[nodiscard]] std::vector<double> sample_cond1(const Condition1Config& cfg, double t,
                                               RandomStream& rng);

[[nodiscard]] std::vector<double> draw_clocks_cond2(const Condition2Config& cfg, double t,
                                                    RandomStream& rng);  // [L_1..L_k]
[[nodiscard]] std::vector<double> sample_cond2_given_clocks(const Condition2Config& cfg,
                                                            std::span<const double> clocks,
                                                            RandomStream& rng);
[[nodiscard]] std::vector<double> sample_cond2(const Condition2Config& cfg, double t,
                                               RandomStream& rng);

}  // namespace levymd
