#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdro/distributions.hpp"
#include "sdro/linalg.hpp"

namespace sdro {

// Finite measure: atoms with nonnegative weights summing to 1.
struct DiscreteMeasure {
    std::vector<Vector> atoms;
    std::vector<double> weights;

    void validate() const; // throws on size mismatch or bad weight sum
    static DiscreteMeasure from_empirical(const EmpiricalDistribution& emp);
    static DiscreteMeasure from_clustered(const ClusteredDistribution& cl);
};

// Exact Wasserstein-p distance between discrete measures: the optimal value of
// the transportation LP over the m x n coupling polytope, solved with a
// successive-shortest-path min-cost-flow method, returned as the p-th root of
// the optimal cost.
double wasserstein_p(const DiscreteMeasure& p_measure, const DiscreteMeasure& q_measure,
                     double p, Norm norm = Norm::L2);

// W^K_{t,p} = W_p(empirical, clustered) with the l2 ground norm.
// `atom_budget`: above this many empirical atoms, W is computed on a seeded
// uniform subsample; `subsampled_n` (if given) receives the size actually used.
double clustering_distance_W(const EmpiricalDistribution& emp,
                             const ClusteredDistribution& clustered, double p,
                             std::size_t atom_budget = 5000, std::uint64_t subsample_seed = 0,
                             std::size_t* subsampled_n = nullptr);

// D^K_{t,p} = ((1/n) sum_k sum_{u in C_k} ||u - mean_k||_2^p)^(1/p).
// `assignments[i]` gives the cluster of atom i and must form a partition.
double clustering_value_D(const std::vector<int>& assignments, const EmpiricalDistribution& emp,
                          const ClusteredDistribution& clustered, double p);

// Phi^K_t = 1{J>=2} (1/n) sum_k sum_{u in C_k} max_j (-z^{jk})'(u - mean_k),
// with one coefficient vector per (piece j, cluster k); exactly 0 when J = 1.
double clustering_phi(const std::vector<int>& assignments, const EmpiricalDistribution& emp,
                      const ClusteredDistribution& clustered,
                      const std::vector<std::vector<Vector>>& dual_coeffs);

} // namespace sdro
