#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdro/linalg.hpp"

namespace sdro {

// Raw stream history: atoms with uniform weights 1/n.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<Vector> atoms);

    void add(const Vector& point);

    const std::vector<Vector>& atoms() const { return atoms_; }
    const Vector& atom(std::size_t i) const { return atoms_[i]; }
    std::int64_t count() const { return static_cast<std::int64_t>(atoms_.size()); }
    bool empty() const { return atoms_.empty(); }
    int dim() const { return atoms_.empty() ? 0 : static_cast<int>(atoms_.front().size()); }

private:
    std::vector<Vector> atoms_; // append-only; discard policy lives in the stream engine
};

Vector empirical_mean(const EmpiricalDistribution& dist);

// Per-cluster statistics. The mean is a running average and the count is exact;
// the weight is always derived as count / total on read. `sse` is the sum of
// squared deviations from the mean, so rmse() stays consistent under merges.
struct ClusterStat {
    Vector mean;
    std::int64_t count = 0;
    Vector center;
    double sse = 0.0;

    double rmse() const;
};

// The compressed measure: K weighted cluster means.
class ClusteredDistribution {
public:
    ClusteredDistribution() = default;
    ClusteredDistribution(std::vector<ClusterStat> clusters, std::int64_t total_count);

    const std::vector<ClusterStat>& clusters() const { return clusters_; }
    ClusterStat& cluster(std::size_t k) { return clusters_[k]; }
    const ClusterStat& cluster(std::size_t k) const { return clusters_[k]; }
    int size() const { return static_cast<int>(clusters_.size()); }
    std::int64_t total_count() const { return total_count_; }
    int dim() const { return clusters_.empty() ? 0 : static_cast<int>(clusters_.front().mean.size()); }

    double weight(std::size_t k) const;
    std::vector<double> weights() const;
    Vector weighted_mean() const;

    // Rebuild from scratch (used by reclustering before the freeze time).
    void reset(std::vector<ClusterStat> clusters, std::int64_t total_count);

    friend void incorporate_point(ClusteredDistribution& dist, const Vector& point,
                                  int cluster_index);

private:
    std::vector<ClusterStat> clusters_;
    std::int64_t total_count_ = 0;
};

// Assigns `point` to the given cluster: count +1, mean updated as a running
// average, sse updated exactly (Welford); weights of all clusters shift
// implicitly through the new total count.
void incorporate_point(ClusteredDistribution& dist, const Vector& point, int cluster_index);

// CSV ingestion: one datapoint per row, d numeric columns, optional header.
// Dimension is inferred from the first data row.
EmpiricalDistribution load_csv(const std::string& path);
EmpiricalDistribution read_csv(std::istream& in);

} // namespace sdro
