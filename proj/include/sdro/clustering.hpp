#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "sdro/distributions.hpp"
#include "sdro/linalg.hpp"

namespace sdro {

enum class ClusterAlgo { SupCover, Reclustering, OnlineClustering };

std::string cluster_algo_name(ClusterAlgo a);
ClusterAlgo cluster_algo_from_name(const std::string& s);

struct ClusteringConfig {
    ClusterAlgo algorithm = ClusterAlgo::Reclustering;
    int K = 10;
    int Q = 40;                     // microcluster budget (OnlineClustering only)
    std::int64_t freeze_time = -1;  // tau; -1 means never freeze
    int kmeans_max_iters = 100;
    double kmeans_tol = 1e-9;
    std::uint64_t rng_seed = 0;
    bool defer_macro_refresh = false; // refresh macro k-means only at refresh()
    bool track_assignments = true;    // keep per-point cluster ids for diagnostics

    void validate() const;
};

// Axis-aligned box, the only support shape SupCover accepts.
struct BoxSupport {
    Vector lower;
    Vector upper;
};

// Gonzalez farthest-point traversal. Returns at most K centers (each a selected
// input point; the first drawn uniformly by the seeded RNG) and the covering
// radius eta = max_i dist(point_i, nearest center). 2-approximation of the
// optimal k-centers radius.
struct KCentersResult {
    std::vector<Vector> centers;
    double eta = 0.0;
};
KCentersResult greedy_k_centers(const std::vector<Vector>& points, int K, std::uint64_t seed);

struct KMeansResult {
    std::vector<Vector> centers;
    std::vector<int> assignments;
    double objective = 0.0;               // weighted sum of squared l2 distances
    int iterations = 0;
    std::vector<double> objective_trace;  // objective after each Lloyd iteration
    bool reduced_k = false;               // K was larger than the point count
};

// Lloyd iteration under squared l2 cost. Nearest-center ties break to the
// lowest index; empty clusters are reseeded at the point farthest from its
// assigned center. Stops when the max center shift drops below `tol`.
KMeansResult kmeans(const std::vector<Vector>& points, int K,
                    const std::vector<Vector>* warm_start = nullptr,
                    const std::vector<double>* weights = nullptr, int max_iters = 100,
                    double tol = 1e-9, std::uint64_t seed = 0);

// Greedy ball cover of a box support: centers stay fixed afterwards and
// assignment is pure nearest-center. The covering radius is evaluated on the
// box corners plus a seeded uniform sample, so it can slightly under-report
// between candidates.
KCentersResult supcover_init(const BoxSupport& support, int K, std::uint64_t seed,
                             int sample_candidates = 4096);

int nearest_center(const std::vector<Vector>& centers, const Vector& point);

// Common interface for the online clustering state machines. Time convention:
// initialize() consumes the initial dataset at t = 0 and step() is called once
// per arriving point with t = 1, 2, ...
class ClusteringAlgorithm {
public:
    virtual ~ClusteringAlgorithm() = default;

    virtual void initialize(const std::vector<Vector>& initial_points) = 0;
    virtual void step(const Vector& point, std::int64_t t) = 0;

    // Re-runs any deferred macro-level clustering; call before a solve.
    virtual void refresh() {}

    virtual const ClusteredDistribution& distribution() const = 0;
    virtual std::vector<Vector> centers() const = 0;

    // Cluster index of every point ingested so far (requires track_assignments).
    virtual std::vector<int> assignments() const = 0;

    // Raw datapoints currently held by the state (memory contract).
    virtual std::size_t retained_points() const = 0;

    virtual nlohmann::json checkpoint() const = 0;
    virtual void restore(const nlohmann::json& j) = 0;
};

std::unique_ptr<ClusteringAlgorithm> make_clustering(const ClusteringConfig& config,
                                                     std::optional<BoxSupport> support = {});

// --- concrete state machines -------------------------------------------------

class SupCoverClustering final : public ClusteringAlgorithm {
public:
    SupCoverClustering(const ClusteringConfig& config, BoxSupport support);

    void initialize(const std::vector<Vector>& initial_points) override;
    void step(const Vector& point, std::int64_t t) override;
    const ClusteredDistribution& distribution() const override { return dist_; }
    std::vector<Vector> centers() const override { return centers_; }
    std::vector<int> assignments() const override { return assignments_; }
    std::size_t retained_points() const override { return 0; }
    nlohmann::json checkpoint() const override;
    void restore(const nlohmann::json& j) override;

    double eta() const { return eta_; }

private:
    ClusteringConfig config_;
    BoxSupport support_;
    std::vector<Vector> centers_;
    double eta_ = 0.0;
    ClusteredDistribution dist_;
    std::vector<int> assignments_;
};

class ReclusteringClustering final : public ClusteringAlgorithm {
public:
    explicit ReclusteringClustering(const ClusteringConfig& config);

    void initialize(const std::vector<Vector>& initial_points) override;
    void step(const Vector& point, std::int64_t t) override;
    const ClusteredDistribution& distribution() const override { return dist_; }
    std::vector<Vector> centers() const override { return centers_; }
    std::vector<int> assignments() const override { return assignments_; }
    std::size_t retained_points() const override { return history_.size(); }
    nlohmann::json checkpoint() const override;
    void restore(const nlohmann::json& j) override;

    bool frozen() const { return frozen_; }

private:
    void recluster();
    void rebuild_stats();

    ClusteringConfig config_;
    std::vector<Vector> history_;
    std::vector<Vector> centers_;
    std::vector<int> assignments_;
    ClusteredDistribution dist_;
    bool frozen_ = false;
};

// Two-layer micro/macro scheme. Micro clusters absorb arriving points when
// they land within twice the owning cluster's rmse, otherwise spawn a new
// micro cluster; overflow beyond Q merges the two closest micros. The K macro
// clusters are a warm-started weighted k-means over the micro centers.
class OnlineClusteringAlgo final : public ClusteringAlgorithm {
public:
    explicit OnlineClusteringAlgo(const ClusteringConfig& config);

    void initialize(const std::vector<Vector>& initial_points) override;
    void step(const Vector& point, std::int64_t t) override;
    void refresh() override;
    const ClusteredDistribution& distribution() const override { return macro_; }
    std::vector<Vector> centers() const override;
    std::vector<int> assignments() const override;
    std::size_t retained_points() const override { return 0; }
    nlohmann::json checkpoint() const override;
    void restore(const nlohmann::json& j) override;

    const std::vector<ClusterStat>& micro() const { return micro_; }
    const std::vector<int>& macro_assignment() const { return micro_to_macro_; }

private:
    double singleton_rmse(int exclude_slot) const;
    void absorb(int slot, const Vector& point);
    void spawn(const Vector& point);
    void merge_closest();
    void propagate_macro_stats();
    void rebuild_macro(bool warm);
    int record_uf(int slot); // new uf id for a point landing in `slot`
    int resolve_macro_of_uf(int uf_id) const;

    ClusteringConfig config_;
    std::vector<ClusterStat> micro_;
    std::vector<int> micro_to_macro_;
    std::vector<Vector> macro_centers_;
    ClusteredDistribution macro_;
    std::int64_t total_count_ = 0;
    bool frozen_ = false;
    bool macro_dirty_ = false;

    // merge-forwarding for per-point diagnostics
    std::vector<int> uf_parent_;          // forest over micro creation ids
    std::vector<int> uf_slot_;            // root id -> live micro slot
    std::vector<int> slot_uf_;            // live micro slot -> root id
    struct PointRecord { std::int32_t id; bool frozen_macro; };
    std::vector<PointRecord> point_log_;
    int uf_find(int i) const;
};

} // namespace sdro
