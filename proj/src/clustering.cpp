#include "sdro/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace sdro {

using nlohmann::json;

std::string cluster_algo_name(ClusterAlgo a) {
    switch (a) {
    case ClusterAlgo::SupCover: return "supcover";
    case ClusterAlgo::Reclustering: return "reclustering";
    case ClusterAlgo::OnlineClustering: return "onlineclustering";
    }
    return "reclustering";
}

ClusterAlgo cluster_algo_from_name(const std::string& s) {
    if (s == "supcover") return ClusterAlgo::SupCover;
    if (s == "reclustering") return ClusterAlgo::Reclustering;
    if (s == "onlineclustering") return ClusterAlgo::OnlineClustering;
    throw std::invalid_argument("unknown clustering algorithm: " + s);
}

void ClusteringConfig::validate() const {
    if (K < 1) throw std::invalid_argument("ClusteringConfig: K must be >= 1");
    if (algorithm == ClusterAlgo::OnlineClustering && Q < K)
        throw std::invalid_argument("ClusteringConfig: Q must be >= K");
    if (freeze_time == 0 || freeze_time < -1)
        throw std::invalid_argument("ClusteringConfig: freeze_time must be >= 1 or -1");
    if (kmeans_max_iters < 1) throw std::invalid_argument("ClusteringConfig: kmeans_max_iters");
    if (kmeans_tol < 0.0) throw std::invalid_argument("ClusteringConfig: kmeans_tol");
}

int nearest_center(const std::vector<Vector>& centers, const Vector& point) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < centers.size(); ++k) {
        const double d = (point - centers[k]).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(k);
        }
    }
    return best;
}

KCentersResult greedy_k_centers(const std::vector<Vector>& points, int K, std::uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("greedy_k_centers: empty input");
    if (K < 1) throw std::invalid_argument("greedy_k_centers: K must be >= 1");
    const std::size_t n = points.size();
    std::mt19937_64 rng(seed);
    const std::size_t first = static_cast<std::size_t>(rng() % n);

    KCentersResult result;
    result.centers.push_back(points[first]);
    std::vector<double> mind(n);
    for (std::size_t i = 0; i < n; ++i) mind[i] = (points[i] - points[first]).norm();

    while (static_cast<int>(result.centers.size()) < K) {
        std::size_t next = 0;
        double far = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mind[i] > far) {
                far = mind[i];
                next = i;
            }
        }
        if (far <= 0.0) break; // all points already coincide with a center
        result.centers.push_back(points[next]);
        for (std::size_t i = 0; i < n; ++i)
            mind[i] = std::min(mind[i], (points[i] - points[next]).norm());
    }
    result.eta = *std::max_element(mind.begin(), mind.end());
    return result;
}

KMeansResult kmeans(const std::vector<Vector>& points, int K,
                    const std::vector<Vector>* warm_start, const std::vector<double>* weights,
                    int max_iters, double tol, std::uint64_t seed) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("kmeans: empty input");
    if (weights) {
        if (weights->size() != n) throw std::invalid_argument("kmeans: weight size mismatch");
        for (double w : *weights)
            if (w < 0.0) throw std::invalid_argument("kmeans: negative weight");
    }
    KMeansResult res;
    int k_eff = K;
    if (static_cast<std::size_t>(k_eff) > n) {
        k_eff = static_cast<int>(n);
        res.reduced_k = true;
    }

    if (warm_start && warm_start->size() == static_cast<std::size_t>(k_eff)) {
        res.centers = *warm_start;
    } else {
        res.centers = greedy_k_centers(points, k_eff, seed).centers;
        while (static_cast<int>(res.centers.size()) < k_eff)
            res.centers.push_back(res.centers.back()); // duplicate-heavy input
    }

    auto wt = [&](std::size_t i) { return weights ? (*weights)[i] : 1.0; };
    res.assignments.assign(n, 0);

    for (int it = 1; it <= max_iters; ++it) {
        res.iterations = it;
        double obj = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            res.assignments[i] = nearest_center(res.centers, points[i]);
            obj += wt(i) * (points[i] - res.centers[res.assignments[i]]).squaredNorm();
        }
        res.objective_trace.push_back(obj);

        const int dim = static_cast<int>(points.front().size());
        std::vector<Vector> sums(k_eff, Vector::Zero(dim));
        std::vector<double> mass(k_eff, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            sums[res.assignments[i]] += wt(i) * points[i];
            mass[res.assignments[i]] += wt(i);
        }
        double shift = 0.0;
        std::vector<char> reseeded(n, 0);
        for (int k = 0; k < k_eff; ++k) {
            Vector updated;
            if (mass[k] > 0.0) {
                updated = sums[k] / mass[k];
            } else {
                // reseed the empty cluster at the farthest point from its center
                std::size_t far_i = 0;
                double far_d = -1.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (reseeded[i]) continue;
                    const double d = (points[i] - res.centers[res.assignments[i]]).norm();
                    if (d > far_d) {
                        far_d = d;
                        far_i = i;
                    }
                }
                reseeded[far_i] = 1;
                updated = points[far_i];
            }
            shift = std::max(shift, (updated - res.centers[k]).norm());
            res.centers[k] = updated;
        }
        if (shift < tol) break;
    }

    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        res.assignments[i] = nearest_center(res.centers, points[i]);
        obj += wt(i) * (points[i] - res.centers[res.assignments[i]]).squaredNorm();
    }
    res.objective = obj;
    res.objective_trace.push_back(obj);
    return res;
}

KCentersResult supcover_init(const BoxSupport& support, int K, std::uint64_t seed,
                             int sample_candidates) {
    const int d = static_cast<int>(support.lower.size());
    if (d == 0 || support.upper.size() != support.lower.size())
        throw std::invalid_argument("supcover_init: bad box");
    for (int i = 0; i < d; ++i) {
        if (!std::isfinite(support.lower[i]) || !std::isfinite(support.upper[i]))
            throw std::invalid_argument("supcover_init: support must be a bounded box");
        if (support.lower[i] > support.upper[i])
            throw std::invalid_argument("supcover_init: lower > upper");
    }
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return (rng() >> 11) * 0x1.0p-53; };

    std::vector<Vector> cand;
    if (d <= 12) {
        for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
            Vector c(d);
            for (int i = 0; i < d; ++i)
                c[i] = (mask >> i) & 1 ? support.upper[i] : support.lower[i];
            cand.push_back(std::move(c));
        }
    } else {
        for (int s = 0; s < 4096; ++s) {
            Vector c(d);
            for (int i = 0; i < d; ++i) c[i] = (rng() & 1) ? support.upper[i] : support.lower[i];
            cand.push_back(std::move(c));
        }
    }
    for (int s = 0; s < sample_candidates; ++s) {
        Vector c(d);
        for (int i = 0; i < d; ++i)
            c[i] = support.lower[i] + unit() * (support.upper[i] - support.lower[i]);
        cand.push_back(std::move(c));
    }

    KCentersResult result;
    Vector first(d);
    for (int i = 0; i < d; ++i)
        first[i] = support.lower[i] + unit() * (support.upper[i] - support.lower[i]);
    result.centers.push_back(first);

    std::vector<double> mind(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) mind[i] = (cand[i] - first).norm();
    while (static_cast<int>(result.centers.size()) < K) {
        std::size_t next = 0;
        double far = -1.0;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (mind[i] > far) {
                far = mind[i];
                next = i;
            }
        if (far <= 0.0) break;
        result.centers.push_back(cand[next]);
        for (std::size_t i = 0; i < cand.size(); ++i)
            mind[i] = std::min(mind[i], (cand[i] - cand[next]).norm());
    }
    result.eta = *std::max_element(mind.begin(), mind.end());
    return result;
}

// --- json helpers -------------------------------------------------------------

namespace {

json vec_to_json(const Vector& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Vector vec_from_json(const json& a) {
    Vector v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<int>(i)] = a[i].get<double>();
    return v;
}

json stat_to_json(const ClusterStat& s) {
    return json{{"mean", vec_to_json(s.mean)},
                {"count", s.count},
                {"center", vec_to_json(s.center)},
                {"sse", s.sse}};
}

ClusterStat stat_from_json(const json& j) {
    ClusterStat s;
    s.mean = vec_from_json(j.at("mean"));
    s.count = j.at("count").get<std::int64_t>();
    s.center = vec_from_json(j.at("center"));
    s.sse = j.at("sse").get<double>();
    return s;
}

json dist_to_json(const ClusteredDistribution& d) {
    json cs = json::array();
    for (const auto& c : d.clusters()) cs.push_back(stat_to_json(c));
    return json{{"clusters", cs}, {"total_count", d.total_count()}};
}

ClusteredDistribution dist_from_json(const json& j) {
    std::vector<ClusterStat> cs;
    for (const auto& cj : j.at("clusters")) cs.push_back(stat_from_json(cj));
    return ClusteredDistribution(std::move(cs), j.at("total_count").get<std::int64_t>());
}

json centers_to_json(const std::vector<Vector>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(vec_to_json(c));
    return a;
}

std::vector<Vector> centers_from_json(const json& a) {
    std::vector<Vector> cs;
    for (const auto& cj : a) cs.push_back(vec_from_json(cj));
    return cs;
}

} // namespace

// --- SupCover ------------------------------------------------------------------

SupCoverClustering::SupCoverClustering(const ClusteringConfig& config, BoxSupport support)
    : config_(config), support_(std::move(support)) {
    config_.validate();
}

void SupCoverClustering::initialize(const std::vector<Vector>& initial_points) {
    auto cover = supcover_init(support_, config_.K, config_.rng_seed);
    centers_ = std::move(cover.centers);
    eta_ = cover.eta;

    std::vector<ClusterStat> stats(centers_.size());
    for (std::size_t k = 0; k < centers_.size(); ++k) {
        stats[k].center = centers_[k];
        stats[k].mean = centers_[k]; // placeholder until the cluster gains points
    }
    dist_.reset(std::move(stats), 0);
    assignments_.clear();
    for (const auto& p : initial_points) {
        const int k = nearest_center(centers_, p);
        incorporate_point(dist_, p, k);
        if (config_.track_assignments) assignments_.push_back(k);
    }
}

void SupCoverClustering::step(const Vector& point, std::int64_t) {
    const int k = nearest_center(centers_, point);
    incorporate_point(dist_, point, k);
    if (config_.track_assignments) assignments_.push_back(k);
}

json SupCoverClustering::checkpoint() const {
    return json{{"algorithm", "supcover"},
                {"centers", centers_to_json(centers_)},
                {"eta", eta_},
                {"distribution", dist_to_json(dist_)},
                {"assignments", assignments_}};
}

void SupCoverClustering::restore(const json& j) {
    centers_ = centers_from_json(j.at("centers"));
    eta_ = j.at("eta").get<double>();
    dist_ = dist_from_json(j.at("distribution"));
    assignments_ = j.at("assignments").get<std::vector<int>>();
}

// --- Reclustering ----------------------------------------------------------------

ReclusteringClustering::ReclusteringClustering(const ClusteringConfig& config)
    : config_(config) {
    config_.validate();
}

void ReclusteringClustering::initialize(const std::vector<Vector>& initial_points) {
    if (initial_points.empty())
        throw std::invalid_argument("ReclusteringClustering: empty initial dataset");
    history_ = initial_points;
    frozen_ = false;
    recluster();
}

void ReclusteringClustering::recluster() {
    const int k_eff = std::min<std::int64_t>(config_.K, history_.size());
    const std::vector<Vector>* warm =
        centers_.size() == static_cast<std::size_t>(k_eff) ? &centers_ : nullptr;
    auto km = kmeans(history_, k_eff, warm, nullptr, config_.kmeans_max_iters,
                     config_.kmeans_tol, config_.rng_seed);
    centers_ = std::move(km.centers);
    assignments_ = std::move(km.assignments);
    rebuild_stats();
}

void ReclusteringClustering::rebuild_stats() {
    const int dim = static_cast<int>(history_.front().size());
    std::vector<ClusterStat> stats(centers_.size());
    for (std::size_t k = 0; k < centers_.size(); ++k) {
        stats[k].center = centers_[k];
        stats[k].mean = Vector::Zero(dim);
    }
    for (std::size_t i = 0; i < history_.size(); ++i) {
        auto& s = stats[assignments_[i]];
        s.count += 1;
        s.mean += history_[i];
    }
    for (auto& s : stats)
        if (s.count > 0) s.mean /= static_cast<double>(s.count);
    for (std::size_t i = 0; i < history_.size(); ++i) {
        auto& s = stats[assignments_[i]];
        s.sse += (history_[i] - s.mean).squaredNorm();
    }
    dist_.reset(std::move(stats), static_cast<std::int64_t>(history_.size()));
}

void ReclusteringClustering::step(const Vector& point, std::int64_t t) {
    history_.push_back(point);
    if (config_.freeze_time >= 0 && t >= config_.freeze_time) {
        frozen_ = true;
        const int k = nearest_center(centers_, point);
        incorporate_point(dist_, point, k);
        assignments_.push_back(k);
    } else {
        recluster();
    }
}

json ReclusteringClustering::checkpoint() const {
    json hist = json::array();
    for (const auto& p : history_) hist.push_back(vec_to_json(p));
    return json{{"algorithm", "reclustering"},
                {"history", hist},
                {"centers", centers_to_json(centers_)},
                {"assignments", assignments_},
                {"distribution", dist_to_json(dist_)},
                {"frozen", frozen_}};
}

void ReclusteringClustering::restore(const json& j) {
    history_.clear();
    for (const auto& pj : j.at("history")) history_.push_back(vec_from_json(pj));
    centers_ = centers_from_json(j.at("centers"));
    assignments_ = j.at("assignments").get<std::vector<int>>();
    dist_ = dist_from_json(j.at("distribution"));
    frozen_ = j.at("frozen").get<bool>();
}

// --- OnlineClustering -------------------------------------------------------------

OnlineClusteringAlgo::OnlineClusteringAlgo(const ClusteringConfig& config) : config_(config) {
    config_.validate();
}

int OnlineClusteringAlgo::uf_find(int i) const {
    while (uf_parent_[i] != i) i = uf_parent_[i];
    return i;
}

int OnlineClusteringAlgo::record_uf(int slot) {
    const int id = static_cast<int>(uf_parent_.size());
    uf_parent_.push_back(id);
    if (slot >= static_cast<int>(uf_slot_.size())) uf_slot_.resize(slot + 1, -1);
    return id;
}

double OnlineClusteringAlgo::singleton_rmse(int exclude_slot) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < micro_.size(); ++q) {
        if (static_cast<int>(q) == exclude_slot) continue;
        const double r = micro_[q].rmse();
        if (r > 0.0) best = std::min(best, r);
    }
    return std::isfinite(best) ? 2.0 * best : 0.0;
}

void OnlineClusteringAlgo::initialize(const std::vector<Vector>& initial_points) {
    if (initial_points.empty())
        throw std::invalid_argument("OnlineClusteringAlgo: empty initial dataset");
    micro_.clear();
    uf_parent_.clear();
    uf_slot_.clear();
    slot_uf_.clear();
    point_log_.clear();
    frozen_ = false;
    macro_dirty_ = false;
    macro_centers_.clear();

    auto kc = greedy_k_centers(initial_points, config_.Q, config_.rng_seed);
    const int dim = static_cast<int>(initial_points.front().size());
    micro_.resize(kc.centers.size());
    for (std::size_t q = 0; q < kc.centers.size(); ++q) {
        micro_[q].center = kc.centers[q];
        micro_[q].mean = Vector::Zero(dim);
    }
    std::vector<int> assign(initial_points.size());
    for (std::size_t i = 0; i < initial_points.size(); ++i) {
        assign[i] = nearest_center(kc.centers, initial_points[i]);
        auto& s = micro_[assign[i]];
        s.count += 1;
        s.mean += initial_points[i];
    }
    for (auto& s : micro_)
        if (s.count > 0) s.mean /= static_cast<double>(s.count);
    for (std::size_t i = 0; i < initial_points.size(); ++i) {
        auto& s = micro_[assign[i]];
        s.sse += (initial_points[i] - s.mean).squaredNorm();
    }
    for (std::size_t q = 0; q < micro_.size(); ++q) {
        if (micro_[q].count == 1) {
            const double r = singleton_rmse(static_cast<int>(q));
            micro_[q].sse = r * r;
        }
    }

    slot_uf_.resize(micro_.size());
    uf_slot_.assign(micro_.size(), -1);
    for (std::size_t q = 0; q < micro_.size(); ++q) {
        const int id = record_uf(static_cast<int>(q));
        slot_uf_[q] = id;
        uf_slot_[id] = static_cast<int>(q);
    }
    if (config_.track_assignments) {
        point_log_.reserve(initial_points.size());
        for (std::size_t i = 0; i < initial_points.size(); ++i)
            point_log_.push_back({slot_uf_[assign[i]], false});
    }
    total_count_ = static_cast<std::int64_t>(initial_points.size());
    rebuild_macro(false);
}

void OnlineClusteringAlgo::absorb(int slot, const Vector& point) {
    auto& s = micro_[slot];
    const Vector delta_old = point - s.mean;
    s.count += 1;
    s.mean += delta_old / static_cast<double>(s.count);
    s.sse += delta_old.dot(point - s.mean);
}

void OnlineClusteringAlgo::spawn(const Vector& point) {
    ClusterStat s;
    s.center = point;
    s.mean = point;
    s.count = 1;
    const double r = singleton_rmse(-1);
    s.sse = r * r;
    micro_.push_back(std::move(s));
    const int slot = static_cast<int>(micro_.size()) - 1;
    slot_uf_.push_back(-1);
    const int id = record_uf(slot);
    slot_uf_[slot] = id;
    uf_slot_[id] = slot;
}

void OnlineClusteringAlgo::merge_closest() {
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < micro_.size(); ++i)
        for (std::size_t j = i + 1; j < micro_.size(); ++j) {
            const double d = (micro_[i].center - micro_[j].center).norm();
            if (d < best) {
                best = d;
                bi = static_cast<int>(i);
                bj = static_cast<int>(j);
            }
        }
    auto& a = micro_[bi];
    auto& b = micro_[bj];
    const double na = static_cast<double>(a.count), nb = static_cast<double>(b.count);
    const Vector merged_mean = (na * a.mean + nb * b.mean) / (na + nb);
    a.center = (na * a.center + nb * b.center) / (na + nb);
    a.sse = a.sse + b.sse + na * (a.mean - merged_mean).squaredNorm() +
            nb * (b.mean - merged_mean).squaredNorm();
    a.mean = merged_mean;
    a.count += b.count;

    const int root_a = slot_uf_[bi], root_b = slot_uf_[bj];
    uf_parent_[root_b] = root_a;
    uf_slot_[root_b] = -1;
    micro_.erase(micro_.begin() + bj);
    slot_uf_.erase(slot_uf_.begin() + bj);
    for (std::size_t q = bj; q < micro_.size(); ++q) uf_slot_[slot_uf_[q]] = static_cast<int>(q);
}

void OnlineClusteringAlgo::propagate_macro_stats() {
    if (macro_centers_.empty()) return;
    const int dim = static_cast<int>(micro_.front().mean.size());
    std::vector<ClusterStat> stats(macro_centers_.size());
    for (std::size_t k = 0; k < stats.size(); ++k) {
        stats[k].center = macro_centers_[k];
        stats[k].mean = Vector::Zero(dim);
    }
    for (std::size_t q = 0; q < micro_.size(); ++q) {
        auto& s = stats[micro_to_macro_[q]];
        s.count += micro_[q].count;
        s.mean += static_cast<double>(micro_[q].count) * micro_[q].mean;
    }
    for (auto& s : stats)
        if (s.count > 0) s.mean /= static_cast<double>(s.count);
    for (std::size_t q = 0; q < micro_.size(); ++q) {
        auto& s = stats[micro_to_macro_[q]];
        s.sse += micro_[q].sse + static_cast<double>(micro_[q].count) *
                                     (micro_[q].mean - s.mean).squaredNorm();
    }
    macro_.reset(std::move(stats), total_count_);
}

void OnlineClusteringAlgo::rebuild_macro(bool warm) {
    std::vector<Vector> pts(micro_.size());
    std::vector<double> wts(micro_.size());
    for (std::size_t q = 0; q < micro_.size(); ++q) {
        pts[q] = micro_[q].center;
        wts[q] = static_cast<double>(micro_[q].count);
    }
    const int k_eff = std::min<int>(config_.K, static_cast<int>(micro_.size()));
    const std::vector<Vector>* ws =
        warm && macro_centers_.size() == static_cast<std::size_t>(k_eff) ? &macro_centers_
                                                                          : nullptr;
    auto km = kmeans(pts, k_eff, ws, &wts, config_.kmeans_max_iters, config_.kmeans_tol,
                     config_.rng_seed);
    macro_centers_ = std::move(km.centers);
    micro_to_macro_ = std::move(km.assignments);
    macro_dirty_ = false;
    propagate_macro_stats();
}

void OnlineClusteringAlgo::refresh() {
    if (!frozen_ && macro_dirty_) rebuild_macro(true);
}

void OnlineClusteringAlgo::step(const Vector& point, std::int64_t t) {
    total_count_ += 1;
    if (config_.freeze_time >= 0 && t >= config_.freeze_time) {
        if (!frozen_) {
            if (macro_dirty_) rebuild_macro(true);
            frozen_ = true;
        }
        const int k = nearest_center(macro_centers_, point);
        incorporate_point(macro_, point, k);
        if (config_.track_assignments) point_log_.push_back({k, true});
        return;
    }

    std::vector<Vector> mcenters(micro_.size());
    for (std::size_t q = 0; q < micro_.size(); ++q) mcenters[q] = micro_[q].center;
    const int q_own = nearest_center(mcenters, point);
    const double d = (point - micro_[q_own].center).norm();
    if (d <= 2.0 * micro_[q_own].rmse()) {
        absorb(q_own, point);
        if (config_.track_assignments) point_log_.push_back({slot_uf_[q_own], false});
    } else {
        spawn(point);
        if (config_.track_assignments) point_log_.push_back({slot_uf_.back(), false});
        if (static_cast<int>(micro_.size()) > config_.Q) merge_closest();
    }
    if (config_.defer_macro_refresh) {
        macro_dirty_ = true;
        propagate_macro_stats(); // keep weights/means consistent even when deferred
    } else {
        rebuild_macro(true);
    }
}

std::vector<Vector> OnlineClusteringAlgo::centers() const { return macro_centers_; }

int OnlineClusteringAlgo::resolve_macro_of_uf(int uf_id) const {
    const int slot = uf_slot_[uf_find(uf_id)];
    return micro_to_macro_[slot];
}

std::vector<int> OnlineClusteringAlgo::assignments() const {
    if (!config_.track_assignments)
        throw std::logic_error("OnlineClusteringAlgo: assignment tracking disabled");
    std::vector<int> out(point_log_.size());
    for (std::size_t i = 0; i < point_log_.size(); ++i)
        out[i] = point_log_[i].frozen_macro ? point_log_[i].id
                                            : resolve_macro_of_uf(point_log_[i].id);
    return out;
}

json OnlineClusteringAlgo::checkpoint() const {
    json micro = json::array();
    for (const auto& s : micro_) micro.push_back(stat_to_json(s));
    json log = json::array();
    for (const auto& r : point_log_) log.push_back(json{{"id", r.id}, {"f", r.frozen_macro}});
    return json{{"algorithm", "onlineclustering"},
                {"micro", micro},
                {"micro_to_macro", micro_to_macro_},
                {"macro_centers", centers_to_json(macro_centers_)},
                {"macro", dist_to_json(macro_)},
                {"total_count", total_count_},
                {"frozen", frozen_},
                {"macro_dirty", macro_dirty_},
                {"uf_parent", uf_parent_},
                {"uf_slot", uf_slot_},
                {"slot_uf", slot_uf_},
                {"point_log", log}};
}

void OnlineClusteringAlgo::restore(const json& j) {
    micro_.clear();
    for (const auto& sj : j.at("micro")) micro_.push_back(stat_from_json(sj));
    micro_to_macro_ = j.at("micro_to_macro").get<std::vector<int>>();
    macro_centers_ = centers_from_json(j.at("macro_centers"));
    macro_ = dist_from_json(j.at("macro"));
    total_count_ = j.at("total_count").get<std::int64_t>();
    frozen_ = j.at("frozen").get<bool>();
    macro_dirty_ = j.at("macro_dirty").get<bool>();
    uf_parent_ = j.at("uf_parent").get<std::vector<int>>();
    uf_slot_ = j.at("uf_slot").get<std::vector<int>>();
    slot_uf_ = j.at("slot_uf").get<std::vector<int>>();
    point_log_.clear();
    for (const auto& rj : j.at("point_log"))
        point_log_.push_back({rj.at("id").get<std::int32_t>(), rj.at("f").get<bool>()});
}

std::unique_ptr<ClusteringAlgorithm> make_clustering(const ClusteringConfig& config,
                                                     std::optional<BoxSupport> support) {
    switch (config.algorithm) {
    case ClusterAlgo::SupCover:
        if (!support)
            throw std::invalid_argument("SupCover requires a bounded box support");
        return std::make_unique<SupCoverClustering>(config, *support);
    case ClusterAlgo::Reclustering:
        return std::make_unique<ReclusteringClustering>(config);
    case ClusterAlgo::OnlineClustering:
        return std::make_unique<OnlineClusteringAlgo>(config);
    }
    throw std::logic_error("make_clustering: unreachable");
}

} // namespace sdro
