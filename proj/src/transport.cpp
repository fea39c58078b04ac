#include "sdro/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace sdro {

void DiscreteMeasure::validate() const {
    if (atoms.size() != weights.size())
        throw std::invalid_argument("DiscreteMeasure: atom/weight size mismatch");
    if (atoms.empty()) throw std::invalid_argument("DiscreteMeasure: empty measure");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -1e-15) throw std::invalid_argument("DiscreteMeasure: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("DiscreteMeasure: weights sum to " + std::to_string(sum));
    for (const auto& a : atoms)
        if (a.size() != atoms.front().size())
            throw std::invalid_argument("DiscreteMeasure: mixed atom dimensions");
}

DiscreteMeasure DiscreteMeasure::from_empirical(const EmpiricalDistribution& emp) {
    DiscreteMeasure m;
    m.atoms = emp.atoms();
    m.weights.assign(emp.atoms().size(), 1.0 / static_cast<double>(emp.count()));
    return m;
}

DiscreteMeasure DiscreteMeasure::from_clustered(const ClusteredDistribution& cl) {
    DiscreteMeasure m;
    m.atoms.reserve(cl.size());
    for (const auto& c : cl.clusters()) m.atoms.push_back(c.mean);
    m.weights = cl.weights();
    return m;
}

namespace {

using int128 = __int128;

// Weights are mapped to integer supplies on a fixed power-of-two scale, so the
// flow arithmetic below is exact and augmentations terminate.
constexpr long double kScale = 75557863725914323419136.0L; // 2^76

int128 to_units(double w) {
    long double v = static_cast<long double>(w) * kScale;
    return static_cast<int128>(v + 0.5L);
}

struct PathArc {
    int prev_node; // node we came from
    bool forward;  // true: source->sink arc, false: sink->source
};

// Exact min-cost transportation: supplies s (m sources), demands d (n sinks),
// cost(i,j) given densely. Successive shortest paths with Johnson potentials;
// complementary slackness keeps all residual reduced costs nonnegative.
double min_cost_transport(const std::vector<int128>& supply_in,
                          const std::vector<int128>& demand_in, const Matrix& cost) {
    const int m = static_cast<int>(supply_in.size());
    const int n = static_cast<int>(demand_in.size());
    std::vector<int128> rs = supply_in, rd = demand_in;

    // flow stored per (source, sink); support lists per sink for residual arcs
    std::vector<std::vector<int128>> flow(m, std::vector<int128>(n, 0));
    std::vector<std::vector<int>> sink_support(n);

    std::vector<double> pot_src(m, 0.0), pot_snk(n);
    for (int j = 0; j < n; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) best = std::min(best, cost(i, j));
        pot_snk[j] = best;
    }

    // warm start on tight arcs (cost == column minimum)
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m && rd[j] > 0; ++i) {
            if (rs[i] > 0 && cost(i, j) == pot_snk[j]) {
                int128 delta = std::min(rs[i], rd[j]);
                flow[i][j] += delta;
                sink_support[j].push_back(i);
                rs[i] -= delta;
                rd[j] -= delta;
            }
        }
    }

    const int nodes = m + n; // sources 0..m-1, sinks m..m+n-1
    std::vector<double> dist(nodes);
    std::vector<PathArc> parent(nodes);
    std::vector<char> settled(nodes);

    int128 remaining = 0;
    for (int i = 0; i < m; ++i) remaining += rs[i];

    long long max_rounds = 50LL * (m + n) + 1000;
    while (remaining > 0) {
        if (--max_rounds < 0)
            throw std::runtime_error("min_cost_transport: augmentation cap exceeded");

        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        std::fill(settled.begin(), settled.end(), 0);
        using Entry = std::pair<double, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
        for (int i = 0; i < m; ++i) {
            if (rs[i] > 0) {
                dist[i] = 0.0;
                heap.push({0.0, i});
            }
        }
        int target = -1;
        while (!heap.empty()) {
            auto [du, u] = heap.top();
            heap.pop();
            if (settled[u]) continue;
            settled[u] = 1;
            if (u >= m && rd[u - m] > 0) {
                target = u;
                break;
            }
            if (u < m) {
                const int i = u;
                for (int j = 0; j < n; ++j) {
                    double rc = cost(i, j) - pot_src[i] - pot_snk[j];
                    // guard tiny negative round-off in reduced costs
                    if (rc < 0.0) rc = 0.0;
                    const int v = m + j;
                    if (du + rc < dist[v]) {
                        dist[v] = du + rc;
                        parent[v] = {i, true};
                        heap.push({dist[v], v});
                    }
                }
            } else {
                const int j = u - m;
                auto& sup = sink_support[j];
                for (std::size_t idx = 0; idx < sup.size();) {
                    const int i = sup[idx];
                    if (flow[i][j] <= 0) { // lazily drop stale entries
                        sup[idx] = sup.back();
                        sup.pop_back();
                        continue;
                    }
                    ++idx;
                    double rc = pot_src[i] + pot_snk[j] - cost(i, j);
                    if (rc < 0.0) rc = 0.0;
                    if (du + rc < dist[i]) {
                        dist[i] = du + rc;
                        parent[i] = {u, false};
                        heap.push({dist[i], i});
                    }
                }
            }
        }
        if (target < 0) throw std::runtime_error("min_cost_transport: disconnected instance");

        // bottleneck along the augmenting path; the walk ends at a source
        // that still has remaining supply (the Dijkstra root)
        int128 delta = rd[target - m];
        for (int v = target;;) {
            const PathArc& pa = parent[v];
            if (pa.forward) {
                const int i = pa.prev_node;
                if (rs[i] > 0) {
                    delta = std::min(delta, rs[i]);
                    break;
                }
                v = i;
            } else {
                const int j = pa.prev_node - m;
                delta = std::min(delta, flow[v][j]);
                v = pa.prev_node;
            }
        }

        // apply the augmentation
        for (int v = target;;) {
            const PathArc& pa = parent[v];
            if (pa.forward) {
                const int i = pa.prev_node;
                const int j = v - m;
                if (flow[i][j] == 0) sink_support[j].push_back(i);
                flow[i][j] += delta;
                if (rs[i] > 0) {
                    rs[i] -= delta;
                    break;
                }
                v = i;
            } else {
                const int j = pa.prev_node - m;
                flow[v][j] -= delta;
                v = pa.prev_node;
            }
        }
        rd[target - m] -= delta;
        remaining -= delta;

        const double dt = dist[target];
        for (int i = 0; i < m; ++i)
            if (dist[i] < dt) pot_src[i] -= dist[i]; else pot_src[i] -= dt;
        for (int j = 0; j < n; ++j)
            if (dist[m + j] < dt) pot_snk[j] += dist[m + j]; else pot_snk[j] += dt;
    }

    long double total = 0.0L;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (flow[i][j] > 0)
                total += static_cast<long double>(flow[i][j]) / kScale *
                         static_cast<long double>(cost(i, j));
    return static_cast<double>(total);
}

} // namespace

double wasserstein_p(const DiscreteMeasure& p_measure, const DiscreteMeasure& q_measure,
                     double p, Norm norm) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("wasserstein_p: order must be finite and >= 1");
    p_measure.validate();
    q_measure.validate();
    if (p_measure.atoms.front().size() != q_measure.atoms.front().size())
        throw std::invalid_argument("wasserstein_p: dimension mismatch");

    const int m = static_cast<int>(p_measure.atoms.size());
    const int n = static_cast<int>(q_measure.atoms.size());
    Matrix cost(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            cost(i, j) = std::pow(norm_of(p_measure.atoms[i] - q_measure.atoms[j], norm), p);

    std::vector<int128> supply(m), demand(n);
    int128 ts = 0, td = 0;
    for (int i = 0; i < m; ++i) { supply[i] = to_units(p_measure.weights[i]); ts += supply[i]; }
    for (int j = 0; j < n; ++j) { demand[j] = to_units(q_measure.weights[j]); td += demand[j]; }
    // balance integer totals; the adjustment is ~1e-12 relative at most
    if (ts > td) {
        auto it = std::max_element(demand.begin(), demand.end());
        *it += ts - td;
    } else if (td > ts) {
        auto it = std::max_element(supply.begin(), supply.end());
        *it += td - ts;
    }

    const double value = min_cost_transport(supply, demand, cost);
    return std::pow(std::max(0.0, value), 1.0 / p);
}

double clustering_distance_W(const EmpiricalDistribution& emp,
                             const ClusteredDistribution& clustered, double p,
                             std::size_t atom_budget, std::uint64_t subsample_seed,
                             std::size_t* subsampled_n) {
    DiscreteMeasure pm;
    if (static_cast<std::size_t>(emp.count()) > atom_budget) {
        std::vector<std::size_t> idx(emp.count());
        std::iota(idx.begin(), idx.end(), 0);
        std::mt19937_64 rng(subsample_seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(atom_budget);
        std::sort(idx.begin(), idx.end());
        pm.atoms.reserve(atom_budget);
        for (std::size_t i : idx) pm.atoms.push_back(emp.atom(i));
        pm.weights.assign(atom_budget, 1.0 / static_cast<double>(atom_budget));
    } else {
        pm = DiscreteMeasure::from_empirical(emp);
    }
    if (subsampled_n) *subsampled_n = pm.atoms.size();
    return wasserstein_p(pm, DiscreteMeasure::from_clustered(clustered), p, Norm::L2);
}

namespace {

void check_partition(const std::vector<int>& assignments, const EmpiricalDistribution& emp,
                     const ClusteredDistribution& clustered) {
    if (assignments.size() != static_cast<std::size_t>(emp.count()))
        throw std::invalid_argument("assignments do not cover the atoms");
    std::vector<std::int64_t> counts(clustered.size(), 0);
    for (int a : assignments) {
        if (a < 0 || a >= clustered.size())
            throw std::invalid_argument("assignment index out of range");
        ++counts[a];
    }
    for (int k = 0; k < clustered.size(); ++k)
        if (counts[k] != clustered.cluster(k).count)
            throw std::invalid_argument("assignments disagree with cluster counts");
}

} // namespace

double clustering_value_D(const std::vector<int>& assignments, const EmpiricalDistribution& emp,
                          const ClusteredDistribution& clustered, double p) {
    check_partition(assignments, emp, clustered);
    double acc = 0.0;
    for (std::int64_t i = 0; i < emp.count(); ++i) {
        const Vector& u = emp.atom(i);
        const Vector& mean = clustered.cluster(assignments[i]).mean;
        acc += std::pow((u - mean).norm(), p);
    }
    acc /= static_cast<double>(emp.count());
    return std::pow(acc, 1.0 / p);
}

double clustering_phi(const std::vector<int>& assignments, const EmpiricalDistribution& emp,
                      const ClusteredDistribution& clustered,
                      const std::vector<std::vector<Vector>>& dual_coeffs) {
    check_partition(assignments, emp, clustered);
    const std::size_t num_pieces = dual_coeffs.size();
    if (num_pieces == 0) throw std::invalid_argument("clustering_phi: no dual coefficients");
    for (const auto& per_piece : dual_coeffs)
        if (per_piece.size() != static_cast<std::size_t>(clustered.size()))
            throw std::invalid_argument("clustering_phi: missing coefficient vectors");
    if (num_pieces == 1) return 0.0;

    double acc = 0.0;
    for (std::int64_t i = 0; i < emp.count(); ++i) {
        const int k = assignments[i];
        const Vector dev = emp.atom(i) - clustered.cluster(k).mean;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < num_pieces; ++j)
            best = std::max(best, -dual_coeffs[j][k].dot(dev));
        acc += best;
    }
    return acc / static_cast<double>(emp.count());
}

} // namespace sdro
