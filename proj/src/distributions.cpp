#include "sdro/distributions.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sdro {

EmpiricalDistribution::EmpiricalDistribution(std::vector<Vector> atoms)
    : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
        if (a.size() != atoms_.front().size())
            throw std::invalid_argument("EmpiricalDistribution: mixed atom dimensions");
    }
}

void EmpiricalDistribution::add(const Vector& point) {
    if (!atoms_.empty() && point.size() != atoms_.front().size())
        throw std::invalid_argument("EmpiricalDistribution::add: dimension mismatch");
    atoms_.push_back(point);
}

Vector empirical_mean(const EmpiricalDistribution& dist) {
    if (dist.empty()) throw std::invalid_argument("empirical_mean: empty distribution");
    Vector m = Vector::Zero(dist.dim());
    for (const auto& a : dist.atoms()) m += a;
    return m / static_cast<double>(dist.count());
}

double ClusterStat::rmse() const {
    if (count <= 0) return 0.0;
    return std::sqrt(std::max(0.0, sse) / static_cast<double>(count));
}

ClusteredDistribution::ClusteredDistribution(std::vector<ClusterStat> clusters,
                                             std::int64_t total_count)
    : clusters_(std::move(clusters)), total_count_(total_count) {}

double ClusteredDistribution::weight(std::size_t k) const {
    if (total_count_ <= 0) return 0.0;
    return static_cast<double>(clusters_[k].count) / static_cast<double>(total_count_);
}

std::vector<double> ClusteredDistribution::weights() const {
    std::vector<double> w(clusters_.size());
    for (std::size_t k = 0; k < clusters_.size(); ++k) w[k] = weight(k);
    return w;
}

Vector ClusteredDistribution::weighted_mean() const {
    if (clusters_.empty())
        throw std::logic_error("ClusteredDistribution::weighted_mean: no clusters");
    Vector m = Vector::Zero(dim());
    for (std::size_t k = 0; k < clusters_.size(); ++k) m += weight(k) * clusters_[k].mean;
    return m;
}

void ClusteredDistribution::reset(std::vector<ClusterStat> clusters, std::int64_t total_count) {
    clusters_ = std::move(clusters);
    total_count_ = total_count;
}

void incorporate_point(ClusteredDistribution& dist, const Vector& point, int cluster_index) {
    if (cluster_index < 0 || cluster_index >= dist.size())
        throw std::out_of_range("incorporate_point: invalid cluster index");
    ClusterStat& c = dist.clusters_[cluster_index];
    if (c.mean.size() != point.size())
        throw std::invalid_argument("incorporate_point: dimension mismatch");
    const Vector delta_old = point - c.mean;
    c.count += 1;
    c.mean += delta_old / static_cast<double>(c.count);
    c.sse += delta_old.dot(point - c.mean);
    dist.total_count_ += 1;
}

namespace {

bool parse_row(const std::string& line, std::vector<double>& out) {
    out.clear();
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(cell, &pos);
        } catch (const std::exception&) {
            return false;
        }
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) return false;
        out.push_back(v);
    }
    return !out.empty();
}

} // namespace

EmpiricalDistribution read_csv(std::istream& in) {
    EmpiricalDistribution dist;
    std::string line;
    std::vector<double> row;
    bool first = true;
    int expected = -1;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!parse_row(line, row)) {
            if (first) { first = false; continue; } // header
            throw std::runtime_error("read_csv: non-numeric cell on line " +
                                     std::to_string(lineno));
        }
        first = false;
        if (expected < 0) expected = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != expected)
            throw std::runtime_error("read_csv: column count mismatch on line " +
                                     std::to_string(lineno));
        dist.add(Eigen::Map<const Vector>(row.data(), row.size()));
    }
    return dist;
}

EmpiricalDistribution load_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_csv: cannot open " + path);
    return read_csv(f);
}

} // namespace sdro
