#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdro {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Norms selectable for ambiguity sets and transport costs.
enum class Norm { L1, L2, LInf };

inline double norm_of(const Vector& v, Norm n) {
    switch (n) {
    case Norm::L1: return v.lpNorm<1>();
    case Norm::L2: return v.norm();
    case Norm::LInf: return v.lpNorm<Eigen::Infinity>();
    }
    return v.norm();
}

// ||.||_* = sup { z'u : ||u|| <= 1 }; pairs (L1,LInf), (L2,L2).
inline Norm dual_norm_of(Norm n) {
    switch (n) {
    case Norm::L1: return Norm::LInf;
    case Norm::LInf: return Norm::L1;
    default: return Norm::L2;
    }
}

inline std::string norm_name(Norm n) {
    switch (n) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::LInf: return "linf";
    }
    return "l2";
}

inline Norm norm_from_name(const std::string& s) {
    if (s == "l1") return Norm::L1;
    if (s == "l2") return Norm::L2;
    if (s == "linf") return Norm::LInf;
    throw std::invalid_argument("unknown norm: " + s);
}

} // namespace sdro
