#pragma once

#include <Eigen/Sparse>
#include <string>
#include <utility>
#include <vector>

#include "sdro/linalg.hpp"

namespace sdro {

// Sparse affine expression over program variables: sum coeff_i * var_i + constant.
struct Expr {
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;

    Expr() = default;
    explicit Expr(double k) : constant(k) {}
    static Expr var(int index, double coeff = 1.0) {
        Expr e;
        e.terms.emplace_back(index, coeff);
        return e;
    }
    Expr& add(int index, double coeff) {
        if (coeff != 0.0) terms.emplace_back(index, coeff);
        return *this;
    }
    Expr& operator+=(const Expr& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        constant += o.constant;
        return *this;
    }
    Expr operator*(double a) const {
        Expr e;
        e.terms.reserve(terms.size());
        for (auto [i, c] : terms) e.terms.emplace_back(i, c * a);
        e.constant = constant * a;
        return e;
    }
};

// Conic program in the form
//   minimize    c'x
//   subject to  A x = b
//               G x + s = h,  s in K = R+^l x SOC_{q1} x ... x SOC_{qN}.
// Rows are accumulated through the builder API and packed by finalize().
class ConeProgram {
public:
    int add_vars(int count);
    int num_vars() const { return num_vars_; }

    void set_objective_coeff(int var, double coeff);
    void add_objective(const Expr& e); // constant folded into objective_offset

    void add_eq(const Expr& e);                      // e == 0
    void add_le(const Expr& lhs, const Expr& rhs);   // lhs <= rhs
    void add_nonneg(int var);                        // var >= 0
    void add_soc(const Expr& t, const std::vector<Expr>& v);  // ||v||_2 <= t
    // 2 u v >= ||w||^2, u >= 0, v >= 0 (encoded as a plain second-order cone)
    void add_rsoc(const Expr& u, const Expr& v, const std::vector<Expr>& w);

    // m <= (f_1 f_2 ... f_N)^(1/N) with all factors >= 0, via a binary tree of
    // rotated cones. The factor list is padded with copies of `m` to the next
    // power of two, which leaves the constraint unchanged.
    void add_geomean(const std::vector<Expr>& factors, const Expr& m);

    void finalize();
    bool finalized() const { return finalized_; }

    const Eigen::SparseMatrix<double>& eq_matrix() const { return eq_mat_; }
    const Vector& eq_rhs() const { return eq_rhs_vec_; }
    const Eigen::SparseMatrix<double>& cone_matrix() const { return cone_mat_; }
    const Vector& cone_rhs() const { return cone_rhs_vec_; }
    const Vector& objective() const { return obj_; }
    double objective_offset() const { return obj_offset_; }
    int nonneg_dim() const { return nonneg_rows_; }
    const std::vector<int>& soc_dims() const { return soc_dims_; }

    std::string dump() const; // human-readable debug listing

private:
    struct Row {
        std::vector<std::pair<int, double>> coeffs;
        double rhs;
    };
    Row make_row(const Expr& e) const; // row: coeffs'x + s = rhs

    int num_vars_ = 0;
    std::vector<double> obj_coeffs_;
    double obj_offset_ = 0.0;

    std::vector<Row> eq_rows_;
    std::vector<Row> nonneg_row_list_;
    std::vector<std::vector<Row>> soc_blocks_;

    bool finalized_ = false;
    Eigen::SparseMatrix<double> eq_mat_, cone_mat_;
    Vector eq_rhs_vec_, cone_rhs_vec_;
    Vector obj_;
    int nonneg_rows_ = 0;
    std::vector<int> soc_dims_;
};

} // namespace sdro
