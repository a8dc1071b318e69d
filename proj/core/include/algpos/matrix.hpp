#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algpos/errors.hpp"

namespace algpos {

// Dense row-major real square matrix. Sized for n <= 8 in practice but
// correct for any n. Entries are validated finite at construction.
class RealMatrix {
  public:
    explicit RealMatrix(int n);
    RealMatrix(int n, std::vector<double> entries);

    static RealMatrix identity(int n);

    int n() const { return n_; }
    double operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& entries() const { return e_; }

    RealMatrix transposed() const;
    RealMatrix operator*(const RealMatrix& rhs) const;
    RealMatrix operator+(const RealMatrix& rhs) const;
    RealMatrix operator-() const;
    RealMatrix scaled(double s) const;
    RealMatrix shifted(double alpha) const;  // A + alpha*I

    double trace() const;
    double inf_norm() const;  // max absolute row sum
    double max_abs() const;
    double min_entry() const;
    double min_offdiag() const;
    double min_diag() const;

    bool operator==(const RealMatrix& rhs) const = default;

  private:
    int n_;
    std::vector<double> e_;
};

// Text format: rows separated by ';', entries by whitespace or ','.
// Scientific notation accepted. Example: "1 2; 3,4e-1".
RealMatrix parse_matrix(std::string_view text);
std::string format_matrix(const RealMatrix& a);

// Dense polynomial, coeffs[i] holds the coefficient of x^i. Never empty;
// the leading coefficient may be zero (callers normalize when needed).
struct Polynomial {
    std::vector<double> coeffs{0.0};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
    std::string to_string() const;
};

inline constexpr int kMaxPolyDegree = 16;

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence;
// leading coefficient exactly 1.
Polynomial char_poly(const RealMatrix& a);

// Horner evaluation p(A); loop order fixed for reproducibility.
RealMatrix poly_eval_matrix(const Polynomial& p, const RealMatrix& a);

}  // namespace algpos
