#pragma once

#include <complex>
#include <vector>

#include "algpos/matrix.hpp"

namespace algpos {

// All complex roots of p. Closed-form for degree <= 3, Aberth-Ehrlich
// simultaneous iteration above that. Throws RootFindingFailure if the
// iteration budget runs out.
std::vector<std::complex<double>> poly_roots(const Polynomial& p);

// Real eigenvalue with left/right eigenvectors and the distance to the
// nearest other eigenvalue. Vectors are normalized to unit max-norm with the
// first nonzero coordinate positive. gap == 0 also flags eigenvalues whose
// null space is numerically 2-dimensional: those are never simple, whatever
// the root multiset says.
struct EigenPair {
    double value = 0.0;
    std::vector<double> right;
    std::vector<double> left;
    double gap = 0.0;
};

inline constexpr int kMaxEigenDim = 8;

// All real eigenvalues of a (|Im| <= tol*(1+|root|)), sorted by descending
// value. Throws RootFindingFailure (propagated) and DimensionMismatch above
// the dimension cap.
std::vector<EigenPair> eigen_all(const RealMatrix& a, double tol = 1e-9);

}  // namespace algpos
