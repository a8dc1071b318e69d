#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algpos/eigen.hpp"
#include "algpos/matrix.hpp"

namespace algpos {

struct Tolerances {
    double eigen_tol = 1e-9;   // realness / simplicity threshold scale
    double borderline = 1e-6;  // margin band where oracle disagreement is expected
    double lp_eps = 1e-9;      // minimal LP margin to accept a certificate
    int max_degree = 0;        // 0 means n-1
};

// Theorem-style witness: a simple real eigenvalue with strictly positive
// left and right eigenvectors.
struct EigenCertificate {
    EigenPair pair;
    double min_entry = 0.0;  // smallest coordinate across left and right
    double gap = 0.0;
};

// Cayley-Hamilton witness: off-diagonal of sum k_i A^i strictly positive,
// diagonal absorbed by the constant term k0. max |k_i| == 1.
struct PolyCertificate {
    std::vector<double> offdiag_coeffs;  // k_1 ... k_d
    double k0 = 0.0;
    double margin = 0.0;  // smallest entry of p(A)

    Polynomial poly() const;
};

enum class Agreement { Agree, EigenOnly, PolyOnly, Borderline };

struct ApVerdict {
    bool is_ap = false;
    std::optional<EigenCertificate> eigen;
    std::optional<PolyCertificate> poly;
    Agreement agreement = Agreement::Agree;
    // Certificate strength when present, best near-miss when absent
    // (-inf when there is no real eigenvalue at all / LP margin otherwise).
    double eigen_margin = 0.0;
    double poly_margin = 0.0;
};

// Spectral oracle. Scans real simple eigenvalues in descending order and
// returns a certificate for the first with strictly positive left and right
// eigenvectors.
std::optional<EigenCertificate> eigen_ap_check(const RealMatrix& a, double tol = 1e-9);

// Best near-miss margin of the spectral check: max over real eigenvalues of
// min(vector entries, gap). Positive iff a certificate exists; -inf when no
// real eigenvalue exists.
double eigen_ap_margin(const RealMatrix& a, double tol = 1e-9);

// LP feasibility oracle: maximize t s.t. (sum k_i A^i)_{rs} >= t for r != s,
// |k_i| <= 1, by dense simplex. Accepts when the optimum exceeds eps.
std::optional<PolyCertificate> certificate_search(const RealMatrix& a, int max_degree,
                                                  double eps = 1e-9);

// Raw LP optimum (the poly-side margin even when no certificate is issued).
double certificate_margin(const RealMatrix& a, int max_degree);

// Runs both oracles; is_ap follows the spectral one, the LP result is
// attached as corroboration.
ApVerdict is_ap(const RealMatrix& a, const Tolerances& cfg = {});

struct Transpose {};
struct Negate {};
struct PermSim {
    std::vector<int> perm;  // image of each index, 0-based
};
struct AffineShift {
    double alpha = 0.0;
    double beta = 1.0;  // must be nonzero
};
using ClosureTransform = std::variant<Transpose, Negate, PermSim, AffineShift>;

// The four transforms that preserve algebraic positivity. Throws
// DegenerateScale when beta == 0.
RealMatrix closure_transform(const RealMatrix& a, const ClosureTransform& t);

// Certificate wire formats: {"lambda":..,"left":[..],"right":[..],"gap":..}
// and {"k":[..],"k0":..,"margin":..}.
std::string certificate_json(const EigenCertificate& c);
std::string certificate_json(const PolyCertificate& c);

}  // namespace algpos
