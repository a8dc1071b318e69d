#include "algpos/ap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "algpos/simplex.hpp"

namespace algpos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double vec_min(const std::vector<double>& v) {
    double m = kInf;
    for (double x : v) m = std::min(m, x);
    return m;
}

// margin of one eigenpair as an AP certificate candidate
double pair_margin(const EigenPair& p) {
    return std::min({vec_min(p.right), vec_min(p.left), p.gap});
}

struct LpOutcome {
    double t_star = -kInf;
    std::vector<double> k;
};

LpOutcome solve_offdiag_lp(const RealMatrix& a, int degree) {
    const int n = a.n();
    std::vector<RealMatrix> powers;
    powers.reserve(degree);
    RealMatrix p = a;
    for (int d = 1; d <= degree; ++d) {
        if (d > 1) p = p * a;
        powers.push_back(p);
    }
    // vars: k+_1..k+_d, k-_1..k-_d, t+, t-
    const int d = degree;
    const int nv = 2 * d + 2;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (r == s) continue;
            std::vector<double> row(nv, 0.0);
            for (int i = 0; i < d; ++i) {
                row[i] = -powers[i](r, s);
                row[d + i] = powers[i](r, s);
            }
            row[2 * d] = 1.0;
            row[2 * d + 1] = -1.0;
            rows.push_back(std::move(row));
            rhs.push_back(0.0);
        }
    for (int i = 0; i < 2 * d; ++i) {
        std::vector<double> row(nv, 0.0);
        row[i] = 1.0;
        rows.push_back(std::move(row));
        rhs.push_back(1.0);
    }
    std::vector<double> obj(nv, 0.0);
    obj[2 * d] = 1.0;
    obj[2 * d + 1] = -1.0;
    const SimplexResult res = simplex_maximize(rows, rhs, obj);
    LpOutcome out;
    out.t_star = res.objective;
    out.k.resize(d);
    for (int i = 0; i < d; ++i) out.k[i] = res.x[i] - res.x[d + i];
    return out;
}

int effective_degree(const RealMatrix& a, int max_degree) {
    int d = max_degree > 0 ? max_degree : a.n() - 1;
    return std::clamp(d, 1, kMaxPolyDegree);
}

}  // namespace

Polynomial PolyCertificate::poly() const {
    std::vector<double> c;
    c.push_back(k0);
    c.insert(c.end(), offdiag_coeffs.begin(), offdiag_coeffs.end());
    return Polynomial{std::move(c)};
}

std::optional<EigenCertificate> eigen_ap_check(const RealMatrix& a, double tol) {
    if (a.n() < 2) throw DimensionMismatch("need n >= 2");
    const double scale = 1.0 + a.inf_norm();
    for (const EigenPair& p : eigen_all(a, tol)) {
        if (p.gap <= tol * scale) continue;  // not simple under the tolerance
        const double m = std::min(vec_min(p.right), vec_min(p.left));
        if (m > 0.0) {
            EigenCertificate cert{p, m, p.gap};
            return cert;
        }
    }
    return std::nullopt;
}

double eigen_ap_margin(const RealMatrix& a, double tol) {
    double best = -kInf;
    for (const EigenPair& p : eigen_all(a, tol)) best = std::max(best, pair_margin(p));
    return best;
}

std::optional<PolyCertificate> certificate_search(const RealMatrix& a, int max_degree,
                                                  double eps) {
    if (max_degree < 1 && max_degree != 0)
        throw DimensionMismatch("max_degree must be >= 1 (or 0 for n-1)");
    const int d = effective_degree(a, max_degree);
    // p(x) = x suffices for an entrywise positive matrix
    if (a.min_entry() > eps) {
        PolyCertificate cert;
        cert.offdiag_coeffs = {1.0};
        cert.k0 = 0.0;
        cert.margin = a.min_entry();
        return cert;
    }
    const LpOutcome lp = solve_offdiag_lp(a, d);
    if (!(lp.t_star > eps)) return std::nullopt;
    double norm = 0.0;
    for (double k : lp.k) norm = std::max(norm, std::fabs(k));
    if (norm <= 0.0) return std::nullopt;
    PolyCertificate cert;
    cert.offdiag_coeffs = lp.k;
    for (double& k : cert.offdiag_coeffs) k /= norm;
    cert.k0 = 0.0;
    const RealMatrix hom = poly_eval_matrix(cert.poly(), a);
    const double t = hom.min_offdiag();
    // smallest k0 lifting every diagonal entry up to the off-diagonal margin
    cert.k0 = -hom.min_diag() + t;
    cert.margin = poly_eval_matrix(cert.poly(), a).min_entry();
    return cert;
}

double certificate_margin(const RealMatrix& a, int max_degree) {
    return solve_offdiag_lp(a, effective_degree(a, max_degree)).t_star;
}

ApVerdict is_ap(const RealMatrix& a, const Tolerances& cfg) {
    ApVerdict v;
    v.eigen = eigen_ap_check(a, cfg.eigen_tol);
    v.eigen_margin = v.eigen ? std::min(v.eigen->min_entry, v.eigen->gap)
                             : eigen_ap_margin(a, cfg.eigen_tol);
    v.poly = certificate_search(a, cfg.max_degree, cfg.lp_eps);
    v.poly_margin = v.poly ? v.poly->margin : certificate_margin(a, cfg.max_degree);
    v.is_ap = v.eigen.has_value();
    if (v.eigen.has_value() == v.poly.has_value()) {
        v.agreement = Agreement::Agree;
    } else {
        const bool eigen_border = std::isfinite(v.eigen_margin) &&
                                  std::fabs(v.eigen_margin) < cfg.borderline;
        const bool poly_border = std::fabs(v.poly_margin) < cfg.borderline;
        if (eigen_border || poly_border)
            v.agreement = Agreement::Borderline;
        else
            v.agreement = v.eigen ? Agreement::EigenOnly : Agreement::PolyOnly;
    }
    return v;
}

RealMatrix closure_transform(const RealMatrix& a, const ClosureTransform& t) {
    if (std::holds_alternative<Transpose>(t)) return a.transposed();
    if (std::holds_alternative<Negate>(t)) return -a;
    if (const auto* ps = std::get_if<PermSim>(&t)) {
        const int n = a.n();
        if (static_cast<int>(ps->perm.size()) != n)
            throw DimensionMismatch("permutation size mismatch");
        std::vector<char> seen(n, 0);
        for (int p : ps->perm) {
            if (p < 0 || p >= n || seen[p]) throw DimensionMismatch("not a permutation");
            seen[p] = 1;
        }
        RealMatrix out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out(ps->perm[i], ps->perm[j]) = a(i, j);
        return out;
    }
    const auto& af = std::get<AffineShift>(t);
    if (af.beta == 0.0) throw DegenerateScale("beta must be nonzero");
    return a.scaled(af.beta).shifted(af.alpha);
}

std::string certificate_json(const EigenCertificate& c) {
    nlohmann::ordered_json j;
    j["lambda"] = c.pair.value;
    j["left"] = c.pair.left;
    j["right"] = c.pair.right;
    j["gap"] = c.gap;
    return j.dump();
}

std::string certificate_json(const PolyCertificate& c) {
    nlohmann::ordered_json j;
    j["k"] = c.offdiag_coeffs;
    j["k0"] = c.k0;
    j["margin"] = c.margin;
    return j.dump();
}

}  // namespace algpos
