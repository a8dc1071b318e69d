#include "algpos/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace algpos {

namespace {

void check_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) throw DimensionMismatch("matrix entry is not finite");
    }
}

}  // namespace

RealMatrix::RealMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
}

RealMatrix::RealMatrix(int n, std::vector<double> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    if (e_.size() != static_cast<size_t>(n) * n)
        throw DimensionMismatch("entry count does not match dimension");
    check_finite(e_);
}

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RealMatrix RealMatrix::operator*(const RealMatrix& rhs) const {
    if (rhs.n_ != n_) throw DimensionMismatch("dimension mismatch in product");
    RealMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

RealMatrix RealMatrix::operator+(const RealMatrix& rhs) const {
    if (rhs.n_ != n_) throw DimensionMismatch("dimension mismatch in sum");
    RealMatrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + rhs.e_[k];
    return out;
}

RealMatrix RealMatrix::operator-() const {
    RealMatrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

RealMatrix RealMatrix::scaled(double s) const {
    RealMatrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = s * e_[k];
    return out;
}

RealMatrix RealMatrix::shifted(double alpha) const {
    RealMatrix out = *this;
    for (int i = 0; i < n_; ++i) out(i, i) += alpha;
    return out;
}

double RealMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double RealMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::fabs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

double RealMatrix::max_abs() const {
    double best = 0.0;
    for (double x : e_) best = std::max(best, std::fabs(x));
    return best;
}

double RealMatrix::min_entry() const {
    double best = std::numeric_limits<double>::infinity();
    for (double x : e_) best = std::min(best, x);
    return best;
}

double RealMatrix::min_offdiag() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) best = std::min(best, (*this)(i, j));
    return best;
}

double RealMatrix::min_diag() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) best = std::min(best, (*this)(i, i));
    return best;
}

RealMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<double>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string_view row_text = text.substr(pos, semi == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : semi - pos);
        std::string buf(row_text);
        for (char& c : buf)
            if (c == ',') c = ' ';
        std::istringstream in(buf);
        std::vector<double> row;
        std::string tok;
        while (in >> tok) {
            char* end = nullptr;
            double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0' || !std::isfinite(v))
                throw ParseError("bad matrix entry '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    if (rows.empty()) throw ParseError("empty matrix text");
    const size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw ParseError("matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return RealMatrix(static_cast<int>(n), std::move(flat));
}

std::string format_matrix(const RealMatrix& a) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < a.n(); ++i) {
        if (i) out << "; ";
        for (int j = 0; j < a.n(); ++j) {
            if (j) out << ' ';
            out << a(i, j);
        }
    }
    return out.str();
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

std::string Polynomial::to_string() const {
    std::ostringstream out;
    out.precision(12);
    bool first = true;
    for (size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] == 0.0 && !(first && k == 0)) continue;
        if (!first) out << (coeffs[k] < 0 ? " - " : " + ");
        else if (coeffs[k] < 0) out << "-";
        first = false;
        double c = std::fabs(coeffs[k]);
        if (c != 1.0 || k == 0) out << c;
        if (k >= 1) out << "x";
        if (k >= 2) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

Polynomial char_poly(const RealMatrix& a) {
    const int n = a.n();
    std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
    c[n] = 1.0;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with
    // M_{k+1} = A (M_k + c_{n-k} I).
    RealMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        c[n - k] = -m.trace() / k;
        if (k < n) m = a * m.shifted(c[n - k]);
    }
    return Polynomial{std::move(c)};
}

RealMatrix poly_eval_matrix(const Polynomial& p, const RealMatrix& a) {
    if (p.coeffs.empty()) throw DimensionMismatch("empty polynomial");
    if (p.degree() > kMaxPolyDegree) throw DimensionMismatch("polynomial degree above cap");
    const int n = a.n();
    RealMatrix acc(n);
    for (int i = 0; i < n; ++i) acc(i, i) = p.coeffs.back();
    for (size_t k = p.coeffs.size() - 1; k-- > 0;) {
        acc = acc * a;
        for (int i = 0; i < n; ++i) acc(i, i) += p.coeffs[k];
    }
    return acc;
}

}  // namespace algpos
