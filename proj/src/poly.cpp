#include "rootshift/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rootshift {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { drop_zero_leading(); }

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { drop_zero_leading(); }

Poly Poly::monomial(int n, Complex c) {
    if (n < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Complex> cs(static_cast<std::size_t>(n) + 1);
    cs.back() = c;
    return Poly(std::move(cs));
}

Poly Poly::constant(Complex c) { return Poly(std::vector<Complex>{c}); }

double Poly::max_coeff_modulus() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Poly Poly::trimmed(double threshold) const {
    std::vector<Complex> cs = coeffs_;
    while (!cs.empty() && std::abs(cs.back()) <= threshold) cs.pop_back();
    return Poly(std::move(cs));
}

void Poly::drop_zero_leading() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    drop_zero_leading();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    drop_zero_leading();
    return *this;
}

Poly& Poly::operator*=(Complex c) {
    for (auto& x : coeffs_) x *= c;
    drop_zero_leading();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(cs));
}

DiffOperator::DiffOperator(std::vector<Complex> alphas, int n) : alphas_(std::move(alphas)), n_(n) {
    if (n < 0) throw std::invalid_argument("DiffOperator: negative n");
    if (alphas_.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("DiffOperator: expected " + std::to_string(n + 1) +
                                    " coefficients, got " + std::to_string(alphas_.size()));
}

DiffOperator DiffOperator::from_coefficients(std::vector<Complex> alphas, int n) {
    if (n < 0) throw std::invalid_argument("DiffOperator: negative n");
    alphas.resize(static_cast<std::size_t>(n) + 1);
    return DiffOperator(std::move(alphas), n);
}

DiffOperator DiffOperator::identity(int n) { return from_coefficients({1.0}, n); }

Complex evaluate(const Poly& p, Complex z) {
    const auto& c = p.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly derivative(const Poly& p, int k) {
    if (k < 0) throw std::invalid_argument("derivative: negative order");
    const int deg = p.degree();
    if (k > deg) return {};
    std::vector<Complex> out(static_cast<std::size_t>(deg - k) + 1);
    for (int j = k; j <= deg; ++j) {
        // j! / (j - k)!
        double falling = 1.0;
        for (int i = 0; i < k; ++i) falling *= static_cast<double>(j - i);
        out[static_cast<std::size_t>(j - k)] = p[static_cast<std::size_t>(j)] * falling;
    }
    return Poly(std::move(out));
}

Poly from_roots(const std::vector<Complex>& roots, Complex leading) {
    if (leading == Complex{}) throw std::invalid_argument("from_roots: zero leading coefficient");
    std::vector<Complex> cs{leading};
    cs.reserve(roots.size() + 1);
    for (const auto& w : roots) {
        cs.push_back(Complex{});
        for (std::size_t k = cs.size() - 1; k > 0; --k) cs[k] = cs[k - 1] - w * cs[k];
        cs[0] = -w * cs[0];
    }
    return Poly(std::move(cs));
}

Poly taylor_shift(const Poly& p, Complex alpha) {
    std::vector<Complex> c = p.coeffs();
    const int n = p.degree();
    // Horner shift: pass i leaves c[i] equal to the i-th Taylor coefficient at alpha.
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += alpha * c[static_cast<std::size_t>(j) + 1];
    return Poly(std::move(c));
}

Poly dilate(const Poly& p, Complex t) {
    if (t == Complex{}) throw std::invalid_argument("dilate: t must be nonzero");
    std::vector<Complex> c = p.coeffs();
    const Complex inv = 1.0 / t;
    Complex scale = 1.0;
    for (auto& x : c) {
        x *= scale;
        scale *= inv;
    }
    return Poly(std::move(c));
}

Poly apply_operator(const DiffOperator& T, const Poly& p) {
    if (p.degree() > T.n())
        throw std::invalid_argument("apply_operator: deg p = " + std::to_string(p.degree()) +
                                    " exceeds operator degree cap " + std::to_string(T.n()));
    if (p.is_zero()) return {};
    std::vector<Complex> acc(p.coeffs().size());
    Poly dk = p;
    for (int k = 0; k <= T.n() && !dk.is_zero(); ++k) {
        const Complex a = T[static_cast<std::size_t>(k)];
        if (a != Complex{})
            for (std::size_t j = 0; j < dk.coeffs().size(); ++j) acc[j] += a * dk.coeffs()[j];
        dk = derivative(dk, 1);
    }
    return Poly(std::move(acc));
}

DiffOperator shift_as_operator(Complex beta, int n) {
    if (n < 0) throw std::invalid_argument("shift_as_operator: negative n");
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    Complex term = 1.0;
    for (int k = 0; k <= n; ++k) {
        a[static_cast<std::size_t>(k)] = term;
        term *= beta / static_cast<double>(k + 1);
    }
    return DiffOperator(std::move(a), n);
}

DiffOperator compose_operators(const DiffOperator& A, const DiffOperator& B) {
    if (A.n() != B.n())
        throw std::invalid_argument("compose_operators: mismatched degree caps " + std::to_string(A.n()) +
                                    " and " + std::to_string(B.n()));
    const auto n = static_cast<std::size_t>(A.n());
    std::vector<Complex> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += A[i] * B[j];
    return DiffOperator(std::move(c), A.n());
}

DiffOperator normalize_operator(const DiffOperator& T) {
    if (!T.admissible()) throw std::invalid_argument("normalize_operator: alpha_0 must be nonzero");
    std::vector<Complex> a = T.alphas();
    const Complex a0 = a[0];
    for (auto& x : a) x /= a0;
    a[0] = 1.0;
    return DiffOperator(std::move(a), T.n());
}

}  // namespace rootshift
