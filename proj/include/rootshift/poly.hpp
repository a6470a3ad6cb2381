#pragma once

// Dense complex polynomials and the operator algebra spanned by I, D, ..., D^n.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rootshift {

using Complex = std::complex<double>;

/// Polynomial with coefficients in ascending degree order (coeffs()[k] multiplies z^k).
///
/// Construction drops exactly-zero leading coefficients so that the leading
/// coefficient is nonzero unless the polynomial is identically zero. Nothing
/// else trims: use trimmed() to discard numerically dead terms explicitly.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs);
    Poly(std::initializer_list<Complex> coeffs);

    /// z^n
    static Poly monomial(int n, Complex c = 1.0);
    static Poly constant(Complex c);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
    /// Coefficient of z^k; zero beyond the degree.
    Complex operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }
    double max_coeff_modulus() const noexcept;

    /// Drops leading coefficients with modulus <= threshold.
    Poly trimmed(double threshold = 1e-300) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(Complex c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, Complex c) { return a *= c; }
    friend Poly operator*(Complex c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void drop_zero_leading();

    std::vector<Complex> coeffs_;
};

/// T = alphas[0] I + alphas[1] D + ... + alphas[n] D^n acting on polynomials of degree <= n.
class DiffOperator {
public:
    /// alphas.size() must equal n + 1.
    DiffOperator(std::vector<Complex> alphas, int n);
    /// Pads or truncates to length n + 1.
    static DiffOperator from_coefficients(std::vector<Complex> alphas, int n);
    static DiffOperator identity(int n);

    int n() const noexcept { return n_; }
    const std::vector<Complex>& alphas() const noexcept { return alphas_; }
    Complex operator[](std::size_t k) const noexcept {
        return k < alphas_.size() ? alphas_[k] : Complex{};
    }
    bool admissible() const noexcept { return alphas_[0] != Complex{}; }

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

private:
    std::vector<Complex> alphas_;
    int n_;
};

Complex evaluate(const Poly& p, Complex z);

/// D^k p; the zero polynomial when k > deg p.
Poly derivative(const Poly& p, int k = 1);

/// leading * prod (z - w) over roots (repeated according to multiplicity by the caller).
Poly from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);

/// q(z) = p(alpha + z), by repeated synthetic division.
Poly taylor_shift(const Poly& p, Complex alpha);

/// q(z) = p(z / t). Throws std::invalid_argument for t == 0.
Poly dilate(const Poly& p, Complex t);

/// sum_k alpha_k D^k p. Throws std::invalid_argument when deg p > T.n().
Poly apply_operator(const DiffOperator& T, const Poly& p);

/// S(beta) written in powers of D: coefficient k is beta^k / k!.
DiffOperator shift_as_operator(Complex beta, int n);

/// A * B in the truncated algebra D^{n+1} = 0. Throws on mismatched n.
DiffOperator compose_operators(const DiffOperator& A, const DiffOperator& B);

/// T / alpha_0. Throws std::invalid_argument when alpha_0 == 0.
DiffOperator normalize_operator(const DiffOperator& T);

}  // namespace rootshift
