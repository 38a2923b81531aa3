#pragma once

#include "sscgamma/cyclotomic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ssc {

// Laurent polynomial in Z; coeffs[i] multiplies Z^(min_deg + i). Leading and trailing
// coefficients are nonzero, the zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const CycloNumber& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long min_deg, std::vector<CycloNumber> coeffs);

    static LaurentPoly monomial(const CycloNumber& c, long degree);
    // 1 - alpha*Z
    static LaurentPoly linear_factor(const CycloNumber& alpha);

    long min_deg() const { return min_deg_; }
    long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<CycloNumber>& coeffs() const { return coeffs_; }
    CycloNumber coeff(long degree) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }

    CycloNumber eval(const CycloNumber& z) const;
    LaurentPoly shift(long k) const;
    // p(c * Z^-1)
    LaurentPoly substitute_inverse(const CycloNumber& c) const;
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Polynomial division after aligning both sides at Z^0; quotient and remainder are
    // ordinary polynomials, a = q*b + r scaled by Z^(a.min_deg - b.min_deg).
    static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
    // a / b if b divides a exactly in the Laurent ring.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;

private:
    void trim();

    long min_deg_ = 0;
    std::vector<CycloNumber> coeffs_;
};

// num/den with den normalized to min_deg 0 and constant term 1 where that is possible;
// common polynomial factors are cancelled on construction.
class RatFun {
public:
    RatFun();
    RatFun(const CycloNumber& constant);  // NOLINT(google-explicit-constructor)
    RatFun(const LaurentPoly& num);       // NOLINT(google-explicit-constructor)
    RatFun(const LaurentPoly& num, const LaurentPoly& den);

    static RatFun monomial(const CycloNumber& c, long degree);
    // The raw pair, only checked for a nonzero denominator. Used by parsers.
    static RatFun unreduced(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    // (c, k) when the function equals c*Z^k.
    std::optional<std::pair<CycloNumber, long>> as_monomial() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

    RatFun inverse() const;
    RatFun pow(long e) const;
    // f(c * Z^-1)
    RatFun substitute_inverse(const CycloNumber& c) const;

    std::string to_string() const;

private:
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

// x^start / (1 - x) for a monomial x = c*Z^d with d >= 1.
RatFun geometric_series_tail(const RatFun& x, long start);

struct MonomialDecomposition {
    CycloNumber c;
    long k = 0;
    LaurentPoly p1;  // product of (1 - alpha Z), p1(0) = 1
    LaurentPoly p2;  // product of (1 - beta Z), p2(0) = 1
};

// gamma = c * Z^k * p1(Z) / p2(q^-1 Z^-1) with the factor roots drawn from candidates.
MonomialDecomposition monomial_decompose(const RatFun& gamma, int q,
                                         const std::vector<CycloNumber>& candidates);

// c * Z^k * p1(Z) / p2(q^-1 Z^-1)
RatFun reassemble(const MonomialDecomposition& d, int q);

}  // namespace ssc
