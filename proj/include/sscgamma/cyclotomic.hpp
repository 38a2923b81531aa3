#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ssc {

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long euler_phi(long n);
long mod_floor(long a, long m);

// Reduction data for Q(zeta_N) = Q[X]/(Phi_N). Tables are built once per conductor and
// live for the whole process.
class CycloTable {
public:
    static const CycloTable& get(int conductor);

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }
    // Phi_N, low to high, monic of length degree()+1.
    const std::vector<long>& cyclotomic_poly() const { return phi_poly_; }
    // Nonzero (i, Phi_N[i]) for i < degree().
    const std::vector<std::pair<int, long>>& reducer() const { return reducer_; }
    // X^k mod Phi_N as sparse (index, integer coefficient), k taken modulo N.
    const std::vector<std::pair<int, long>>& power(long k) const;

private:
    explicit CycloTable(int conductor);

    int conductor_;
    int degree_;
    std::vector<long> phi_poly_;
    std::vector<std::pair<int, long>> reducer_;
    std::vector<std::vector<std::pair<int, long>>> powers_;
};

std::vector<long> cyclotomic_polynomial(int n);

namespace detail {

// Element of Q(zeta_N): integer numerators over one positive common denominator, kept
// in lowest terms. An empty numerator vector is zero (used for the sqrt(q) part).
struct QZeta {
    std::vector<mpz_class> num;
    mpz_class den = 1;

    bool is_zero() const;
    void normalize();
};

}  // namespace detail

// a + b*sqrt(q) with a, b in Q(zeta_N). sqrt(q) is a formal symbol obeying sqrt(q)^2 = q;
// it is never identified with a cyclotomic expression. q_tag is 0 until a nonzero
// sqrt part appears.
class CycloNumber {
public:
    CycloNumber();
    CycloNumber(long value);  // NOLINT(google-explicit-constructor)

    static CycloNumber rational(const mpq_class& value, int conductor = 1);
    // zeta_order^index, embedded at the given conductor (0 means conductor = order).
    static CycloNumber root_of_unity(int order, long index, int conductor = 0);
    // q^(k/2), with the odd part carried by the formal sqrt(q).
    static CycloNumber q_half_power(int q, long k, int conductor = 1);
    static CycloNumber from_coeffs(int conductor, const std::vector<mpq_class>& coeffs,
                                   const std::vector<mpq_class>& sqrt_part, int q_tag);

    int conductor() const { return table_->conductor(); }
    int q_tag() const { return q_tag_; }
    std::vector<mpq_class> coeffs() const;
    // Empty when the sqrt(q) part is zero.
    std::vector<mpq_class> sqrt_part() const;

    bool is_zero() const;
    bool is_one() const;
    bool has_sqrt_part() const { return !b_.num.empty(); }
    std::optional<mpq_class> as_rational() const;
    // k in [0, N) with *this == zeta_N^k, if *this is an N-th root of unity.
    std::optional<long> root_exponent() const;

    CycloNumber operator-() const;
    friend CycloNumber operator+(const CycloNumber& x, const CycloNumber& y);
    friend CycloNumber operator-(const CycloNumber& x, const CycloNumber& y);
    friend CycloNumber operator*(const CycloNumber& x, const CycloNumber& y);
    friend CycloNumber operator/(const CycloNumber& x, const CycloNumber& y);
    friend bool operator==(const CycloNumber& x, const CycloNumber& y);
    friend bool operator!=(const CycloNumber& x, const CycloNumber& y) { return !(x == y); }
    CycloNumber& operator+=(const CycloNumber& y) { return *this = *this + y; }
    CycloNumber& operator-=(const CycloNumber& y) { return *this = *this - y; }
    CycloNumber& operator*=(const CycloNumber& y) { return *this = *this * y; }

    CycloNumber inverse() const;
    // zeta_N -> zeta_N^(N-1); sqrt(q) is fixed.
    CycloNumber conjugate() const;
    CycloNumber pow(long e) const;

    CycloNumber embed(int conductor) const;
    // Same number over a divisor conductor; throws DomainError if it does not lie there.
    CycloNumber restrict_to(int conductor) const;
    // Smallest conductor whose field contains the number.
    CycloNumber reduce_conductor() const;
    bool lies_in(int conductor) const;

    std::string to_string() const;

private:
    CycloNumber(const CycloTable* table, detail::QZeta a, detail::QZeta b, int q_tag);

    const CycloTable* table_;
    detail::QZeta a_;
    detail::QZeta b_;
    int q_tag_ = 0;
};

CycloNumber embed_conductor(const CycloNumber& x, int conductor);

}  // namespace ssc
