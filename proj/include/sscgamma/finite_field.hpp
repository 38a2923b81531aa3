#pragma once

#include "sscgamma/cyclotomic.hpp"

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace ssc {

bool is_prime(long n);
// Smallest positive generator of F_q^x.
int primitive_root(int q);

// F_q for a prime q, with discrete logarithms against the smallest primitive root.
class PrimeField {
public:
    explicit PrimeField(int q);

    int q() const { return q_; }
    int generator() const { return g_; }
    int reduce(long x) const { return static_cast<int>(mod_floor(x, q_)); }
    int mul(int a, int b) const { return static_cast<int>((static_cast<long>(a) * b) % q_); }
    int inv(int a) const;
    // g^k
    int exp(long k) const { return (*powers_)[mod_floor(k, q_ - 1)]; }
    // k in [0, q-1) with g^k = x; x must be nonzero.
    int dlog(long x) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

private:
    int q_;
    int g_;
    std::shared_ptr<const std::vector<int>> powers_;
    std::shared_ptr<const std::vector<int>> logs_;
};

// chi(g^k) = zeta_(q-1)^(exponent*k)
struct MultChar {
    PrimeField field;
    int exponent;

    MultChar(const PrimeField& f, long e);
    bool is_trivial() const { return exponent == 0; }
    MultChar operator*(const MultChar& o) const;
    MultChar pow(long e) const;
    MultChar inverse() const { return pow(-1); }
};

// psi_b(x) = zeta_q^(b*x)
struct AddChar {
    PrimeField field;
    int shift;

    AddChar(const PrimeField& f, long b);
};

// Values are embedded at the given conductor; 0 means the character's natural one.
CycloNumber char_eval(const MultChar& chi, long x, int conductor = 0);
CycloNumber char_eval(const AddChar& psi, long x, int conductor = 0);

// sum over nonzero lambda of chi(lambda) psi(-lambda)
CycloNumber gauss_sum(const MultChar& chi, const AddChar& psi, int conductor = 0);

struct GroupOrders {
    mpz_class gl;         // |GL_m(F_q)|
    mpz_class unipotent;  // |N_m(F_q)|
    mpz_class index;      // [GL_m : N_m]
    mpz_class nilpotent;  // lower nilpotent matrices
};

GroupOrders group_orders(int m, int q);

mpz_class ipow(long base, long e);
long binom2(long m);

}  // namespace ssc
