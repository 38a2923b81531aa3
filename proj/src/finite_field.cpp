#include "sscgamma/finite_field.hpp"

#include "sscgamma/error.hpp"

#include <string>

namespace ssc {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int primitive_root(int q) {
    if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
    if (q == 2) return 1;
    for (int g = 2; g < q; ++g) {
        long x = 1;
        int order = 0;
        do {
            x = (x * g) % q;
            ++order;
        } while (x != 1);
        if (order == q - 1) return g;
    }
    throw DomainError("no primitive root found");
}

PrimeField::PrimeField(int q) : q_(q), g_(primitive_root(q)) {
    auto powers = std::make_shared<std::vector<int>>(q - 1);
    auto logs = std::make_shared<std::vector<int>>(q, -1);
    long x = 1;
    for (int k = 0; k < q - 1; ++k) {
        (*powers)[k] = static_cast<int>(x);
        (*logs)[x] = k;
        x = (x * g_) % q;
    }
    powers_ = std::move(powers);
    logs_ = std::move(logs);
}

int PrimeField::dlog(long x) const {
    int r = reduce(x);
    if (r == 0) throw DomainError("discrete log of zero");
    return (*logs_)[r];
}

int PrimeField::inv(int a) const {
    if (reduce(a) == 0) throw DivisionByZero("inverse of zero in F_q");
    return exp(-dlog(a));
}

MultChar::MultChar(const PrimeField& f, long e) : field(f), exponent(static_cast<int>(mod_floor(e, f.q() - 1))) {}

MultChar MultChar::operator*(const MultChar& o) const {
    if (!(field == o.field)) throw DomainError("characters over different fields");
    return MultChar(field, exponent + o.exponent);
}

MultChar MultChar::pow(long e) const { return MultChar(field, static_cast<long>(exponent) * e); }

AddChar::AddChar(const PrimeField& f, long b) : field(f), shift(f.reduce(b)) {
    if (shift == 0) throw DomainError("additive character shift must be nonzero");
}

CycloNumber char_eval(const MultChar& chi, long x, int conductor) {
    const int order = chi.field.q() - 1;
    conductor = conductor == 0 ? order : static_cast<int>(lcm_l(conductor, order));
    return CycloNumber::root_of_unity(order, static_cast<long>(chi.exponent) * chi.field.dlog(x), conductor);
}

CycloNumber char_eval(const AddChar& psi, long x, int conductor) {
    const int q = psi.field.q();
    conductor = conductor == 0 ? q : static_cast<int>(lcm_l(conductor, q));
    return CycloNumber::root_of_unity(q, static_cast<long>(psi.shift) * psi.field.reduce(x), conductor);
}

CycloNumber gauss_sum(const MultChar& chi, const AddChar& psi, int conductor) {
    if (!(chi.field == psi.field)) throw DomainError("characters over different fields");
    const int q = chi.field.q();
    conductor = static_cast<int>(lcm_l(conductor == 0 ? 1 : conductor, lcm_l(q, q - 1)));
    CycloNumber acc = CycloNumber::rational(0, conductor);
    for (int x = 1; x < q; ++x) acc += char_eval(chi, x, conductor) * char_eval(psi, -x, conductor);
    return acc;
}

mpz_class ipow(long base, long e) {
    mpz_class r;
    mpz_class b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

long binom2(long m) { return m * (m - 1) / 2; }

GroupOrders group_orders(int m, int q) {
    if (m < 1) throw DomainError("matrix size must be positive");
    if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
    GroupOrders o;
    o.gl = 1;
    mpz_class qm = ipow(q, m);
    for (int i = 0; i < m; ++i) o.gl *= qm - ipow(q, i);
    o.unipotent = ipow(q, binom2(m));
    o.index = o.gl / o.unipotent;
    o.nilpotent = ipow(q, binom2(m));
    return o;
}

}  // namespace ssc
