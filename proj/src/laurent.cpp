#include "sscgamma/laurent.hpp"

#include "sscgamma/error.hpp"

#include <sstream>

namespace ssc {

namespace {

CycloNumber zero_like(const CycloNumber& x) { return CycloNumber::rational(0, x.conductor()); }

}  // namespace

LaurentPoly::LaurentPoly(const CycloNumber& constant) : min_deg_(0), coeffs_{constant} { trim(); }

LaurentPoly::LaurentPoly(long min_deg, std::vector<CycloNumber> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const CycloNumber& c, long degree) { return LaurentPoly(degree, {c}); }

LaurentPoly LaurentPoly::linear_factor(const CycloNumber& alpha) {
    return LaurentPoly(0, {CycloNumber::rational(1, alpha.conductor()), -alpha});
}

void LaurentPoly::trim() {
    size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo].is_zero()) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    size_t hi = coeffs_.size();
    while (coeffs_[hi - 1].is_zero()) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<CycloNumber>(coeffs_.begin() + static_cast<long>(lo), coeffs_.begin() + static_cast<long>(hi));
        min_deg_ += static_cast<long>(lo);
    }
}

CycloNumber LaurentPoly::coeff(long degree) const {
    if (is_zero() || degree < min_deg_ || degree > max_deg()) return CycloNumber(0L);
    return coeffs_[degree - min_deg_];
}

CycloNumber LaurentPoly::eval(const CycloNumber& z) const {
    if (is_zero()) return zero_like(z);
    CycloNumber acc = zero_like(z);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc * z.pow(min_deg_);
}

LaurentPoly LaurentPoly::shift(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_deg_ += k;
    return r;
}

LaurentPoly LaurentPoly::substitute_inverse(const CycloNumber& c) const {
    if (is_zero()) return *this;
    std::vector<CycloNumber> out(coeffs_.size());
    CycloNumber cinv = c.inverse();
    // coefficient of Z^(-d) is a_d c^d
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        long d = min_deg_ + static_cast<long>(i);
        out[coeffs_.size() - 1 - i] = coeffs_[i] * (d >= 0 ? c.pow(d) : cinv.pow(-d));
    }
    return LaurentPoly(-max_deg(), std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    long lo = std::min(a.min_deg(), b.min_deg());
    long hi = std::max(a.max_deg(), b.max_deg());
    std::vector<CycloNumber> out(static_cast<size_t>(hi - lo + 1), zero_like(a.coeffs()[0]));
    for (size_t i = 0; i < a.coeffs().size(); ++i) out[a.min_deg() - lo + static_cast<long>(i)] = a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) {
        auto& slot = out[b.min_deg() - lo + static_cast<long>(i)];
        slot = subtract ? slot - b.coeffs()[i] : slot + b.coeffs()[i];
    }
    return LaurentPoly(lo, std::move(out));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<CycloNumber> out(a.coeffs().size() + b.coeffs().size() - 1, zero_like(a.coeffs()[0]));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return LaurentPoly(a.min_deg() + b.min_deg(), std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.min_deg() != b.min_deg() || a.coeffs().size() != b.coeffs().size()) return false;
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return false;
    return true;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    std::vector<CycloNumber> rem = a.coeffs();
    const auto& div = b.coeffs();
    const size_t db = div.size() - 1;
    if (rem.size() - 1 < db) return {LaurentPoly(), LaurentPoly(0, rem)};
    CycloNumber lead_inv = div.back().inverse();
    std::vector<CycloNumber> quot(rem.size() - db, zero_like(div[0]));
    for (size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        CycloNumber f = rem[k] * lead_inv;
        quot[k - db] = f;
        for (size_t i = 0; i <= db; ++i) rem[k - db + i] -= f * div[i];
    }
    rem.resize(db);
    return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return LaurentPoly();
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q.shift(a.min_deg() - b.min_deg());
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << "(" << coeffs_[i].to_string() << ")";
        long d = min_deg_ + static_cast<long>(i);
        if (d != 0) os << "*Z^" << d;
    }
    return os.str();
}

RatFun::RatFun() : num_(), den_(CycloNumber(1L)) {}

RatFun::RatFun(const CycloNumber& constant) : num_(constant), den_(CycloNumber::rational(1, constant.conductor())) {}

RatFun::RatFun(const LaurentPoly& num) : num_(num), den_(CycloNumber(1L)) { canonicalize(); }

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) { canonicalize(); }

RatFun RatFun::monomial(const CycloNumber& c, long degree) {
    return RatFun(LaurentPoly::monomial(c, degree), LaurentPoly(CycloNumber::rational(1, c.conductor())));
}

RatFun RatFun::unreduced(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    RatFun r;
    r.num_ = num;
    r.den_ = den;
    return r;
}

namespace {

// Monic gcd of two polynomials aligned at Z^0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = LaurentPoly::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    CycloNumber inv = a.coeffs().back().inverse();
    std::vector<CycloNumber> out;
    for (const auto& c : a.coeffs()) out.push_back(c * inv);
    return LaurentPoly(0, std::move(out));
}

}  // namespace

void RatFun::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(CycloNumber(1L));
        return;
    }
    num_ = num_.shift(-den_.min_deg());
    den_ = den_.shift(-den_.min_deg());
    if (den_.coeffs().size() > 1 && num_.coeffs().size() > 1) {
        try {
            LaurentPoly g = poly_gcd(den_, num_.shift(-num_.min_deg()));
            if (g.coeffs().size() > 1) {
                num_ = *LaurentPoly::divide_exact(num_, g);
                den_ = *LaurentPoly::divide_exact(den_, g);
            }
        } catch (const DegenerateExtension&) {
            // leave the pair unreduced
        }
    }
    const CycloNumber& c0 = den_.coeffs()[0];
    if (!c0.is_one()) {
        try {
            LaurentPoly inv(c0.inverse());
            num_ = num_ * inv;
            den_ = den_ * inv;
        } catch (const DegenerateExtension&) {
        }
    }
}

std::optional<std::pair<CycloNumber, long>> RatFun::as_monomial() const {
    if (num_.is_zero()) return std::make_pair(CycloNumber(0L), 0L);
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    return std::make_pair(num_.coeffs()[0] / den_.coeffs()[0], num_.min_deg() - den_.min_deg());
}

RatFun RatFun::operator-() const { return unreduced(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun result(CycloNumber(1L));
    RatFun base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

RatFun RatFun::substitute_inverse(const CycloNumber& c) const {
    return RatFun(num_.substitute_inverse(c), den_.substitute_inverse(c));
}

std::string RatFun::to_string() const { return "[" + num_.to_string() + "] / [" + den_.to_string() + "]"; }

RatFun geometric_series_tail(const RatFun& x, long start) {
    auto mono = x.as_monomial();
    if (!mono || mono->first.is_zero()) throw DomainError("geometric series ratio must be a nonzero monomial");
    auto [c, d] = *mono;
    if (d < 1) throw DomainError("geometric series ratio must have positive Z-degree");
    LaurentPoly one(CycloNumber::rational(1, c.conductor()));
    return RatFun(LaurentPoly::monomial(c.pow(start), d * start), one - LaurentPoly::monomial(c, d));
}

namespace {

bool is_root(const LaurentPoly& p, const CycloNumber& z) { return !p.is_zero() && p.eval(z).is_zero(); }

std::vector<CycloNumber> distinct_nonzero(const std::vector<CycloNumber>& v) {
    std::vector<CycloNumber> out;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        bool seen = false;
        for (const auto& y : out)
            if (y == x) seen = true;
        if (!seen) out.push_back(x);
    }
    return out;
}

}  // namespace

MonomialDecomposition monomial_decompose(const RatFun& gamma, int q, const std::vector<CycloNumber>& candidates) {
    if (gamma.is_zero()) throw DecompositionFailure("cannot decompose the zero function");
    const std::vector<CycloNumber> roots = distinct_nonzero(candidates);
    LaurentPoly num = gamma.num();
    LaurentPoly den = gamma.den();
    CycloNumber qq = CycloNumber::rational(q);
    CycloNumber one(1L);

    for (const auto& alpha : roots) {
        LaurentPoly f = LaurentPoly::linear_factor(alpha);
        CycloNumber z = alpha.inverse();
        while (is_root(num, z) && is_root(den, z)) {
            num = *LaurentPoly::divide_exact(num, f);
            den = *LaurentPoly::divide_exact(den, f);
        }
    }

    LaurentPoly p1(one);
    std::vector<CycloNumber> alphas;
    for (const auto& alpha : roots) {
        LaurentPoly f = LaurentPoly::linear_factor(alpha);
        CycloNumber z = alpha.inverse();
        while (is_root(num, z)) {
            num = *LaurentPoly::divide_exact(num, f);
            p1 = p1 * f;
            alphas.push_back(alpha);
        }
    }

    LaurentPoly p2(one);
    for (const auto& beta : roots) {
        CycloNumber z = beta / qq;
        // 1 - beta q^-1 Z^-1
        LaurentPoly f(-1, {-z, one});
        while (is_root(den, z)) {
            den = *LaurentPoly::divide_exact(den, f);
            p2 = p2 * LaurentPoly::linear_factor(beta);
            for (const auto& alpha : alphas)
                if (alpha * beta == qq) throw DecompositionFailure("p1 and p2 share a root");
        }
    }

    if (!num.is_monomial() || !den.is_monomial())
        throw DecompositionFailure("gamma factor is not of the candidate-root shape");
    MonomialDecomposition out;
    out.c = num.coeffs()[0] / den.coeffs()[0];
    out.k = num.min_deg() - den.min_deg();
    out.p1 = p1;
    out.p2 = p2;
    return out;
}

RatFun reassemble(const MonomialDecomposition& d, int q) {
    CycloNumber qinv = CycloNumber::rational(mpq_class(1, q));
    return RatFun(LaurentPoly::monomial(d.c, d.k) * d.p1, d.p2.substitute_inverse(qinv));
}

}  // namespace ssc
