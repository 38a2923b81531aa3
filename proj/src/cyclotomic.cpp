#include "sscgamma/cyclotomic.hpp"

#include "sscgamma/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ssc {

long gcd_l(long a, long b) { return std::gcd(a, b); }

long lcm_l(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw DomainError("cyclotomic polynomial needs a positive index");
    // X^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<long> divisor = cyclotomic_polynomial(d);
        int deg = static_cast<int>(poly.size()) - 1;
        int dd = static_cast<int>(divisor.size()) - 1;
        std::vector<long> quot(deg - dd + 1, 0);
        for (int k = deg; k >= dd; --k) {
            long c = poly[k];
            quot[k - dd] = c;
            if (c == 0) continue;
            for (int i = 0; i <= dd; ++i) poly[k - dd + i] -= c * divisor[i];
        }
        poly = std::move(quot);
    }
    return poly;
}

CycloTable::CycloTable(int conductor) : conductor_(conductor) {
    phi_poly_ = cyclotomic_polynomial(conductor);
    degree_ = static_cast<int>(phi_poly_.size()) - 1;
    for (int i = 0; i < degree_; ++i)
        if (phi_poly_[i] != 0) reducer_.emplace_back(i, phi_poly_[i]);

    powers_.resize(conductor);
    std::vector<long> cur(degree_, 0);
    cur[0] = 1;
    for (int k = 0; k < conductor; ++k) {
        for (int i = 0; i < degree_; ++i)
            if (cur[i] != 0) powers_[k].emplace_back(i, cur[i]);
        // multiply by X
        long top = degree_ > 0 ? cur[degree_ - 1] : 0;
        for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        if (degree_ > 0) cur[0] = 0;
        if (top != 0)
            for (auto [i, f] : reducer_) cur[i] -= top * f;
    }
}

const CycloTable& CycloTable::get(int conductor) {
    if (conductor < 1) throw DomainError("conductor must be positive");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CycloTable>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(conductor);
    if (it != registry.end()) return *it->second;
    auto table = std::unique_ptr<CycloTable>(new CycloTable(conductor));
    const CycloTable& ref = *table;
    registry.emplace(conductor, std::move(table));
    return ref;
}

const std::vector<std::pair<int, long>>& CycloTable::power(long k) const {
    return powers_[mod_floor(k, conductor_)];
}

namespace detail {

bool QZeta::is_zero() const {
    for (const auto& c : num)
        if (c != 0) return false;
    return true;
}

void QZeta::normalize() {
    if (den < 0) {
        den = -den;
        for (auto& c : num) c = -c;
    }
    if (den == 1) return;
    mpz_class g = den;
    for (const auto& c : num) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (is_zero()) {
        den = 1;
        return;
    }
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

namespace {

using detail::QZeta;

QZeta zero_of(const CycloTable& t) {
    QZeta z;
    z.num.assign(t.degree(), 0);
    return z;
}

QZeta ensure_full(const QZeta& x, const CycloTable& t) {
    return x.num.empty() ? zero_of(t) : x;
}

// Drops an all-zero value to the empty representation.
void compact(QZeta& x) {
    if (x.is_zero()) {
        x.num.clear();
        x.den = 1;
    }
}

void add_into(QZeta& acc, const QZeta& y, bool subtract) {
    if (y.num.empty()) return;
    if (acc.num.empty()) acc.num.assign(y.num.size(), 0);
    if (acc.den == y.den) {
        for (size_t i = 0; i < y.num.size(); ++i) {
            if (y.num[i] == 0) continue;
            if (subtract) acc.num[i] -= y.num[i];
            else acc.num[i] += y.num[i];
        }
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), acc.den.get_mpz_t(), y.den.get_mpz_t());
        mpz_class fa = y.den / g;
        mpz_class fy = acc.den / g;
        for (size_t i = 0; i < acc.num.size(); ++i) {
            if (acc.num[i] != 0) acc.num[i] *= fa;
            if (y.num[i] == 0) continue;
            if (subtract) mpz_submul(acc.num[i].get_mpz_t(), y.num[i].get_mpz_t(), fy.get_mpz_t());
            else mpz_addmul(acc.num[i].get_mpz_t(), y.num[i].get_mpz_t(), fy.get_mpz_t());
        }
        acc.den *= fa;
    }
    acc.normalize();
}

QZeta sum(const QZeta& x, const QZeta& y, bool subtract) {
    QZeta r = x;
    add_into(r, y, subtract);
    return r;
}

QZeta scale(const QZeta& x, const mpz_class& k) {
    if (x.num.empty() || k == 0) return QZeta{};
    QZeta r = x;
    for (auto& c : r.num)
        if (c != 0) c *= k;
    r.normalize();
    return r;
}

QZeta product(const QZeta& x, const QZeta& y, const CycloTable& t) {
    if (x.num.empty() || y.num.empty()) return QZeta{};
    const int phi = t.degree();
    std::vector<int> xs, ys;
    for (int i = 0; i < phi; ++i)
        if (x.num[i] != 0) xs.push_back(i);
    for (int i = 0; i < phi; ++i)
        if (y.num[i] != 0) ys.push_back(i);
    if (xs.empty() || ys.empty()) return QZeta{};

    thread_local std::vector<mpz_class> buf;
    if (static_cast<int>(buf.size()) < 2 * phi) buf.resize(2 * phi);
    for (int i = 0; i < 2 * phi; ++i) buf[i] = 0;
    for (int i : xs)
        for (int j : ys) mpz_addmul(buf[i + j].get_mpz_t(), x.num[i].get_mpz_t(), y.num[j].get_mpz_t());
    for (int k = 2 * phi - 2; k >= phi; --k) {
        if (buf[k] == 0) continue;
        for (auto [i, f] : t.reducer()) {
            if (f > 0) mpz_submul_ui(buf[k - phi + i].get_mpz_t(), buf[k].get_mpz_t(), static_cast<unsigned long>(f));
            else mpz_addmul_ui(buf[k - phi + i].get_mpz_t(), buf[k].get_mpz_t(), static_cast<unsigned long>(-f));
        }
        buf[k] = 0;
    }
    QZeta r;
    r.num.assign(buf.begin(), buf.begin() + phi);
    r.den = x.den * y.den;
    r.normalize();
    return r;
}

// Image of x under zeta_N -> zeta_M^(mult), where the target table has conductor M.
QZeta map_powers(const QZeta& x, const CycloTable& target, long mult) {
    if (x.num.empty()) return QZeta{};
    QZeta r = zero_of(target);
    for (size_t i = 0; i < x.num.size(); ++i) {
        if (x.num[i] == 0) continue;
        for (auto [j, f] : target.power(static_cast<long>(i) * mult)) {
            if (f > 0) mpz_addmul_ui(r.num[j].get_mpz_t(), x.num[i].get_mpz_t(), static_cast<unsigned long>(f));
            else mpz_submul_ui(r.num[j].get_mpz_t(), x.num[i].get_mpz_t(), static_cast<unsigned long>(-f));
        }
    }
    r.den = x.den;
    r.normalize();
    return r;
}

bool equal(const QZeta& x, const QZeta& y) {
    bool xz = x.num.empty() || x.is_zero();
    bool yz = y.num.empty() || y.is_zero();
    if (xz || yz) return xz && yz;
    return x.den == y.den && x.num == y.num;
}

std::optional<mpq_class> scalar_value(const QZeta& x) {
    if (x.num.empty()) return mpq_class(0);
    for (size_t i = 1; i < x.num.size(); ++i)
        if (x.num[i] != 0) return std::nullopt;
    mpq_class v(x.num[0], x.den);
    v.canonicalize();
    return v;
}

QZeta from_rational(const mpq_class& v, const CycloTable& t) {
    QZeta r = zero_of(t);
    r.num[0] = v.get_num();
    r.den = v.get_den();
    return r;
}

// Solves the square or tall system A c = b over Q; returns nullopt if inconsistent
// or singular.
std::optional<std::vector<mpq_class>> solve_linear(std::vector<std::vector<mpq_class>> a,
                                                   std::vector<mpq_class> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        mpq_class inv = 1 / a[r][c];
        for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (size_t k = c; k < cols; ++k)
                if (a[r][k] != 0) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != cols) return std::nullopt;
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<mpq_class> sol(cols);
    for (size_t i = 0; i < r; ++i) sol[pivot_col[i]] = b[i];
    return sol;
}

QZeta from_mpq(const std::vector<mpq_class>& v) {
    QZeta r;
    r.num.assign(v.size(), 0);
    mpz_class den = 1;
    for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (size_t i = 0; i < v.size(); ++i) r.num[i] = v[i].get_num() * (den / v[i].get_den());
    r.den = den;
    r.normalize();
    return r;
}

std::vector<mpq_class> to_mpq(const QZeta& x, int degree) {
    std::vector<mpq_class> out(degree, 0);
    if (x.num.empty()) return out;
    for (int i = 0; i < degree; ++i) {
        out[i] = mpq_class(x.num[i], x.den);
        out[i].canonicalize();
    }
    return out;
}

QZeta conjugate_of(const QZeta& x, const CycloTable& t) {
    return map_powers(x, t, t.conductor() - 1);
}

QZeta invert_plain(const QZeta& x, const CycloTable& t) {
    if (x.num.empty() || x.is_zero()) throw DivisionByZero("inverse of zero");
    if (auto s = scalar_value(x)) return from_rational(1 / *s, t);
    QZeta xc = conjugate_of(x, t);
    QZeta norm = product(x, xc, t);
    if (auto s = scalar_value(norm)) return scale(QZeta{xc.num, xc.den * s->get_num()}, s->get_den());
    // Column j of the multiplication matrix holds x * X^j.
    const int phi = t.degree();
    std::vector<std::vector<mpq_class>> mat(phi, std::vector<mpq_class>(phi));
    std::vector<mpz_class> cur = x.num;
    for (int j = 0; j < phi; ++j) {
        for (int i = 0; i < phi; ++i) mat[i][j] = mpq_class(cur[i], x.den);
        mpz_class top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (auto [i, f] : t.reducer()) cur[i] -= top * f;
    }
    for (auto& row : mat)
        for (auto& c : row) c.canonicalize();
    std::vector<mpq_class> rhs(phi, 0);
    rhs[0] = 1;
    auto sol = solve_linear(mat, rhs);
    if (!sol) throw DivisionByZero("cyclotomic element is not invertible");
    return from_mpq(*sol);
}

int merge_tag(int a, int b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw DomainError("mixing formal square roots of different primes");
}

}  // namespace

CycloNumber::CycloNumber() : CycloNumber(0L) {}

CycloNumber::CycloNumber(long value) : table_(&CycloTable::get(1)) {
    a_ = zero_of(*table_);
    a_.num[0] = value;
}

CycloNumber::CycloNumber(const CycloTable* table, QZeta a, QZeta b, int q_tag)
    : table_(table), a_(ensure_full(a, *table)), b_(std::move(b)), q_tag_(q_tag) {
    compact(b_);
}

CycloNumber CycloNumber::rational(const mpq_class& value, int conductor) {
    const CycloTable& t = CycloTable::get(conductor);
    mpq_class v = value;
    v.canonicalize();
    return CycloNumber(&t, from_rational(v, t), QZeta{}, 0);
}

CycloNumber CycloNumber::root_of_unity(int order, long index, int conductor) {
    if (order < 1) throw DomainError("root of unity order must be positive");
    if (conductor == 0) conductor = order;
    if (conductor % order != 0) throw DomainError("order does not divide the conductor");
    const CycloTable& t = CycloTable::get(conductor);
    QZeta a = zero_of(t);
    for (auto [j, f] : t.power(mod_floor(index, order) * (conductor / order))) a.num[j] = f;
    return CycloNumber(&t, std::move(a), QZeta{}, 0);
}

CycloNumber CycloNumber::q_half_power(int q, long k, int conductor) {
    if (q < 2) throw DomainError("q must be a prime");
    long whole = k >= 0 ? k / 2 : -((-k + 1) / 2);
    bool odd = mod_floor(k, 2) == 1;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(whole < 0 ? -whole : whole));
    mpq_class v = whole >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
    v.canonicalize();
    const CycloTable& t = CycloTable::get(conductor);
    if (!odd) return CycloNumber(&t, from_rational(v, t), QZeta{}, 0);
    return CycloNumber(&t, QZeta{}, from_rational(v, t), q);
}

CycloNumber CycloNumber::from_coeffs(int conductor, const std::vector<mpq_class>& coeffs,
                                     const std::vector<mpq_class>& sqrt_part, int q_tag) {
    const CycloTable& t = CycloTable::get(conductor);
    if (static_cast<int>(coeffs.size()) != t.degree())
        throw DomainError("coefficient count does not match the field degree");
    if (!sqrt_part.empty() && static_cast<int>(sqrt_part.size()) != t.degree())
        throw DomainError("sqrt part length does not match the field degree");
    QZeta a = from_mpq(coeffs);
    QZeta b = sqrt_part.empty() ? QZeta{} : from_mpq(sqrt_part);
    compact(b);
    if (!b.num.empty() && q_tag < 2) throw DomainError("nonzero sqrt part requires q_tag");
    return CycloNumber(&t, std::move(a), std::move(b), b.num.empty() ? 0 : q_tag);
}

std::vector<mpq_class> CycloNumber::coeffs() const { return to_mpq(a_, table_->degree()); }

std::vector<mpq_class> CycloNumber::sqrt_part() const {
    if (b_.num.empty()) return {};
    return to_mpq(b_, table_->degree());
}

bool CycloNumber::is_zero() const { return b_.num.empty() && a_.is_zero(); }

bool CycloNumber::is_one() const {
    auto r = as_rational();
    return r && *r == 1;
}

std::optional<mpq_class> CycloNumber::as_rational() const {
    if (!b_.num.empty()) return std::nullopt;
    return scalar_value(a_);
}

std::optional<long> CycloNumber::root_exponent() const {
    if (!b_.num.empty() || a_.den != 1) return std::nullopt;
    const int n = table_->conductor();
    for (long k = 0; k < n; ++k) {
        const auto& pw = table_->power(k);
        bool match = true;
        size_t idx = 0;
        for (int i = 0; i < table_->degree() && match; ++i) {
            long expect = 0;
            if (idx < pw.size() && pw[idx].first == i) expect = pw[idx++].second;
            if (a_.num[i] != expect) match = false;
        }
        if (match) return k;
    }
    return std::nullopt;
}

CycloNumber CycloNumber::operator-() const {
    return CycloNumber(table_, scale(a_, -1), scale(b_, -1), q_tag_);
}

namespace {

std::pair<CycloNumber, CycloNumber> unify(const CycloNumber& x, const CycloNumber& y) {
    if (x.conductor() == y.conductor()) return {x, y};
    int m = static_cast<int>(lcm_l(x.conductor(), y.conductor()));
    return {x.embed(m), y.embed(m)};
}

}  // namespace

CycloNumber operator+(const CycloNumber& x, const CycloNumber& y) {
    if (x.conductor() != y.conductor()) {
        auto [u, v] = unify(x, y);
        return u + v;
    }
    return CycloNumber(x.table_, sum(x.a_, y.a_, false), sum(x.b_, y.b_, false), merge_tag(x.q_tag_, y.q_tag_));
}

CycloNumber operator-(const CycloNumber& x, const CycloNumber& y) {
    if (x.conductor() != y.conductor()) {
        auto [u, v] = unify(x, y);
        return u - v;
    }
    return CycloNumber(x.table_, sum(x.a_, y.a_, true), sum(x.b_, y.b_, true), merge_tag(x.q_tag_, y.q_tag_));
}

CycloNumber operator*(const CycloNumber& x, const CycloNumber& y) {
    if (x.conductor() != y.conductor()) {
        auto [u, v] = unify(x, y);
        return u * v;
    }
    const CycloTable& t = *x.table_;
    int tag = merge_tag(x.q_tag_, y.q_tag_);
    QZeta a = product(x.a_, y.a_, t);
    QZeta b;
    if (!x.b_.num.empty() || !y.b_.num.empty()) {
        b = product(x.a_, y.b_, t);
        add_into(b, product(x.b_, y.a_, t), false);
        if (!x.b_.num.empty() && !y.b_.num.empty())
            add_into(a, scale(product(x.b_, y.b_, t), tag), false);
    }
    compact(b);
    return CycloNumber(&t, std::move(a), std::move(b), tag);
}

CycloNumber operator/(const CycloNumber& x, const CycloNumber& y) { return x * y.inverse(); }

bool operator==(const CycloNumber& x, const CycloNumber& y) {
    if (x.conductor() != y.conductor()) {
        auto [u, v] = unify(x, y);
        return u == v;
    }
    if (!equal(x.a_, y.a_) || !equal(x.b_, y.b_)) return false;
    if (!x.b_.num.empty() && x.q_tag_ != y.q_tag_) return false;
    return true;
}

CycloNumber CycloNumber::inverse() const {
    const CycloTable& t = *table_;
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (b_.num.empty()) return CycloNumber(table_, invert_plain(a_, t), QZeta{}, q_tag_);
    // (a + b r)^-1 = (a - b r) / (a^2 - q b^2)
    QZeta denom = product(a_, a_, t);
    add_into(denom, scale(product(b_, b_, t), q_tag_), true);
    if (denom.num.empty() || denom.is_zero())
        throw DegenerateExtension("a^2 - q b^2 vanishes for a nonzero element");
    QZeta dinv = invert_plain(denom, t);
    return CycloNumber(table_, product(a_, dinv, t), scale(product(b_, dinv, t), -1), q_tag_);
}

CycloNumber CycloNumber::conjugate() const {
    return CycloNumber(table_, conjugate_of(a_, *table_), conjugate_of(b_, *table_), q_tag_);
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber result = CycloNumber::rational(1, conductor());
    CycloNumber base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

CycloNumber CycloNumber::embed(int conductor) const {
    if (conductor < 1 || conductor % this->conductor() != 0)
        throw DomainError("embedding conductor must be a multiple of the current one");
    if (conductor == this->conductor()) return *this;
    const CycloTable& t = CycloTable::get(conductor);
    long mult = conductor / this->conductor();
    return CycloNumber(&t, map_powers(a_, t, mult), map_powers(b_, t, mult), q_tag_);
}

CycloNumber embed_conductor(const CycloNumber& x, int conductor) { return x.embed(conductor); }

namespace {

std::optional<QZeta> restrict_part(const QZeta& x, const CycloTable& from, const CycloTable& to) {
    if (x.num.empty()) return QZeta{};
    if (auto s = scalar_value(x)) return from_rational(*s, to);
    const int rows = from.degree();
    const int cols = to.degree();
    long mult = from.conductor() / to.conductor();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols, 0));
    for (int j = 0; j < cols; ++j)
        for (auto [i, f] : from.power(static_cast<long>(j) * mult)) a[i][j] = f;
    std::vector<mpq_class> b = to_mpq(x, rows);
    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    return from_mpq(*sol);
}

}  // namespace

bool CycloNumber::lies_in(int conductor) const {
    if (conductor < 1 || this->conductor() % conductor != 0) return false;
    const CycloTable& t = CycloTable::get(conductor);
    return restrict_part(a_, *table_, t).has_value() && restrict_part(b_, *table_, t).has_value();
}

CycloNumber CycloNumber::restrict_to(int conductor) const {
    if (conductor < 1 || this->conductor() % conductor != 0)
        throw DomainError("restriction conductor must divide the current one");
    if (conductor == this->conductor()) return *this;
    const CycloTable& t = CycloTable::get(conductor);
    auto a = restrict_part(a_, *table_, t);
    auto b = restrict_part(b_, *table_, t);
    if (!a || !b) throw DomainError("value does not lie in the requested subfield");
    return CycloNumber(&t, std::move(*a), std::move(*b), q_tag_);
}

CycloNumber CycloNumber::reduce_conductor() const {
    const int n = conductor();
    // Q(zeta_N) = Q(zeta_2N) for odd N; the canonical choice avoids N = 2 mod 4.
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || d % 4 == 2) continue;
        if (lies_in(d)) return restrict_to(d);
    }
    return *this;
}

std::string CycloNumber::to_string() const {
    auto part = [&](const QZeta& x) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < x.num.size(); ++i) {
            if (x.num[i] == 0) continue;
            mpq_class c(x.num[i], x.den);
            c.canonicalize();
            if (!first) os << " + ";
            first = false;
            os << "(" << c.get_str() << ")";
            if (i > 0) os << "*z" << conductor() << "^" << i;
        }
        if (first) os << "0";
        return os.str();
    };
    std::string s = part(a_);
    if (!b_.num.empty()) s = "[" + s + "] + [" + part(b_) + "]*sqrt(" + std::to_string(q_tag_) + ")";
    return s;
}

}  // namespace ssc
