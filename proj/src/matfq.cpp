#include "sscgamma/matfq.hpp"

#include "sscgamma/error.hpp"

#include <cstdlib>
#include <sstream>

namespace ssc {

namespace {

int modq(long v, int q) {
    long r = v % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

int inv_mod(int a, int q) {
    long result = 1, base = a, e = q - 2;
    while (e > 0) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<int>(result);
}

}  // namespace

MatFq::MatFq(int rows, int cols, int q) : rows_(rows), cols_(cols), q_(q), data_(static_cast<size_t>(rows) * cols, 0) {}

MatFq MatFq::identity(int m, int q) {
    MatFq r(m, m, q);
    for (int i = 0; i < m; ++i) r.set(i, i, 1);
    return r;
}

MatFq MatFq::permutation(const std::vector<int>& perm, int q) {
    const int m = static_cast<int>(perm.size());
    MatFq r(m, m, q);
    for (int j = 0; j < m; ++j) r.set(perm[j], j, 1);
    return r;
}

MatFq MatFq::diagonal(const std::vector<int>& entries, int q) {
    const int m = static_cast<int>(entries.size());
    MatFq r(m, m, q);
    for (int i = 0; i < m; ++i) r.set(i, i, entries[i]);
    return r;
}

void MatFq::set(int i, int j, long v) { data_[i * cols_ + j] = modq(v, q_); }

MatFq MatFq::operator*(const MatFq& o) const {
    if (cols_ != o.rows_ || q_ != o.q_) throw DomainError("matrix dimension or field mismatch");
    MatFq r(rows_, o.cols_, q_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = data_[i * cols_ + k];
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.data_[i * o.cols_ + j] += a * o.data_[k * o.cols_ + j];
        }
    for (auto& v : r.data_) v %= q_;
    return r;
}

int MatFq::det() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    MatFq a = *this;
    long det = 1;
    const int m = rows_;
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) return 0;
        if (p != c) {
            for (int j = 0; j < m; ++j) std::swap(a.data_[p * m + j], a.data_[c * m + j]);
            det = -det;
        }
        det = det * a(c, c) % q_;
        int inv = inv_mod(a(c, c), q_);
        for (int i = c + 1; i < m; ++i) {
            if (a(i, c) == 0) continue;
            long f = static_cast<long>(a(i, c)) * inv % q_;
            for (int j = c; j < m; ++j) a.set(i, j, a(i, j) - f * a(c, j));
        }
    }
    return modq(det, q_);
}

std::optional<MatFq> MatFq::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const int m = rows_;
    MatFq a = *this;
    MatFq r = identity(m, q_);
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) return std::nullopt;
        for (int j = 0; j < m; ++j) {
            std::swap(a.data_[p * m + j], a.data_[c * m + j]);
            std::swap(r.data_[p * m + j], r.data_[c * m + j]);
        }
        long inv = inv_mod(a(c, c), q_);
        for (int j = 0; j < m; ++j) {
            a.set(c, j, a(c, j) * inv);
            r.set(c, j, r(c, j) * inv);
        }
        for (int i = 0; i < m; ++i) {
            if (i == c || a(i, c) == 0) continue;
            long f = a(i, c);
            for (int j = 0; j < m; ++j) {
                a.set(i, j, a(i, j) - f * a(c, j));
                r.set(i, j, r(i, j) - f * r(c, j));
            }
        }
    }
    return r;
}

MatFq MatFq::transpose() const {
    MatFq r(cols_, rows_, q_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
    return r;
}

bool MatFq::is_upper_unipotent() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool MatFq::is_strictly_lower() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool MatFq::is_strictly_upper() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i && j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool MatFq::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

bool MatFq::is_identity() const { return rows_ == cols_ && *this == identity(rows_, q_); }

std::optional<std::vector<int>> MatFq::as_permutation() const {
    if (rows_ != cols_) return std::nullopt;
    std::vector<int> perm(cols_, -1);
    std::vector<bool> used(rows_, false);
    for (int j = 0; j < cols_; ++j) {
        for (int i = 0; i < rows_; ++i) {
            int v = (*this)(i, j);
            if (v == 0) continue;
            if (v != 1 || perm[j] != -1 || used[i]) return std::nullopt;
            perm[j] = i;
            used[i] = true;
        }
        if (perm[j] == -1) return std::nullopt;
    }
    return perm;
}

uint64_t MatFq::encode() const {
    uint64_t code = 0;
    for (int v : data_) code = code * static_cast<uint64_t>(q_) + static_cast<uint64_t>(v);
    return code;
}

std::string MatFq::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

BruhatDecomp bruhat_decompose(const MatFq& g) {
    if (g.rows() != g.cols()) throw DomainError("Bruhat decomposition needs a square matrix");
    const int m = g.rows();
    const int q = g.q();
    MatFq a = g;
    MatFq u1 = MatFq::identity(m, q);
    std::vector<int> pivot(m, -1);
    for (int i = m - 1; i >= 0; --i) {
        int c = 0;
        while (c < m && a(i, c) == 0) ++c;
        if (c == m) throw DomainError("Bruhat decomposition of a singular matrix");
        pivot[i] = c;
        long inv = inv_mod(a(i, c), q);
        for (int k = 0; k < i; ++k) {
            if (a(k, c) == 0) continue;
            long f = a(k, c) * inv % q;
            // row k -= f * row i, recorded as column i += f * column k on u1
            for (int j = 0; j < m; ++j) a.set(k, j, a(k, j) - f * a(i, j));
            for (int r = 0; r < m; ++r) u1.set(r, i, u1(r, i) + f * u1(r, k));
        }
    }
    // w has its 1 in row i, column pivot[i]
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[pivot[i]] = i;
    MatFq w = MatFq::permutation(perm, q);
    MatFq b = w.transpose() * a;
    std::vector<int> diag(m);
    for (int i = 0; i < m; ++i) diag[i] = b(i, i);
    MatFq d = MatFq::diagonal(diag, q);
    std::vector<int> dinv(m);
    for (int i = 0; i < m; ++i) dinv[i] = inv_mod(diag[i], q);
    MatFq u2 = MatFq::diagonal(dinv, q) * b;
    return BruhatDecomp{u1, w, d, u2};
}

MatFq block_antidiag(int m, int l, int q) {
    if (l < 0 || l > m) throw DomainError("block size out of range");
    std::vector<int> perm(m);
    // first l columns carry I_l in the bottom rows, the rest carry I_(m-l) in the top rows
    for (int j = 0; j < l; ++j) perm[j] = m - l + j;
    for (int j = l; j < m; ++j) perm[j] = j - l;
    return MatFq::permutation(perm, q);
}

long enumeration_budget() {
    const char* env = std::getenv("SSC_ENUM_BUDGET");
    if (env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 2000000;
}

void check_budget(long count, const std::string& what) {
    if (count > enumeration_budget())
        throw BudgetExceeded(what + " needs " + std::to_string(count) + " elements, budget is " +
                             std::to_string(enumeration_budget()));
}

namespace {

long ipow_l(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Every matrix whose free positions take all values in F_q.
std::vector<MatFq> enumerate_pattern(const MatFq& base, const std::vector<std::pair<int, int>>& free,
                                     const std::string& what) {
    const int q = base.q();
    long total = ipow_l(q, static_cast<long>(free.size()));
    check_budget(total, what);
    std::vector<MatFq> out;
    out.reserve(total);
    for (long code = 0; code < total; ++code) {
        MatFq a = base;
        long c = code;
        for (size_t k = free.size(); k-- > 0;) {
            a.set(free[k].first, free[k].second, c % q);
            c /= q;
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

std::vector<MatFq> enumerate_gl(int m, int q) {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) free.emplace_back(i, j);
    auto all = enumerate_pattern(MatFq(m, m, q), free, "GL_" + std::to_string(m) + "(F_" + std::to_string(q) + ")");
    std::vector<MatFq> out;
    for (auto& a : all)
        if (a.det() != 0) out.push_back(std::move(a));
    return out;
}

std::vector<MatFq> enumerate_upper_unipotent(int m, int q) {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) free.emplace_back(i, j);
    return enumerate_pattern(MatFq::identity(m, q), free, "upper unipotent group");
}

std::vector<MatFq> enumerate_lower_nilpotent(int m, int q) {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) free.emplace_back(i, j);
    return enumerate_pattern(MatFq(m, m, q), free, "lower nilpotent matrices");
}

std::vector<MatFq> enumerate_invertible_diagonal(int m, int q) {
    long total = ipow_l(q - 1, m);
    check_budget(total, "diagonal torus");
    std::vector<MatFq> out;
    for (long code = 0; code < total; ++code) {
        std::vector<int> entries(m);
        long c = code;
        for (int i = m - 1; i >= 0; --i) {
            entries[i] = static_cast<int>(c % (q - 1)) + 1;
            c /= (q - 1);
        }
        out.push_back(MatFq::diagonal(entries, q));
    }
    return out;
}

}  // namespace ssc
