#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssc {

// Dense matrix over F_q, entries kept in [0, q).
class MatFq {
public:
    MatFq() = default;
    MatFq(int rows, int cols, int q);

    static MatFq identity(int m, int q);
    // Column j is the standard vector e_(perm[j]).
    static MatFq permutation(const std::vector<int>& perm, int q);
    static MatFq diagonal(const std::vector<int>& entries, int q);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int q() const { return q_; }
    int operator()(int i, int j) const { return data_[i * cols_ + j]; }
    void set(int i, int j, long v);

    MatFq operator*(const MatFq& o) const;
    friend bool operator==(const MatFq& a, const MatFq& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const MatFq& a, const MatFq& b) { return !(a == b); }
    friend bool operator<(const MatFq& a, const MatFq& b) { return a.data_ < b.data_; }

    int det() const;
    std::optional<MatFq> inverse() const;
    MatFq transpose() const;

    bool is_upper_unipotent() const;
    bool is_strictly_lower() const;
    bool is_strictly_upper() const;
    bool is_diagonal() const;
    bool is_identity() const;
    // Row index of the single 1 in each column, when the matrix is a permutation matrix.
    std::optional<std::vector<int>> as_permutation() const;
    // Entry-wise base-q code, used as a set key.
    uint64_t encode() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int q_ = 2;
    std::vector<int> data_;
};

struct BruhatDecomp {
    MatFq u1;
    MatFq w;
    MatFq d;
    MatFq u2;
};

// g = u1 * w * d * u2 by pivoting rows from the bottom up.
BruhatDecomp bruhat_decompose(const MatFq& g);

// [[0, I_(m-l)], [I_l, 0]]
MatFq block_antidiag(int m, int l, int q);

// Invertible m x m matrices in lexicographic code order. Throws BudgetExceeded when
// q^(m^2) exceeds the enumeration budget.
std::vector<MatFq> enumerate_gl(int m, int q);
std::vector<MatFq> enumerate_upper_unipotent(int m, int q);
std::vector<MatFq> enumerate_lower_nilpotent(int m, int q);
std::vector<MatFq> enumerate_invertible_diagonal(int m, int q);

// Largest number of group elements a single brute-force pass may visit
// (SSC_ENUM_BUDGET, default 2,000,000).
long enumeration_budget();
void check_budget(long count, const std::string& what);

}  // namespace ssc
