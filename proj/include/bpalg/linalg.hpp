#ifndef BPALG_LINALG_HPP
#define BPALG_LINALG_HPP

#include <optional>
#include <vector>

#include "bpalg/fpmath.hpp"

namespace bpalg {

using FpVec = std::vector<int>;
using FpMat = std::vector<FpVec>;  // list of rows

// Row space kept in reduced echelon form; supports residue/membership queries.
class FpSpace {
  public:
    FpSpace(int p, int dim) : p_(p), dim_(dim) {}

    int p() const { return p_; }
    int dim() const { return int(rows_.size()); }
    int ambient() const { return dim_; }
    const FpMat& rows() const { return rows_; }

    FpVec residue(FpVec v) const
    {
        for (size_t i = 0; i < rows_.size(); ++i) {
            int c = v[size_t(pivots_[i])];
            if (c != 0) {
                for (int j = 0; j < dim_; ++j)
                    v[size_t(j)] = fp_sub(v[size_t(j)], fp_mul(c, rows_[i][size_t(j)], p_), p_);
            }
        }
        return v;
    }

    bool contains(const FpVec& v) const
    {
        FpVec r = residue(v);
        for (int x : r)
            if (x)
                return false;
        return true;
    }

    // Returns false if v was already in the span.
    bool add(FpVec v)
    {
        v = residue(std::move(v));
        int piv = -1;
        for (int j = 0; j < dim_; ++j)
            if (v[size_t(j)]) {
                piv = j;
                break;
            }
        if (piv < 0)
            return false;
        int inv = fp_inv(v[size_t(piv)], p_);
        for (int j = 0; j < dim_; ++j)
            v[size_t(j)] = fp_mul(v[size_t(j)], inv, p_);
        // keep reduced form
        for (size_t i = 0; i < rows_.size(); ++i) {
            int c = rows_[i][size_t(piv)];
            if (c != 0)
                for (int j = 0; j < dim_; ++j)
                    rows_[i][size_t(j)] = fp_sub(rows_[i][size_t(j)], fp_mul(c, v[size_t(j)], p_), p_);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

  private:
    int p_;
    int dim_;
    FpMat rows_;
    std::vector<int> pivots_;
};

// Solve A x = b over F_p, A given by rows (rows x cols). Returns a particular
// solution if one exists.
inline std::optional<FpVec> fp_solve(const FpMat& a, const FpVec& b, int cols, int p)
{
    size_t rows = a.size();
    FpMat m(rows);
    for (size_t i = 0; i < rows; ++i) {
        m[i] = a[i];
        m[i].resize(size_t(cols) + 1);
        m[i][size_t(cols)] = fp_norm(b[i], p);
    }
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][size_t(c)] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[r], m[sel]);
        int inv = fp_inv(m[r][size_t(c)], p);
        for (int j = c; j <= cols; ++j)
            m[r][size_t(j)] = fp_mul(m[r][size_t(j)], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][size_t(c)] == 0)
                continue;
            int f = m[i][size_t(c)];
            for (int j = c; j <= cols; ++j)
                m[i][size_t(j)] = fp_sub(m[i][size_t(j)], fp_mul(f, m[r][size_t(j)], p), p);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (m[i][size_t(cols)] != 0)
            return std::nullopt;
    FpVec x(size_t(cols), 0);
    for (size_t i = 0; i < r; ++i)
        x[size_t(pivot_col[i])] = m[i][size_t(cols)];
    return x;
}

// Kernel basis of A (rows x cols), solutions x with A x = 0.
inline FpMat fp_kernel(const FpMat& a, int cols, int p)
{
    size_t rows = a.size();
    FpMat m = a;
    std::vector<int> pivot_of_col(size_t(cols), -1);
    size_t r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][size_t(c)] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[r], m[sel]);
        int inv = fp_inv(m[r][size_t(c)], p);
        for (int j = c; j < cols; ++j)
            m[r][size_t(j)] = fp_mul(m[r][size_t(j)], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][size_t(c)] == 0)
                continue;
            int f = m[i][size_t(c)];
            for (int j = c; j < cols; ++j)
                m[i][size_t(j)] = fp_sub(m[i][size_t(j)], fp_mul(f, m[r][size_t(j)], p), p);
        }
        pivot_of_col[size_t(c)] = int(r);
        ++r;
    }
    FpMat kernel;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[size_t(c)] >= 0)
            continue;
        FpVec v(size_t(cols), 0);
        v[size_t(c)] = 1;
        for (int j = 0; j < cols; ++j)
            if (pivot_of_col[size_t(j)] >= 0)
                v[size_t(j)] = fp_neg(m[size_t(pivot_of_col[size_t(j)])][size_t(c)], p);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

inline int fp_rank(const FpMat& a, int cols, int p)
{
    if (a.empty())
        return 0;
    FpSpace sp(p, cols);
    for (const auto& row : a)
        sp.add(row);
    return sp.dim();
}

}  // namespace bpalg

#endif
