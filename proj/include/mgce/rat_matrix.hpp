#pragma once

#include "mgce/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mgce {

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionNonzero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse matrix over Q. Only nonzero entries are stored; set() erases a
// cell when the value is zero, so the invariant "stored implies nonzero"
// holds by construction.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, const Rat& value);
    void add_to(int i, int j, const Rat& value);
    Rat at(int i, int j) const;

    const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    int nnz() const { return static_cast<int>(entries_.size()); }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix scaled(const Rat& c) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const RatMatrix& rhs) const;
    bool operator!=(const RatMatrix& rhs) const { return !(*this == rhs); }

private:
    void check_bounds(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rat> entries_;
};

// Exact rank over Q, fraction-free elimination with minimal-fill pivoting.
long rank(const RatMatrix& m);

// Exact basis of the null space; size is cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

// nullity(d_out) - rank(d_in) for a composable square-zero pair
//   d_in : C_{n+1} -> C_n,  d_out : C_n -> C_{n-1}.
// Throws ShapeMismatch / CompositionNonzero on violated preconditions.
long homology_dim(const RatMatrix& d_in, const RatMatrix& d_out);

} // namespace mgce
