#include "mgce/rat_matrix.hpp"

#include <algorithm>

namespace mgce {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw ShapeMismatch("negative matrix dimension");
}

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void RatMatrix::check_bounds(int i, int j) const
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw ShapeMismatch("matrix index out of bounds");
}

void RatMatrix::set(int i, int j, const Rat& value)
{
    check_bounds(i, j);
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

void RatMatrix::add_to(int i, int j, const Rat& value)
{
    check_bounds(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) {
        if (value != 0)
            entries_.emplace(std::make_pair(i, j), value);
        return;
    }
    it->second += value;
    if (it->second == 0)
        entries_.erase(it);
}

Rat RatMatrix::at(int i, int j) const
{
    check_bounds(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rat(0) : it->second;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (const auto& [ij, v] : entries_)
        t.entries_[{ij.second, ij.first}] = v;
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw ShapeMismatch("matrix product shape mismatch");
    // group rhs by row for the sparse walk
    std::vector<std::vector<std::pair<int, Rat>>> rhs_rows(rhs.rows_);
    for (const auto& [ij, v] : rhs.entries_)
        rhs_rows[ij.first].emplace_back(ij.second, v);
    RatMatrix out(rows_, rhs.cols_);
    for (const auto& [ij, v] : entries_)
        for (const auto& [k, w] : rhs_rows[ij.second])
            out.add_to(ij.first, k, v * w);
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeMismatch("matrix sum shape mismatch");
    RatMatrix out = *this;
    for (const auto& [ij, v] : rhs.entries_)
        out.add_to(ij.first, ij.second, v);
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const
{
    return *this + rhs.scaled(-1);
}

RatMatrix RatMatrix::scaled(const Rat& c) const
{
    RatMatrix out(rows_, cols_);
    if (c == 0)
        return out;
    for (const auto& [ij, v] : entries_)
        out.entries_[ij] = v * c;
    return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw ShapeMismatch("matrix-vector shape mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (const auto& [ij, w] : entries_)
        out[ij.first] += w * v[ij.second];
    return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

namespace {

// Fraction-free Gauss-Jordan elimination (Bareiss). Rows are scaled to
// integers up front; every division below is exact by the Bareiss
// determinant identity, which survives arbitrary row/column pivoting.
struct Elimination {
    std::vector<std::map<int, Int>> rows;
    std::vector<int> pivot_row_of; // per elimination step
    std::vector<int> pivot_col_of;
    std::vector<char> row_used;
    std::vector<char> col_used;
    int ncols = 0;

    explicit Elimination(const RatMatrix& m)
    {
        ncols = m.cols();
        rows.resize(m.rows());
        std::vector<Int> denlcm(m.rows(), Int(1));
        for (const auto& [ij, v] : m.entries()) {
            Int l;
            mpz_lcm(l.get_mpz_t(), denlcm[ij.first].get_mpz_t(), v.get_den().get_mpz_t());
            denlcm[ij.first] = l;
        }
        for (const auto& [ij, v] : m.entries()) {
            Rat scaled = v * Rat(denlcm[ij.first]);
            if (scaled.get_den() != 1)
                throw std::logic_error("row scaling did not clear the denominators");
            rows[ij.first][ij.second] = scaled.get_num();
        }
        row_used.assign(m.rows(), 0);
        col_used.assign(m.cols(), 0);
        run();
    }

    void run()
    {
        Int prev_pivot(1);
        for (;;) {
            std::vector<int> col_count(ncols, 0);
            for (size_t r = 0; r < rows.size(); ++r)
                if (!row_used[r])
                    for (const auto& [c, v] : rows[r])
                        if (!col_used[c])
                            ++col_count[c];
            // Markowitz-style pivot: minimize projected fill
            long best_cost = -1;
            int best_r = -1, best_c = -1;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (row_used[r])
                    continue;
                int live = 0;
                for (const auto& [c, v] : rows[r])
                    if (!col_used[c])
                        ++live;
                if (live == 0)
                    continue;
                for (const auto& [c, v] : rows[r]) {
                    if (col_used[c])
                        continue;
                    long cost = static_cast<long>(live - 1) * (col_count[c] - 1);
                    if (best_cost < 0 || cost < best_cost) {
                        best_cost = cost;
                        best_r = static_cast<int>(r);
                        best_c = c;
                    }
                }
            }
            if (best_r < 0)
                break;
            const Int pivot = rows[best_r].at(best_c);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == best_r || rows[r].empty())
                    continue;
                auto it = rows[r].find(best_c);
                Int factor = (it == rows[r].end()) ? Int(0) : it->second;
                // row_r := (pivot * row_r - factor * pivot_row) / prev_pivot
                std::map<int, Int> updated;
                auto merge = [&](const std::map<int, Int>& src, const Int& scale) {
                    for (const auto& [c, v] : src)
                        updated[c] += scale * v;
                };
                merge(rows[r], pivot);
                if (factor != 0)
                    merge(rows[best_r], -factor);
                std::map<int, Int> reduced;
                for (auto& [c, v] : updated) {
                    if (v == 0)
                        continue;
                    Int q, rem;
                    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                    if (rem != 0)
                        throw std::logic_error("fraction-free elimination: inexact division");
                    reduced[c] = q;
                }
                rows[r] = std::move(reduced);
            }
            row_used[best_r] = 1;
            col_used[best_c] = 1;
            pivot_row_of.push_back(best_r);
            pivot_col_of.push_back(best_c);
            prev_pivot = pivot;
        }
    }
};

} // namespace

long rank(const RatMatrix& m)
{
    Elimination e(m);
    return static_cast<long>(e.pivot_row_of.size());
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m)
{
    Elimination e(m);
    std::vector<std::vector<Rat>> basis;
    // Gauss-Jordan left each pivot row supported on its pivot column plus
    // free columns only, so each free column yields one kernel vector.
    for (int f = 0; f < m.cols(); ++f) {
        if (e.col_used[f])
            continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[f] = 1;
        for (size_t k = 0; k < e.pivot_row_of.size(); ++k) {
            const auto& row = e.rows[e.pivot_row_of[k]];
            auto it = row.find(f);
            if (it == row.end())
                continue;
            v[e.pivot_col_of[k]] = -Rat(it->second) / Rat(row.at(e.pivot_col_of[k]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

long homology_dim(const RatMatrix& d_in, const RatMatrix& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw ShapeMismatch("homology_dim: cols(d_out) != rows(d_in)");
    if (!(d_out * d_in).is_zero())
        throw CompositionNonzero("homology_dim: d_out * d_in != 0");
    return (d_out.cols() - rank(d_out)) - rank(d_in);
}

} // namespace mgce
