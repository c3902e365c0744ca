#include "mgce/chain_complex.hpp"

#include <limits>

namespace mgce {

void ChainComplex::set_dim(int degree, int dim)
{
    if (dim < 0)
        throw ShapeMismatch("negative dimension");
    if (dim == 0)
        dims_.erase(degree);
    else
        dims_[degree] = dim;
}

int ChainComplex::dim(int degree) const
{
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

int ChainComplex::total_dim() const
{
    int t = 0;
    for (const auto& [n, d] : dims_)
        t += d;
    return t;
}

int ChainComplex::min_degree() const
{
    return dims_.empty() ? 0 : dims_.begin()->first;
}

int ChainComplex::max_degree() const
{
    return dims_.empty() ? 0 : dims_.rbegin()->first;
}

void ChainComplex::set_differential(int degree, RatMatrix d)
{
    if (d.rows() != dim(degree - 1) || d.cols() != dim(degree))
        throw ShapeMismatch("differential shape does not match component dimensions");
    if (d.is_zero())
        diff_.erase(degree);
    else
        diff_[degree] = std::move(d);
}

RatMatrix ChainComplex::differential(int degree) const
{
    auto it = diff_.find(degree);
    if (it != diff_.end())
        return it->second;
    return RatMatrix(dim(degree - 1), dim(degree));
}

std::optional<ComplexViolation> ChainComplex::validate() const
{
    for (const auto& [n, d] : diff_) {
        if (d.rows() != dim(n - 1) || d.cols() != dim(n))
            return ComplexViolation{n, 0, 0, "differential shape mismatch"};
    }
    for (const auto& [n, dim_n] : dims_) {
        RatMatrix sq = differential(n - 1) * differential(n);
        if (!sq.is_zero()) {
            auto [ij, v] = *sq.entries().begin();
            return ComplexViolation{n, ij.first, ij.second, "d o d != 0"};
        }
    }
    return std::nullopt;
}

ChainComplex ChainComplex::shift(int k) const
{
    ChainComplex out;
    for (const auto& [n, d] : dims_)
        out.set_dim(n + k, d);
    const Rat sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [n, d] : diff_)
        out.set_differential(n + k, d.scaled(sign));
    return out;
}

ChainComplex ChainComplex::dual() const
{
    ChainComplex out;
    for (const auto& [n, d] : dims_)
        out.set_dim(-n, d);
    for (const auto& [n, d] : diff_)
        out.set_differential(1 - n, d.transpose());
    return out;
}

std::map<int, long> ChainComplex::homology() const
{
    std::map<int, long> h;
    for (const auto& [n, dim_n] : dims_) {
        long value = homology_dim(differential(n + 1), differential(n));
        if (value != 0)
            h[n] = value;
    }
    return h;
}

Rat ChainComplex::euler_characteristic() const
{
    Rat chi = 0;
    for (const auto& [n, d] : dims_)
        chi += (n % 2 == 0) ? Rat(d) : Rat(-d);
    return chi;
}

bool ChainComplex::operator==(const ChainComplex& rhs) const
{
    return dims_ == rhs.dims_ && diff_ == rhs.diff_;
}

ChainComplex ChainComplex::point(int degree, int dim)
{
    ChainComplex c;
    c.set_dim(degree, dim);
    return c;
}

int tensor_block_offset(const ChainComplex& a, const ChainComplex& b, int n, int i)
{
    int offset = 0;
    for (const auto& [u, da] : a.dims()) {
        if (u >= i)
            break;
        offset += da * b.dim(n - u);
    }
    return offset;
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b)
{
    ChainComplex out;
    if (a.empty() || b.empty())
        return out;
    const int lo = a.min_degree() + b.min_degree();
    const int hi = a.max_degree() + b.max_degree();
    for (int n = lo; n <= hi; ++n) {
        int d = 0;
        for (const auto& [u, da] : a.dims())
            d += da * b.dim(n - u);
        out.set_dim(n, d);
    }
    for (int n = lo; n <= hi; ++n) {
        if (out.dim(n) == 0 || out.dim(n - 1) == 0)
            continue;
        RatMatrix dn(out.dim(n - 1), out.dim(n));
        for (const auto& [u, da] : a.dims()) {
            const int v = n - u;
            const int db = b.dim(v);
            if (db == 0)
                continue;
            const int src = tensor_block_offset(a, b, n, u);
            // dx (x) y
            const RatMatrix dA = a.differential(u);
            if (!dA.is_zero()) {
                const int dst = tensor_block_offset(a, b, n - 1, u - 1);
                for (const auto& [ij, val] : dA.entries())
                    for (int k = 0; k < db; ++k)
                        dn.add_to(dst + ij.first * db + k, src + ij.second * db + k, val);
            }
            // (-1)^|x| x (x) dy
            const RatMatrix dB = b.differential(v);
            if (!dB.is_zero()) {
                const int dst = tensor_block_offset(a, b, n - 1, u);
                const int db1 = b.dim(v - 1);
                const Rat sign = (u % 2 == 0) ? 1 : -1;
                for (int r = 0; r < da; ++r)
                    for (const auto& [ij, val] : dB.entries())
                        dn.add_to(dst + r * db1 + ij.first, src + r * db + ij.second, sign * val);
            }
        }
        out.set_differential(n, std::move(dn));
    }
    return out;
}

int direct_sum_offset(const std::vector<const ChainComplex*>& summands, int n, int which)
{
    int offset = 0;
    for (int s = 0; s < which; ++s)
        offset += summands[s]->dim(n);
    return offset;
}

ChainComplex direct_sum(const std::vector<const ChainComplex*>& summands)
{
    ChainComplex out;
    std::map<int, int> dims;
    for (const auto* c : summands)
        for (const auto& [n, d] : c->dims())
            dims[n] += d;
    for (const auto& [n, d] : dims)
        out.set_dim(n, d);
    for (const auto& [n, d] : dims) {
        if (out.dim(n - 1) == 0)
            continue;
        RatMatrix dn(out.dim(n - 1), out.dim(n));
        for (size_t s = 0; s < summands.size(); ++s) {
            const RatMatrix ds = summands[s]->differential(n);
            if (ds.is_zero())
                continue;
            const int roff = direct_sum_offset(summands, n - 1, static_cast<int>(s));
            const int coff = direct_sum_offset(summands, n, static_cast<int>(s));
            for (const auto& [ij, v] : ds.entries())
                dn.add_to(roff + ij.first, coff + ij.second, v);
        }
        out.set_differential(n, std::move(dn));
    }
    return out;
}

} // namespace mgce
