#include "mgce/mixed_module.hpp"

#include <algorithm>

namespace mgce {

namespace {
const ChainComplex kEmptyComplex;
}

void GradedModule::set_weight(int p, ChainComplex c)
{
    if (c.empty())
        weights.erase(p);
    else
        weights[p] = std::move(c);
}

const ChainComplex& GradedModule::weight(int p) const
{
    auto it = weights.find(p);
    return it == weights.end() ? kEmptyComplex : it->second;
}

MixedModule MixedModule::unit(int q)
{
    MixedModule m;
    m.set_weight(q, ChainComplex::point(0));
    return m;
}

void MixedModule::set_weight(int p, ChainComplex c)
{
    if (c.empty())
        weights_.erase(p);
    else
        weights_[p] = std::move(c);
}

const ChainComplex& MixedModule::weight(int p) const
{
    auto it = weights_.find(p);
    return it == weights_.end() ? kEmptyComplex : it->second;
}

int MixedModule::min_weight() const
{
    return weights_.empty() ? 0 : weights_.begin()->first;
}

int MixedModule::max_weight() const
{
    return weights_.empty() ? 0 : weights_.rbegin()->first;
}

void MixedModule::set_mixed(int p, int degree, RatMatrix e)
{
    if (e.rows() != weight(p - 1).dim(degree + 1) || e.cols() != weight(p).dim(degree))
        throw ShapeMismatch("mixed map shape mismatch");
    if (e.is_zero()) {
        auto it = mixed_.find(p);
        if (it != mixed_.end()) {
            it->second.erase(degree);
            if (it->second.empty())
                mixed_.erase(it);
        }
    } else {
        mixed_[p][degree] = std::move(e);
    }
}

RatMatrix MixedModule::mixed(int p, int degree) const
{
    auto it = mixed_.find(p);
    if (it != mixed_.end()) {
        auto jt = it->second.find(degree);
        if (jt != it->second.end())
            return jt->second;
    }
    return RatMatrix(weight(p - 1).dim(degree + 1), weight(p).dim(degree));
}

std::optional<MixedViolation> MixedModule::validate() const
{
    for (const auto& [p, c] : weights_) {
        if (auto v = c.validate())
            return MixedViolation{p, v->degree, "underlying complex: " + v->message};
    }
    for (const auto& [p, per_degree] : mixed_) {
        for (const auto& [n, e] : per_degree) {
            if (e.rows() != weight(p - 1).dim(n + 1) || e.cols() != weight(p).dim(n))
                return MixedViolation{p, n, "mixed map shape mismatch"};
        }
    }
    for (const auto& [p, c] : weights_) {
        for (const auto& [n, dim_n] : c.dims()) {
            if (!(mixed(p - 1, n + 1) * mixed(p, n)).is_zero())
                return MixedViolation{p, n, "eps o eps != 0"};
            RatMatrix anti = mixed(p, n - 1) * c.differential(n)
                + weight(p - 1).differential(n + 1) * mixed(p, n);
            if (!anti.is_zero())
                return MixedViolation{p, n, "eps o d + d o eps != 0"};
        }
    }
    return std::nullopt;
}

bool MixedModule::operator==(const MixedModule& rhs) const
{
    if (weights_ != rhs.weights_)
        return false;
    auto all_equal = [](const MixedModule& x, const MixedModule& y) {
        for (const auto& [p, per_degree] : x.mixed_)
            for (const auto& [n, e] : per_degree)
                if (e != y.mixed(p, n))
                    return false;
        return true;
    };
    return all_equal(*this, rhs) && all_equal(rhs, *this);
}

GradedModule oblv(const MixedModule& m)
{
    GradedModule g;
    g.weights = m.weights();
    return g;
}

MixedModule triv_eps(const GradedModule& g)
{
    MixedModule m;
    for (const auto& [p, c] : g.weights)
        m.set_weight(p, c);
    return m;
}

MixedModule adjoint_eps(const GradedModule& g, AdjointSide side)
{
    // left:  (L g)_p = g_p + g_{p+1}[1],  eps the identity g_p -> g_p[1]
    // right: (R g)_p = g_p + g_{p-1}[-1], eps the identity g_{p-1}[-1] -> g_{p-1}
    const int delta = (side == AdjointSide::left) ? +1 : -1;
    MixedModule out;
    std::map<int, std::pair<ChainComplex, ChainComplex>> parts;
    for (const auto& [p, c] : g.weights) {
        parts[p].first = c;
        parts[p - delta].second = c.shift(delta);
    }
    for (const auto& [p, pr] : parts)
        out.set_weight(p, direct_sum({&pr.first, &pr.second}));
    auto block_offset = [&](int p, int degree, int which) {
        const auto& pr = parts.at(p);
        std::vector<const ChainComplex*> sum{&pr.first, &pr.second};
        return direct_sum_offset(sum, degree, which);
    };
    for (const auto& [q, c] : g.weights) {
        for (const auto& [n, d] : c.dims()) {
            // left:  plain copy (block 0, weight q, deg n) -> shifted copy
            //        (block 1, weight q-1, deg n+1)
            // right: shifted copy (block 1, weight q+1, deg n-1) -> plain
            //        copy (block 0, weight q, deg n)
            const int src_w = (side == AdjointSide::left) ? q : q + 1;
            const int src_deg = (side == AdjointSide::left) ? n : n - 1;
            const int src_off = block_offset(src_w, src_deg,
                                             side == AdjointSide::left ? 0 : 1);
            const int dst_off = block_offset(src_w - 1, src_deg + 1,
                                             side == AdjointSide::left ? 1 : 0);
            RatMatrix e = out.mixed(src_w, src_deg);
            for (int k = 0; k < d; ++k)
                e.add_to(dst_off + k, src_off + k, 1);
            out.set_mixed(src_w, src_deg, std::move(e));
        }
    }
    return out;
}

int mixed_tensor_offset(const MixedModule& a, const MixedModule& b, int p, int n, int i)
{
    int offset = 0;
    for (const auto& [w, ca] : a.weights()) {
        if (w >= i)
            break;
        const ChainComplex& cb = b.weight(p - w);
        if (cb.empty())
            continue;
        for (const auto& [u, da] : ca.dims())
            offset += da * cb.dim(n - u);
    }
    return offset;
}

int encode_tensor_index(const MixedModule& a, const MixedModule& b, int p, int n,
                        const TensorSlot& slot)
{
    const ChainComplex& ca = a.weight(slot.left_weight);
    const ChainComplex& cb = b.weight(p - slot.left_weight);
    return mixed_tensor_offset(a, b, p, n, slot.left_weight)
        + tensor_block_offset(ca, cb, n, slot.left_degree)
        + slot.left * cb.dim(n - slot.left_degree) + slot.right;
}

TensorSlot decode_tensor_index(const MixedModule& a, const MixedModule& b, int p, int n, int idx)
{
    for (const auto& [i, ca] : a.weights()) {
        const ChainComplex& cb = b.weight(p - i);
        if (cb.empty())
            continue;
        for (const auto& [u, da] : ca.dims()) {
            const int db = cb.dim(n - u);
            if (db == 0)
                continue;
            if (idx < da * db)
                return TensorSlot{i, u, idx / db, idx % db};
            idx -= da * db;
        }
    }
    throw std::out_of_range("tensor index out of range");
}

MixedModule tensor_mixed(const MixedModule& a, const MixedModule& b)
{
    MixedModule out;
    // weights
    std::map<int, std::vector<std::pair<int, ChainComplex>>> blocks; // p -> [(i, A_i (x) B_{p-i})]
    for (const auto& [i, ca] : a.weights())
        for (const auto& [j, cb] : b.weights()) {
            ChainComplex t = tensor_complex(ca, cb);
            if (!t.empty())
                blocks[i + j].emplace_back(i, std::move(t));
        }
    for (const auto& [p, vec] : blocks) {
        std::vector<const ChainComplex*> ptrs;
        for (const auto& [i, c] : vec)
            ptrs.push_back(&c);
        out.set_weight(p, direct_sum(ptrs));
    }
    // mixed maps: on the (i, j) summand  eps_A (x) id + (-1)^|x| id (x) eps_B
    for (const auto& [p, vec] : blocks) {
        if (blocks.find(p - 1) == blocks.end())
            continue;
        const auto& dst_vec = blocks.at(p - 1);
        std::vector<const ChainComplex*> src_ptrs, dst_ptrs;
        for (const auto& [i, c] : vec)
            src_ptrs.push_back(&c);
        for (const auto& [i, c] : dst_vec)
            dst_ptrs.push_back(&c);
        auto dst_index = [&](int i) -> int {
            for (size_t s = 0; s < dst_vec.size(); ++s)
                if (dst_vec[s].first == i)
                    return static_cast<int>(s);
            return -1;
        };
        const ChainComplex& total_src = out.weight(p);
        const ChainComplex& total_dst = out.weight(p - 1);
        for (const auto& [n, dim_n] : total_src.dims()) {
            if (total_dst.dim(n + 1) == 0)
                continue;
            RatMatrix e(total_dst.dim(n + 1), dim_n);
            for (size_t s = 0; s < vec.size(); ++s) {
                const int i = vec[s].first;
                const int j = p - i;
                const ChainComplex& ca = a.weight(i);
                const ChainComplex& cb = b.weight(j);
                const int sblock = direct_sum_offset(src_ptrs, n, static_cast<int>(s));
                for (const auto& [u, da] : ca.dims()) {
                    const int v = n - u;
                    const int db = cb.dim(v);
                    if (db == 0)
                        continue;
                    const int src = sblock + tensor_block_offset(ca, cb, n, u);
                    // eps_A (x) id : lands in summand (i-1, j)
                    const RatMatrix eA = a.mixed(i, u);
                    const int di = dst_index(i - 1);
                    if (!eA.is_zero() && di >= 0) {
                        const ChainComplex& ca1 = a.weight(i - 1);
                        const int dst = direct_sum_offset(dst_ptrs, n + 1, di)
                            + tensor_block_offset(ca1, cb, n + 1, u + 1);
                        for (const auto& [rc, val] : eA.entries())
                            for (int k = 0; k < db; ++k)
                                e.add_to(dst + rc.first * db + k, src + rc.second * db + k, val);
                    }
                    // (-1)^u id (x) eps_B : lands in summand (i, j-1)
                    const RatMatrix eB = b.mixed(j, v);
                    const int dj = dst_index(i);
                    if (!eB.is_zero() && dj >= 0) {
                        const ChainComplex& cb1 = b.weight(j - 1);
                        const int db1 = cb1.dim(v + 1);
                        const int dst = direct_sum_offset(dst_ptrs, n + 1, dj)
                            + tensor_block_offset(ca, cb1, n + 1, u);
                        const Rat sign = (u % 2 == 0) ? 1 : -1;
                        for (int r = 0; r < da; ++r)
                            for (const auto& [rc, val] : eB.entries())
                                e.add_to(dst + r * db1 + rc.first, src + r * db + rc.second, sign * val);
                    }
                }
            }
            out.set_mixed(p, n, std::move(e));
        }
    }
    return out;
}

namespace {

// Basis bookkeeping for internal_hom: weight p, degree n gathers the blocks
// Hom((A_q)_u, (B_{q+p})_{u+n}) by ascending q then ascending u, row-major
// with the target index fastest-varying... target-major: phi_{r,s} has index
// base + r * dimA + s.
struct HomBlocks {
    struct Block {
        int q, u, dim_a, dim_b, base;
    };
    std::vector<Block> blocks;
    int total = 0;

    HomBlocks(const MixedModule& a, const MixedModule& b, int p, int n)
    {
        for (const auto& [q, ca] : a.weights()) {
            const ChainComplex& cb = b.weight(q + p);
            if (cb.empty())
                continue;
            for (const auto& [u, da] : ca.dims()) {
                const int db = cb.dim(u + n);
                if (db == 0)
                    continue;
                blocks.push_back({q, u, da, db, total});
                total += da * db;
            }
        }
    }

    const Block* find(int q, int u) const
    {
        for (const auto& bl : blocks)
            if (bl.q == q && bl.u == u)
                return &bl;
        return nullptr;
    }
};

} // namespace

MixedModule internal_hom(const MixedModule& a, const MixedModule& b)
{
    MixedModule out;
    if (a.empty() || b.empty())
        return out;
    const int pmin = b.min_weight() - a.max_weight();
    const int pmax = b.max_weight() - a.min_weight();
    // degree range of maps (A_q)_u -> (B_{q+p})_{u+n}
    int nmin = 0, nmax = 0;
    bool first = true;
    for (const auto& [q, ca] : a.weights())
        for (const auto& [qb, cb] : b.weights())
            if (!ca.empty()) {
                int lo = cb.min_degree() - ca.max_degree();
                int hi = cb.max_degree() - ca.min_degree();
                if (first || lo < nmin)
                    nmin = lo;
                if (first || hi > nmax)
                    nmax = hi;
                first = false;
            }
    for (int p = pmin; p <= pmax; ++p) {
        ChainComplex c;
        for (int n = nmin; n <= nmax; ++n) {
            HomBlocks hb(a, b, p, n);
            if (hb.total > 0)
                c.set_dim(n, hb.total);
        }
        for (int n = nmin; n <= nmax; ++n) {
            if (c.dim(n) == 0 || c.dim(n - 1) == 0)
                continue;
            HomBlocks src(a, b, p, n);
            HomBlocks dst(a, b, p, n - 1);
            RatMatrix d(dst.total, src.total);
            const Rat sgn = (n % 2 == 0) ? 1 : -1;
            for (const auto& bl : src.blocks) {
                // phi o d_A : target block (q, u+1)
                const RatMatrix dA = a.weight(bl.q).differential(bl.u + 1);
                if (const auto* tb = dst.find(bl.q, bl.u + 1); tb && !dA.is_zero()) {
                    for (int r = 0; r < bl.dim_b; ++r)
                        for (const auto& [rc, val] : dA.entries())
                            d.add_to(tb->base + r * tb->dim_a + rc.second,
                                     bl.base + r * bl.dim_a + rc.first, val);
                }
                // -(-1)^|phi| d_B o phi : target block (q, u)
                const RatMatrix dB = b.weight(bl.q + p).differential(bl.u + n);
                if (const auto* tb = dst.find(bl.q, bl.u); tb && !dB.is_zero()) {
                    for (const auto& [rc, val] : dB.entries())
                        for (int s = 0; s < bl.dim_a; ++s)
                            d.add_to(tb->base + rc.first * tb->dim_a + s,
                                     bl.base + rc.second * bl.dim_a + s, -sgn * val);
                }
            }
            c.set_differential(n, std::move(d));
        }
        out.set_weight(p, c);
    }
    for (int p = pmin; p <= pmax; ++p) {
        const ChainComplex& csrc = out.weight(p);
        const ChainComplex& cdst = out.weight(p - 1);
        if (csrc.empty() || cdst.empty())
            continue;
        for (const auto& [n, dim_n] : csrc.dims()) {
            if (cdst.dim(n + 1) == 0)
                continue;
            HomBlocks src(a, b, p, n);
            HomBlocks dst(a, b, p - 1, n + 1);
            RatMatrix e(dst.total, src.total);
            // kernel of eps at degree 0 consists of the eps-commuting maps,
            // hence the (-1)^{n+1} on post-composition
            const Rat t = (n % 2 == 0) ? -1 : 1;
            for (const auto& bl : src.blocks) {
                // phi o eps_A : target block (q+1, u-1)
                const RatMatrix eA = a.mixed(bl.q + 1, bl.u - 1);
                if (const auto* tb = dst.find(bl.q + 1, bl.u - 1); tb && !eA.is_zero()) {
                    for (int r = 0; r < bl.dim_b; ++r)
                        for (const auto& [rc, val] : eA.entries())
                            e.add_to(tb->base + r * tb->dim_a + rc.second,
                                     bl.base + r * bl.dim_a + rc.first, val);
                }
                // t(|phi|) eps_B o phi : target block (q, u)
                const RatMatrix eB = b.mixed(bl.q + p, bl.u + n);
                if (const auto* tb = dst.find(bl.q, bl.u); tb && !eB.is_zero()) {
                    for (const auto& [rc, val] : eB.entries())
                        for (int s = 0; s < bl.dim_a; ++s)
                            e.add_to(tb->base + rc.first * tb->dim_a + s,
                                     bl.base + rc.second * bl.dim_a + s, t * val);
                }
            }
            out.set_mixed(p, n, std::move(e));
        }
    }
    return out;
}

MixedModule dual_mixed(const MixedModule& m)
{
    MixedModule out;
    for (const auto& [p, c] : m.weights())
        out.set_weight(-p, c.dual());
    // the transpose of eps_{p,n} : (M_p)_n -> (M_{p-1})_{n+1} is the dual's
    // mixed map at weight 1-p, degree -n-1; no sign twist
    for (const auto& [p, c] : m.weights())
        for (const auto& [n, dim_n] : c.dims()) {
            RatMatrix e = m.mixed(p, n);
            if (e.is_zero())
                continue;
            out.set_mixed(1 - p, -n - 1, e.transpose());
        }
    return out;
}

MixedModule weight_shift(const MixedModule& m, int q)
{
    MixedModule out;
    for (const auto& [p, c] : m.weights())
        out.set_weight(p + q, c);
    for (const auto& [p, c] : m.weights())
        for (const auto& [n, dim_n] : c.dims()) {
            RatMatrix e = m.mixed(p, n);
            if (!e.is_zero())
                out.set_mixed(p + q, n, std::move(e));
        }
    return out;
}

int tate_block_offset(const MixedModule& m, int weight_floor, int total_degree, int w)
{
    int offset = 0;
    for (const auto& [wi, c] : m.weights()) {
        if (wi > -weight_floor || wi >= w)
            break;
        offset += c.dim(total_degree - 2 * wi);
    }
    return offset;
}

ChainComplex tate_total(const MixedModule& m, int weight_floor)
{
    if (weight_floor > 0)
        throw FloorTooHigh("tate_total: weight_floor must be <= 0");
    ChainComplex total;
    std::vector<int> ws;
    for (const auto& [w, c] : m.weights())
        if (w <= -weight_floor)
            ws.push_back(w);
    if (ws.empty())
        return total;
    int lo = 0, hi = 0;
    bool first = true;
    for (int w : ws) {
        const ChainComplex& c = m.weight(w);
        int l = c.min_degree() + 2 * w;
        int h = c.max_degree() + 2 * w;
        if (first || l < lo)
            lo = l;
        if (first || h > hi)
            hi = h;
        first = false;
    }
    for (int n = lo; n <= hi; ++n) {
        int d = 0;
        for (int w : ws)
            d += m.weight(w).dim(n - 2 * w);
        if (d > 0)
            total.set_dim(n, d);
    }
    for (int n = lo; n <= hi; ++n) {
        if (total.dim(n) == 0 || total.dim(n - 1) == 0)
            continue;
        RatMatrix dn(total.dim(n - 1), total.dim(n));
        for (int w : ws) {
            const ChainComplex& c = m.weight(w);
            const int u = n - 2 * w;
            if (c.dim(u) == 0)
                continue;
            const int src = tate_block_offset(m, weight_floor, n, w);
            const RatMatrix d = c.differential(u);
            if (!d.is_zero()) {
                const int dst = tate_block_offset(m, weight_floor, n - 1, w);
                for (const auto& [rc, val] : d.entries())
                    dn.add_to(dst + rc.first, src + rc.second, val);
            }
            const RatMatrix e = m.mixed(w, u);
            if (!e.is_zero() && std::find(ws.begin(), ws.end(), w - 1) != ws.end()) {
                const int dst = tate_block_offset(m, weight_floor, n - 1, w - 1);
                for (const auto& [rc, val] : e.entries())
                    dn.add_to(dst + rc.first, src + rc.second, val);
            }
        }
        total.set_differential(n, std::move(dn));
    }
    return total;
}

} // namespace mgce
