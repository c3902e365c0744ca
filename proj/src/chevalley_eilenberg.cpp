#include "mgce/chevalley_eilenberg.hpp"

#include <algorithm>
#include <sstream>

namespace mgce {

namespace {

bool all_barred(const Word& w, int base_dim)
{
    for (int i : w)
        if (i < base_dim)
            return false;
    return true;
}

// barred words of length p over the cone, (lex) order, then grouped by degree
std::vector<Word> barred_monomials(const DgLieAlgebra& cone, int base_dim, int p)
{
    std::vector<Word> words{{}};
    for (int step = 0; step < p; ++step) {
        std::vector<Word> next;
        for (const auto& w : words) {
            const int start = w.empty() ? base_dim : w.back();
            for (int gidx = start; gidx < cone.dim(); ++gidx) {
                if (!w.empty() && gidx == w.back() && cone.degree(gidx) % 2 != 0)
                    continue;
                Word longer = w;
                longer.push_back(gidx);
                next.push_back(std::move(longer));
            }
        }
        words = std::move(next);
    }
    std::sort(words.begin(), words.end());
    return words;
}

} // namespace

int CeHomological::component_index(int weight, const Word& w) const
{
    const LieRewriter rw(cone);
    const int deg = rw.word_degree(w);
    int idx = 0;
    for (const auto& v : monomials.at(weight)) {
        if (v == w)
            return idx;
        if (rw.word_degree(v) == deg)
            ++idx;
    }
    throw std::out_of_range("monomial not present");
}

const Word& CeHomological::component_word(int weight, int degree, int index) const
{
    const LieRewriter rw(cone);
    int idx = 0;
    for (const auto& v : monomials.at(weight)) {
        if (rw.word_degree(v) == degree) {
            if (idx == index)
                return v;
            ++idx;
        }
    }
    throw std::out_of_range("no such component slot");
}

std::string CeHomological::monomial_name(const Word& w) const
{
    if (w.empty())
        return "1";
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k)
            os << "^";
        os << cone.generator(w[k]).name;
    }
    return os.str();
}

CeHomological ce_homological(const DgLieAlgebra& g, int maxweight)
{
    if (auto v = g.validate())
        throw AxiomFailure("ce_homological: " + v->identity + " fails on the input");
    if (maxweight < 0)
        throw std::invalid_argument("maxweight must be nonnegative");
    CeHomological out;
    out.algebra = g;
    out.cone = cone_lie(g);
    out.base_dim = g.dim();
    out.maxweight = maxweight;
    const LieRewriter rw(out.cone);

    for (int p = 0; p <= maxweight; ++p) {
        auto words = barred_monomials(out.cone, out.base_dim, p);
        std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
            return rw.word_degree(a) < rw.word_degree(b);
        });
        out.monomials[p] = std::move(words);
    }
    // weightwise complexes
    for (int p = 0; p <= maxweight; ++p) {
        const auto& words = out.monomials.at(p);
        ChainComplex c;
        std::map<int, int> dims;
        for (const auto& w : words)
            ++dims[rw.word_degree(w)];
        for (const auto& [n, d] : dims)
            c.set_dim(n, d);
        for (const auto& [n, d] : dims) {
            if (c.dim(n - 1) == 0)
                continue;
            RatMatrix dn(c.dim(n - 1), d);
            for (const auto& w : words) {
                if (rw.word_degree(w) != n)
                    continue;
                const int col = out.component_index(p, w);
                for (const auto& [img, coeff] : rw.derivative(w))
                    dn.add_to(out.component_index(p, img), col, coeff);
            }
            c.set_differential(n, std::move(dn));
        }
        out.module.set_weight(p, c);
    }
    // mixed differential: unbar a letter, renormalize, keep barred terms
    for (int p = 1; p <= maxweight; ++p) {
        const ChainComplex& src = out.module.weight(p);
        const ChainComplex& dst = out.module.weight(p - 1);
        std::map<int, RatMatrix> eps;
        for (const auto& [n, d] : src.dims())
            eps.emplace(n, RatMatrix(dst.dim(n + 1), d));
        for (const auto& w : out.monomials.at(p)) {
            const int n = rw.word_degree(w);
            const int col = out.component_index(p, w);
            int prefix = 0;
            for (size_t k = 0; k < w.size(); ++k) {
                Word unbarred = w;
                unbarred[k] = w[k] - out.base_dim;
                const Rat sign = (prefix % 2 == 0) ? 1 : -1;
                for (const auto& [img, coeff] : rw.normalize(unbarred, sign))
                    if (all_barred(img, out.base_dim))
                        eps.at(n).add_to(out.component_index(p - 1, img), col, coeff);
                prefix += out.cone.degree(w[k]);
            }
        }
        for (auto& [n, e] : eps)
            out.module.set_mixed(p, n, std::move(e));
    }
    if (auto v = out.module.validate())
        throw AxiomFailure("ce_homological: module validation failed at weight "
                           + std::to_string(v->weight));
    // unshuffle comultiplication with Koszul signs
    for (int p = 0; p <= maxweight; ++p) {
        const ChainComplex& c = out.module.weight(p);
        std::map<int, RatMatrix> delta;
        for (const auto& [n, d] : c.dims()) {
            int rows = 0;
            for (int i = 0; i <= p; ++i) {
                const ChainComplex& ca = out.module.weight(i);
                const ChainComplex& cb = out.module.weight(p - i);
                for (const auto& [u, da] : ca.dims())
                    rows += da * cb.dim(n - u);
            }
            delta.emplace(n, RatMatrix(rows, d));
        }
        for (const auto& w : out.monomials.at(p)) {
            const int n = rw.word_degree(w);
            const int col = out.component_index(p, w);
            const int parts = 1 << w.size();
            for (int mask = 0; mask < parts; ++mask) {
                Word left, right;
                int sign_exp = 0;
                int right_odd_before = 0; // odd letters already sent right
                for (size_t k = 0; k < w.size(); ++k) {
                    const bool odd = out.cone.degree(w[k]) % 2 != 0;
                    if (mask & (1 << k)) {
                        left.push_back(w[k]);
                        if (odd)
                            sign_exp += right_odd_before;
                    } else {
                        right.push_back(w[k]);
                        if (odd)
                            ++right_odd_before;
                    }
                }
                const int i = static_cast<int>(left.size());
                TensorSlot slot;
                slot.left_weight = i;
                slot.left_degree = rw.word_degree(left);
                slot.left = out.component_index(i, left);
                slot.right = out.component_index(p - i, right);
                const int row = encode_tensor_index(out.module, out.module, p, n, slot);
                delta.at(n).add_to(row, col, (sign_exp % 2 == 0) ? 1 : -1);
            }
        }
        for (auto& [n, m] : delta)
            out.comult[{p, n}] = std::move(m);
    }
    return out;
}

CeCohomological ce_cohomological(const CeHomological& hom)
{
    CeCohomological out;
    out.algebra = hom.algebra;
    out.maxweight = hom.maxweight;
    out.module = dual_mixed(hom.module);
    const MixedModule& N = out.module;
    for (const auto& [key, delta] : hom.comult) {
        const auto [hp, hn] = key;
        const int p = -hp, n = -hn;
        const int dim_n = N.weight(p).dim(n);
        if (dim_n == 0)
            continue;
        int cols = 0;
        for (const auto& [i, ci] : N.weights()) {
            const ChainComplex& cj = N.weight(p - i);
            for (const auto& [u, da] : ci.dims())
                cols += da * cj.dim(n - u);
        }
        RatMatrix mult(dim_n, cols);
        for (const auto& [rc, v] : delta.entries()) {
            // row rc.first of delta is a pair in (M (x) M)_{hp, hn}
            TensorSlot s = decode_tensor_index(hom.module, hom.module, hp, hn, rc.first);
            TensorSlot dual_slot;
            dual_slot.left_weight = -s.left_weight;
            dual_slot.left_degree = -s.left_degree;
            dual_slot.left = s.left;
            dual_slot.right = s.right;
            const int col = encode_tensor_index(N, N, p, n, dual_slot);
            mult.add_to(rc.second, col, v);
        }
        out.product[{p, n}] = std::move(mult);
    }
    return out;
}

CeCohomological ce_cohomological(const DgLieAlgebra& g, int maxweight)
{
    return ce_cohomological(ce_homological(g, maxweight));
}

namespace {

// block layout of Hom(Sym^p(g[-1]), M) at a fixed hom degree
struct CoeffBlocks {
    struct Block {
        int sym_degree, dim_sym, m_degree, dim_m, base;
    };
    std::vector<Block> blocks;
    int total = 0;

    CoeffBlocks(const ChainComplex& sym, const ChainComplex& m, int n)
    {
        for (const auto& [u, ds] : sym.dims()) {
            const int dm = m.dim(u + n);
            if (dm == 0)
                continue;
            blocks.push_back({u, ds, u + n, dm, total});
            total += ds * dm;
        }
    }

    const Block* find(int sym_degree) const
    {
        for (const auto& b : blocks)
            if (b.sym_degree == sym_degree)
                return &b;
        return nullptr;
    }
};

} // namespace

CeCoefficients ce_coefficients(const DgLieAlgebra& g, const Representation& m, int maxweight)
{
    if (auto v = validate_rep(g, m))
        throw RepInvalid("ce_coefficients: " + v->identity + " fails on the representation");
    CeCoefficients out;
    out.algebra = g;
    out.rep = m;
    out.maxweight = maxweight;
    CeHomological hom = ce_homological(g, maxweight);
    const LieRewriter rw(hom.cone);
    const ChainComplex mc = m.underlying_complex();

    // components
    for (int p = 0; p <= maxweight; ++p) {
        const ChainComplex& sym = hom.module.weight(p);
        ChainComplex c;
        int lo = mc.min_degree() - sym.max_degree();
        int hi = mc.max_degree() - sym.min_degree();
        for (int n = lo; n <= hi; ++n) {
            CoeffBlocks cb(sym, mc, n);
            if (cb.total > 0)
                c.set_dim(n, cb.total);
        }
        for (int n = lo; n <= hi; ++n) {
            if (c.dim(n) == 0 || c.dim(n - 1) == 0)
                continue;
            CoeffBlocks src(sym, mc, n);
            CoeffBlocks dst(sym, mc, n - 1);
            RatMatrix d(dst.total, src.total);
            const Rat sgn = (n % 2 == 0) ? 1 : -1;
            for (const auto& bl : src.blocks) {
                // phi o d_sym : block (u+1)
                const RatMatrix dS = sym.differential(bl.sym_degree + 1);
                if (const auto* tb = dst.find(bl.sym_degree + 1); tb && !dS.is_zero()) {
                    for (int k = 0; k < bl.dim_m; ++k)
                        for (const auto& [rc, v] : dS.entries())
                            d.add_to(tb->base + k * tb->dim_sym + rc.second,
                                     bl.base + k * bl.dim_sym + rc.first, v);
                }
                // -(-1)^n d_M o phi : block (u)
                const RatMatrix dM = mc.differential(bl.m_degree);
                if (const auto* tb = dst.find(bl.sym_degree); tb && !dM.is_zero()) {
                    for (const auto& [rc, v] : dM.entries())
                        for (int s = 0; s < bl.dim_sym; ++s)
                            d.add_to(tb->base + rc.first * tb->dim_sym + s,
                                     bl.base + rc.second * bl.dim_sym + s, -sgn * v);
                }
            }
            c.set_differential(n, std::move(d));
        }
        out.module.set_weight(-p, c);
    }
    // mixed differential, from weight -p to weight -p-1
    for (int p = 0; p < maxweight; ++p) {
        const ChainComplex& sym_src = hom.module.weight(p);
        const ChainComplex& sym_dst = hom.module.weight(p + 1);
        const ChainComplex& csrc = out.module.weight(-p);
        const ChainComplex& cdst = out.module.weight(-p - 1);
        std::map<int, RatMatrix> eps;
        for (const auto& [n, d] : csrc.dims())
            if (cdst.dim(n + 1) > 0)
                eps.emplace(n, RatMatrix(cdst.dim(n + 1), d));
        for (const auto& s : hom.monomials.at(p + 1)) {
            const int us = rw.word_degree(s);
            const int srow = hom.component_index(p + 1, s);
            int prefix = 0;
            for (size_t k = 0; k < s.size(); ++k) {
                Word unbarred = s;
                unbarred[k] = s[k] - hom.base_dim;
                const Rat sign = (prefix % 2 == 0) ? 1 : -1;
                for (const auto& [img, coeff] : rw.normalize(unbarred, sign)) {
                    // split into the bracket part (all barred) and the
                    // action part (exactly one unbarred letter, in front)
                    int unbarred_count = 0;
                    for (int letter : img)
                        if (letter < hom.base_dim)
                            ++unbarred_count;
                    if (unbarred_count == 0) {
                        const int wcol = hom.component_index(p, img);
                        const int uw = rw.word_degree(img);
                        // phi = (k_m, img) at degree n = b - uw contributes to
                        // (k_m, s) at degree n + 1
                        for (const auto& [b, dm] : mc.dims()) {
                            const int n = b - uw;
                            auto it = eps.find(n);
                            if (it == eps.end())
                                continue;
                            CoeffBlocks src(sym_src, mc, n);
                            CoeffBlocks dst(sym_dst, mc, n + 1);
                            const auto* sb = src.find(uw);
                            const auto* tb = dst.find(us);
                            if (!sb || !tb)
                                continue;
                            for (int km = 0; km < dm; ++km)
                                it->second.add_to(tb->base + km * tb->dim_sym + srow,
                                                  sb->base + km * sb->dim_sym + wcol, coeff);
                        }
                    } else if (unbarred_count == 1 && !img.empty() && img.front() < hom.base_dim) {
                        const int gen = img.front();
                        const Word rest(img.begin() + 1, img.end());
                        const int wcol = hom.component_index(p, rest);
                        const int uw = rw.word_degree(rest);
                        for (const auto& [b, dm] : mc.dims()) {
                            const int n = b - uw;
                            auto it = eps.find(n);
                            if (it == eps.end())
                                continue;
                            CoeffBlocks src(sym_src, mc, n);
                            CoeffBlocks dst(sym_dst, mc, n + 1);
                            const auto* sb = src.find(uw);
                            const auto* tb = dst.find(us);
                            if (!sb || !tb)
                                continue;
                            // (-1)^{|x| n} x . phi(rest)
                            const Rat twist =
                                (g.degree(gen) % 2 != 0 && n % 2 != 0) ? -1 : 1;
                            for (int km = 0; km < m.dim(); ++km) {
                                if (m.degree(km) != b)
                                    continue;
                                const int kpos = m.position_in_degree(km);
                                for (const auto& [kt, a] : m.action_of(gen, km)) {
                                    it->second.add_to(
                                        tb->base + m.position_in_degree(kt) * tb->dim_sym + srow,
                                        sb->base + kpos * sb->dim_sym + wcol,
                                        coeff * twist * a);
                                }
                            }
                        }
                    } else {
                        throw std::logic_error("unexpected rewriting shape in ce_coefficients");
                    }
                }
                prefix += hom.cone.degree(s[k]);
            }
        }
        for (auto& [n, e] : eps)
            out.module.set_mixed(-p, n, std::move(e));
    }
    if (auto v = out.module.validate())
        throw AxiomFailure("ce_coefficients: module validation failed at weight "
                           + std::to_string(v->weight) + ", degree " + std::to_string(v->degree)
                           + ": " + v->message);
    return out;
}

CeMap ce_map(const LieMorphism& f, int maxweight)
{
    if (auto v = validate_morphism(f))
        throw NotLieMorphism("ce_map: " + v->identity + " fails (witness: "
                             + (v->witnesses.empty() ? std::string("?") : v->witnesses.front())
                             + ")");
    CeMap out;
    out.source = ce_homological(*f.src, maxweight);
    out.target = ce_homological(*f.dst, maxweight);
    const LieRewriter rw_dst(out.target.cone);
    const int msrc = f.src->dim();
    const int mdst = f.dst->dim();

    for (int p = 0; p <= maxweight; ++p) {
        const ChainComplex& cs = out.source.module.weight(p);
        const ChainComplex& ct = out.target.module.weight(p);
        for (const auto& [n, d] : cs.dims()) {
            RatMatrix mat(ct.dim(n), d);
            const LieRewriter rw_src(out.source.cone);
            for (const auto& w : out.source.monomials.at(p)) {
                if (rw_src.word_degree(w) != n)
                    continue;
                const int col = out.source.component_index(p, w);
                // image = product over letters of barred f(x)
                Expansion acc;
                acc[{}] = 1;
                for (int letter : w) {
                    Expansion next;
                    for (const auto& [word, c] : acc)
                        for (const auto& [t, q] : f.images.at(letter - msrc)) {
                            Word longer = word;
                            longer.push_back(t + mdst);
                            for (const auto& [nw, nc] : rw_dst.normalize(longer, c * q))
                                expansion_add(next, nw, nc);
                        }
                    acc = std::move(next);
                }
                for (const auto& [img, c] : acc)
                    mat.add_to(out.target.component_index(p, img), col, c);
            }
            out.matrices[{p, n}] = std::move(mat);
        }
    }
    // functoriality checks: d, eps, and the coproduct
    for (int p = 0; p <= maxweight; ++p) {
        const ChainComplex& cs = out.source.module.weight(p);
        for (const auto& [n, dn] : cs.dims()) {
            const RatMatrix F = out.matrices.at({p, n});
            if (cs.dim(n - 1) > 0 || out.target.module.weight(p).dim(n - 1) > 0) {
                RatMatrix lhs = out.target.module.weight(p).differential(n) * F;
                auto itF = out.matrices.find({p, n - 1});
                RatMatrix rhs = (itF != out.matrices.end())
                    ? itF->second * cs.differential(n)
                    : RatMatrix(out.target.module.weight(p).dim(n - 1), dn);
                if (lhs != rhs)
                    throw AxiomFailure("ce_map: induced map does not commute with d");
            }
            if (p > 0) {
                RatMatrix lhs = out.target.module.mixed(p, n) * F;
                auto itF = out.matrices.find({p - 1, n + 1});
                RatMatrix rhs = (itF != out.matrices.end())
                    ? itF->second * out.source.module.mixed(p, n)
                    : RatMatrix(out.target.module.weight(p - 1).dim(n + 1), dn);
                if (lhs != rhs)
                    throw AxiomFailure("ce_map: induced map does not commute with eps");
            }
            // coproduct: (F (x) F) o Delta_src = Delta_dst o F
            std::map<std::pair<Word, Word>, Rat> lhs_pairs, rhs_pairs;
            for (const auto& w : out.source.monomials.at(p)) {
                const LieRewriter rw_src(out.source.cone);
                if (rw_src.word_degree(w) != n)
                    continue;
                const int col = out.source.component_index(p, w);
                // lhs: comultiply in the source, then map both factors
                for (const auto& [rc, v] : out.source.comult.at({p, n}).entries()) {
                    if (rc.second != col)
                        continue;
                    TensorSlot s = decode_tensor_index(out.source.module, out.source.module,
                                                       p, n, rc.first);
                    const Word& lw = out.source.component_word(s.left_weight, s.left_degree, s.left);
                    const Word& rword = out.source.component_word(p - s.left_weight,
                                                                  n - s.left_degree, s.right);
                    auto map_word = [&](const Word& word) {
                        Expansion acc;
                        acc[{}] = 1;
                        for (int letter : word) {
                            Expansion next;
                            for (const auto& [ww, c] : acc)
                                for (const auto& [t, q] : f.images.at(letter - msrc)) {
                                    Word longer = ww;
                                    longer.push_back(t + mdst);
                                    for (const auto& [nw, nc] : rw_dst.normalize(longer, c * q))
                                        expansion_add(next, nw, nc);
                                }
                            acc = std::move(next);
                        }
                        return acc;
                    };
                    for (const auto& [la, ca] : map_word(lw))
                        for (const auto& [rb, cb] : map_word(rword)) {
                            const Rat add = v * ca * cb;
                            auto& cell = lhs_pairs[{la, rb}];
                            cell += add;
                            if (cell == 0)
                                lhs_pairs.erase({la, rb});
                        }
                }
                // rhs: map w, comultiply in the target
                for (const auto& [rc, v] : out.matrices.at({p, n}).entries()) {
                    if (rc.second != col)
                        continue;
                    for (const auto& [tc, tv] : out.target.comult.at({p, n}).entries()) {
                        if (tc.second != rc.first)
                            continue;
                        TensorSlot s = decode_tensor_index(out.target.module, out.target.module,
                                                           p, n, tc.first);
                        const Word& lw2 = out.target.component_word(s.left_weight,
                                                                    s.left_degree, s.left);
                        const Word& rw2 = out.target.component_word(p - s.left_weight,
                                                                    n - s.left_degree, s.right);
                        auto& cell = rhs_pairs[{lw2, rw2}];
                        cell += v * tv;
                        if (cell == 0)
                            rhs_pairs.erase({lw2, rw2});
                    }
                }
                if (lhs_pairs != rhs_pairs)
                    throw AxiomFailure("ce_map: induced map does not respect the coproduct");
                lhs_pairs.clear();
                rhs_pairs.clear();
            }
        }
    }
    return out;
}

namespace {

// split a monomial of CE(g x h) into its g-part and h-part; letters of the
// product cone are ordered g, h, barred g, barred h
std::pair<Word, Word> split_product_monomial(const Word& w, int gdim, int hdim, int kdim)
{
    Word wg, wh;
    for (int letter : w) {
        const int plain = letter - kdim; // barred letters of the product cone
        if (plain < gdim)
            wg.push_back(plain + gdim); // barred index in the cone of g
        else
            wh.push_back(plain - gdim + hdim); // barred index in the cone of h
    }
    return {wg, wh};
}

std::map<std::pair<Word, Word>, Rat> comult_pairs(const CeHomological& ce, int p, int n, int col)
{
    std::map<std::pair<Word, Word>, Rat> out;
    auto it = ce.comult.find({p, n});
    if (it == ce.comult.end())
        return out;
    for (const auto& [rc, v] : it->second.entries()) {
        if (rc.second != col)
            continue;
        TensorSlot s = decode_tensor_index(ce.module, ce.module, p, n, rc.first);
        out[{ce.component_word(s.left_weight, s.left_degree, s.left),
             ce.component_word(p - s.left_weight, n - s.left_degree, s.right)}] = v;
    }
    return out;
}

} // namespace

std::optional<std::string> monoidality_check(const DgLieAlgebra& g, const DgLieAlgebra& h,
                                             int maxweight)
{
    const DgLieAlgebra k = product_lie(g, h);
    const CeHomological A = ce_homological(g, maxweight);
    const CeHomological B = ce_homological(h, maxweight);
    const CeHomological K = ce_homological(k, maxweight);
    const MixedModule T = tensor_mixed(A.module, B.module);
    const LieRewriter rwk(K.cone);
    const LieRewriter rwa(A.cone);
    const LieRewriter rwb(B.cone);
    const int gdim = g.dim(), hdim = h.dim(), kdim = k.dim();

    // the canonical bijection, as a permutation matrix per component
    std::map<std::pair<int, int>, RatMatrix> bij;
    for (int p = 0; p <= maxweight; ++p) {
        const ChainComplex& ck = K.module.weight(p);
        for (const auto& [n, d] : ck.dims()) {
            if (T.weight(p).dim(n) != d)
                return "weight " + std::to_string(p) + ", degree " + std::to_string(n)
                    + ": component dimensions differ";
            RatMatrix P(d, d);
            for (const auto& w : K.monomials.at(p)) {
                if (rwk.word_degree(w) != n)
                    continue;
                auto [wg, wh] = split_product_monomial(w, gdim, hdim, kdim);
                TensorSlot slot;
                slot.left_weight = static_cast<int>(wg.size());
                slot.left_degree = rwa.word_degree(wg);
                slot.left = A.component_index(slot.left_weight, wg);
                slot.right = B.component_index(p - slot.left_weight, wh);
                P.add_to(encode_tensor_index(A.module, B.module, p, n, slot),
                         K.component_index(p, w), 1);
            }
            bij[{p, n}] = std::move(P);
        }
    }
    // d and eps through the bijection
    for (int p = 0; p <= maxweight; ++p) {
        const ChainComplex& ck = K.module.weight(p);
        for (const auto& [n, d] : ck.dims()) {
            const RatMatrix& P = bij.at({p, n});
            if (ck.dim(n - 1) > 0 || T.weight(p).dim(n - 1) > 0) {
                auto itP = bij.find({p, n - 1});
                RatMatrix lhs = T.weight(p).differential(n) * P;
                RatMatrix rhs = (itP != bij.end())
                    ? itP->second * ck.differential(n)
                    : RatMatrix(T.weight(p).dim(n - 1), d);
                if (lhs != rhs)
                    return "internal differential mismatch at weight " + std::to_string(p)
                        + ", degree " + std::to_string(n);
            }
            if (p > 0) {
                auto itP = bij.find({p - 1, n + 1});
                RatMatrix lhs = T.mixed(p, n) * P;
                RatMatrix rhs = (itP != bij.end())
                    ? itP->second * K.module.mixed(p, n)
                    : RatMatrix(T.weight(p - 1).dim(n + 1), d);
                if (lhs != rhs)
                    return "mixed differential mismatch at weight " + std::to_string(p)
                        + ", degree " + std::to_string(n);
            }
        }
    }
    // the coproduct, compared pairwise through the bijection
    for (int p = 0; p <= maxweight; ++p) {
        for (const auto& w : K.monomials.at(p)) {
            const int n = rwk.word_degree(w);
            auto lhs = comult_pairs(K, p, n, K.component_index(p, w));
            auto [wg, wh] = split_product_monomial(w, gdim, hdim, kdim);
            const int i = static_cast<int>(wg.size());
            std::map<std::pair<Word, Word>, Rat> rhs;
            auto dg = comult_pairs(A, i, rwa.word_degree(wg), A.component_index(i, wg));
            auto dh = comult_pairs(B, p - i, rwb.word_degree(wh),
                                   B.component_index(p - i, wh));
            for (const auto& [gp, cg] : dg)
                for (const auto& [hp, ch] : dh) {
                    // (x1 (x) y1) (x) (x2 (x) y2) with the interchange sign
                    const int sgn_exp = rwa.word_degree(gp.second) * rwb.word_degree(hp.first);
                    Word left, right;
                    auto merge = [&](const Word& xg, const Word& xh) {
                        Word m;
                        for (int letter : xg)
                            m.push_back(letter - gdim + kdim);
                        for (int letter : xh)
                            m.push_back(letter - hdim + gdim + kdim);
                        return m;
                    };
                    left = merge(gp.first, hp.first);
                    right = merge(gp.second, hp.second);
                    Rat& cell = rhs[{left, right}];
                    const Rat prod = cg * ch;
                    cell += (sgn_exp % 2 == 0) ? prod : Rat(-prod);
                    if (cell == 0)
                        rhs.erase({left, right});
                }
            if (lhs != rhs)
                return "coproduct mismatch at weight " + std::to_string(p) + " on "
                    + K.monomial_name(w);
        }
    }
    return std::nullopt;
}

std::optional<std::string> duality_check(const DgLieAlgebra& g, int maxweight)
{
    const CeHomological hom = ce_homological(g, maxweight);
    const CeCohomological coh = ce_cohomological(hom);
    if (coh.module != dual_mixed(hom.module))
        return "cohomological module differs from the dual of the homological one";
    if (dual_mixed(coh.module) != hom.module)
        return "dual is not involutive on the homological module";
    // product = transpose of the coproduct under the index pairing
    const MixedModule& N = coh.module;
    for (const auto& [key, delta] : hom.comult) {
        const auto [hp, hn] = key;
        auto it = coh.product.find({-hp, -hn});
        const RatMatrix mult = (it != coh.product.end())
            ? it->second
            : RatMatrix(0, 0);
        if (it == coh.product.end()) {
            if (!delta.is_zero())
                return "missing product component";
            continue;
        }
        for (const auto& [rc, v] : delta.entries()) {
            TensorSlot s = decode_tensor_index(hom.module, hom.module, hp, hn, rc.first);
            TensorSlot dual_slot{-s.left_weight, -s.left_degree, s.left, s.right};
            if (mult.at(rc.second, encode_tensor_index(N, N, -hp, -hn, dual_slot)) != v)
                return "product is not the transpose of the coproduct";
        }
    }
    // coderivation law for the coproduct
    const MixedModule TM = tensor_mixed(hom.module, hom.module);
    for (const auto& [key, delta] : hom.comult) {
        const auto [p, n] = key;
        if (p == 0)
            continue;
        auto it = hom.comult.find({p - 1, n + 1});
        const int rows = TM.weight(p - 1).dim(n + 1);
        RatMatrix lhs = (it != hom.comult.end())
            ? it->second * hom.module.mixed(p, n)
            : RatMatrix(rows, hom.module.weight(p).dim(n));
        RatMatrix rhs = TM.mixed(p, n) * delta;
        if (lhs != rhs)
            return "coproduct is not compatible with eps at weight " + std::to_string(p)
                + ", degree " + std::to_string(n);
    }
    // derivation law for the product
    const MixedModule TN = tensor_mixed(N, N);
    for (const auto& [key, mult] : coh.product) {
        const auto [p, n] = key;
        auto it = coh.product.find({p - 1, n + 1});
        if (it == coh.product.end())
            continue;
        RatMatrix lhs = N.mixed(p, n) * mult;
        RatMatrix rhs = it->second * TN.mixed(p, n);
        if (lhs != rhs)
            return "product is not compatible with eps at weight " + std::to_string(p)
                + ", degree " + std::to_string(n);
    }
    return std::nullopt;
}

BettiResult betti(const DgLieAlgebra& g, CeSide side, const Representation* coefficients,
                  int maxweight, int degree_lo, int degree_hi)
{
    if (auto v = g.validate())
        throw AxiomFailure("betti: " + v->identity + " fails on the input");
    BettiResult out;
    if (g.is_discrete()) {
        if (maxweight < g.dim())
            out.warnings.push_back("window may be unfaithful: maxweight "
                                   + std::to_string(maxweight) + " < dim "
                                   + std::to_string(g.dim()));
    } else {
        out.warnings.push_back("window faithfulness is the caller's responsibility "
                               "for non-discrete inputs");
    }
    if (side == CeSide::homological && coefficients)
        throw std::invalid_argument("coefficients are supported on the cohomological side only");
    ChainComplex total;
    if (side == CeSide::homological) {
        total = tate_total(ce_homological(g, maxweight).module, -maxweight);
    } else if (coefficients) {
        total = tate_total(ce_coefficients(g, *coefficients, maxweight).module, 0);
    } else {
        total = tate_total(ce_cohomological(g, maxweight).module, 0);
    }
    if (auto v = total.validate())
        throw AxiomFailure("betti: total complex fails d^2 = 0");
    for (int deg = degree_lo; deg <= degree_hi; ++deg) {
        const int n = (side == CeSide::homological) ? deg : -deg;
        out.by_degree[deg] = homology_dim(total.differential(n + 1), total.differential(n));
    }
    return out;
}

} // namespace mgce
