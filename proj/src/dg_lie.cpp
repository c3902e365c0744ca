#include "mgce/dg_lie.hpp"

namespace mgce {

namespace {
const LieElement kZeroElement;

Rat parity_sign(int a, int b)
{
    return ((a % 2 != 0) && (b % 2 != 0)) ? Rat(-1) : Rat(1);
}

} // namespace

LieElement lie_scale(const LieElement& x, const Rat& c)
{
    LieElement out;
    if (c == 0)
        return out;
    for (const auto& [i, v] : x)
        out[i] = v * c;
    return out;
}

LieElement lie_add(const LieElement& x, const LieElement& y)
{
    LieElement out = x;
    for (const auto& [i, v] : y) {
        auto [it, fresh] = out.emplace(i, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0)
                out.erase(it);
        }
    }
    return out;
}

int DgLieAlgebra::add_generator(const std::string& name, int degree)
{
    gens_.push_back({name, degree});
    return dim() - 1;
}

std::optional<int> DgLieAlgebra::index_of(const std::string& name) const
{
    for (int i = 0; i < dim(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

void DgLieAlgebra::set_differential(int i, LieElement image)
{
    if (image.empty())
        diff_.erase(i);
    else
        diff_[i] = std::move(image);
}

void DgLieAlgebra::set_bracket(int i, int j, LieElement value)
{
    if (value.empty())
        bracket_.erase({i, j});
    else
        bracket_[{i, j}] = std::move(value);
}

const LieElement& DgLieAlgebra::differential_of(int i) const
{
    auto it = diff_.find(i);
    return it == diff_.end() ? kZeroElement : it->second;
}

LieElement DgLieAlgebra::bracket_of(int i, int j) const
{
    auto it = bracket_.find({i, j});
    if (it != bracket_.end())
        return it->second;
    auto mirror = bracket_.find({j, i});
    if (mirror != bracket_.end())
        return lie_scale(mirror->second, -parity_sign(degree(i), degree(j)));
    return {};
}

LieElement DgLieAlgebra::differential(const LieElement& x) const
{
    LieElement out;
    for (const auto& [i, c] : x)
        out = lie_add(out, lie_scale(differential_of(i), c));
    return out;
}

LieElement DgLieAlgebra::bracket(const LieElement& x, const LieElement& y) const
{
    LieElement out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            out = lie_add(out, lie_scale(bracket_of(i, j), a * b));
    return out;
}

bool DgLieAlgebra::is_discrete() const
{
    for (const auto& g : gens_)
        if (g.degree != 0)
            return false;
    return true;
}

std::optional<LieViolation> DgLieAlgebra::validate() const
{
    const int n = dim();
    // degree homogeneity of the structure maps
    for (const auto& [i, img] : diff_)
        for (const auto& [k, c] : img)
            if (degree(k) != degree(i) - 1)
                return LieViolation{"degree", {gens_[i].name}, "differential is not of degree -1"};
    for (const auto& [ij, val] : bracket_)
        for (const auto& [k, c] : val)
            if (degree(k) != degree(ij.first) + degree(ij.second))
                return LieViolation{"degree", {gens_[ij.first].name, gens_[ij.second].name},
                                    "bracket is not degree-additive"};
    // graded antisymmetry: [x,y] + (-1)^{pq} [y,x] = 0
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            LieElement lhs = lie_add(bracket_of(i, j),
                                     lie_scale(bracket_of(j, i), parity_sign(degree(i), degree(j))));
            if (!lhs.empty())
                return LieViolation{"antisymmetry", {gens_[i].name, gens_[j].name},
                                    "[x,y] + (-1)^{pq}[y,x] != 0"};
        }
    // graded Jacobi
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int p = degree(i), q = degree(j), r = degree(k);
                LieElement sum = lie_scale(bracket({{i, 1}}, bracket_of(j, k)), parity_sign(p, r));
                sum = lie_add(sum, lie_scale(bracket({{j, 1}}, bracket_of(k, i)), parity_sign(p, q)));
                sum = lie_add(sum, lie_scale(bracket({{k, 1}}, bracket_of(i, j)), parity_sign(q, r)));
                if (!sum.empty())
                    return LieViolation{"jacobi", {gens_[i].name, gens_[j].name, gens_[k].name},
                                        "graded Jacobi identity fails"};
            }
    // Leibniz: d[x,y] = [dx,y] + (-1)^p [x,dy]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LieElement lhs = differential(bracket_of(i, j));
            LieElement rhs = bracket(differential_of(i), {{j, 1}});
            rhs = lie_add(rhs, lie_scale(bracket({{i, 1}}, differential_of(j)),
                                         degree(i) % 2 == 0 ? Rat(1) : Rat(-1)));
            if (lhs != rhs)
                return LieViolation{"leibniz", {gens_[i].name, gens_[j].name},
                                    "d is not a bracket derivation"};
        }
    // d squared
    for (int i = 0; i < n; ++i)
        if (!differential(differential_of(i)).empty())
            return LieViolation{"d_squared", {gens_[i].name}, "d o d != 0"};
    return std::nullopt;
}

ChainComplex DgLieAlgebra::underlying_complex() const
{
    ChainComplex c;
    std::map<int, int> dims;
    for (const auto& g : gens_)
        ++dims[g.degree];
    for (const auto& [n, d] : dims)
        c.set_dim(n, d);
    for (const auto& [n, d] : dims) {
        if (c.dim(n - 1) == 0)
            continue;
        RatMatrix dn(c.dim(n - 1), d);
        for (int i = 0; i < dim(); ++i) {
            if (degree(i) != n)
                continue;
            for (const auto& [k, v] : differential_of(i))
                dn.add_to(position_in_degree(k), position_in_degree(i), v);
        }
        c.set_differential(n, std::move(dn));
    }
    return c;
}

int DgLieAlgebra::position_in_degree(int i) const
{
    int pos = 0;
    for (int k = 0; k < i; ++k)
        if (gens_[k].degree == gens_[i].degree)
            ++pos;
    return pos;
}

int DgLieAlgebra::generator_at(int degree_, int position) const
{
    int pos = 0;
    for (int k = 0; k < dim(); ++k)
        if (gens_[k].degree == degree_) {
            if (pos == position)
                return k;
            ++pos;
        }
    throw std::out_of_range("generator_at: no such basis slot");
}

DgLieAlgebra product_lie(const DgLieAlgebra& g, const DgLieAlgebra& h)
{
    DgLieAlgebra out;
    const int m = g.dim();
    for (int i = 0; i < m; ++i)
        out.add_generator(g.generator(i).name, g.degree(i));
    for (int j = 0; j < h.dim(); ++j) {
        std::string name = h.generator(j).name;
        while (out.index_of(name))
            name += "'";
        out.add_generator(name, h.degree(j));
    }
    auto shift_right = [m](const LieElement& x) {
        LieElement y;
        for (const auto& [i, c] : x)
            y[i + m] = c;
        return y;
    };
    for (int i = 0; i < m; ++i) {
        out.set_differential(i, g.differential_of(i));
        for (int j = 0; j < m; ++j)
            out.set_bracket(i, j, g.bracket_of(i, j));
    }
    for (int i = 0; i < h.dim(); ++i) {
        out.set_differential(i + m, shift_right(h.differential_of(i)));
        for (int j = 0; j < h.dim(); ++j)
            out.set_bracket(i + m, j + m, shift_right(h.bracket_of(i, j)));
    }
    return out;
}

DgLieAlgebra trivial_lie(const ChainComplex& c)
{
    DgLieAlgebra out;
    std::map<std::pair<int, int>, int> slot_to_gen;
    for (const auto& [n, d] : c.dims())
        for (int k = 0; k < d; ++k) {
            int idx = out.add_generator("g" + std::to_string(n) + "_" + std::to_string(k), n);
            slot_to_gen[{n, k}] = idx;
        }
    for (const auto& [n, d] : c.dims()) {
        const RatMatrix dn = c.differential(n);
        for (int k = 0; k < d; ++k) {
            LieElement img;
            for (const auto& [rc, v] : dn.entries())
                if (rc.second == k)
                    img[slot_to_gen.at({n - 1, rc.first})] = v;
            out.set_differential(slot_to_gen.at({n, k}), std::move(img));
        }
    }
    return out;
}

int Representation::add_basis_vector(const std::string& name, int degree)
{
    basis_.push_back({name, degree});
    return dim() - 1;
}

std::optional<int> Representation::index_of(const std::string& name) const
{
    for (int k = 0; k < dim(); ++k)
        if (basis_[k].name == name)
            return k;
    return std::nullopt;
}

void Representation::set_differential(int k, LieElement image)
{
    if (image.empty())
        diff_.erase(k);
    else
        diff_[k] = std::move(image);
}

void Representation::set_action(int gen, int k, LieElement value)
{
    if (value.empty())
        action_.erase({gen, k});
    else
        action_[{gen, k}] = std::move(value);
}

const LieElement& Representation::differential_of(int k) const
{
    auto it = diff_.find(k);
    return it == diff_.end() ? kZeroElement : it->second;
}

const LieElement& Representation::action_of(int gen, int k) const
{
    auto it = action_.find({gen, k});
    return it == action_.end() ? kZeroElement : it->second;
}

LieElement Representation::act(int gen, const LieElement& v) const
{
    LieElement out;
    for (const auto& [k, c] : v)
        out = lie_add(out, lie_scale(action_of(gen, k), c));
    return out;
}

LieElement Representation::differential(const LieElement& v) const
{
    LieElement out;
    for (const auto& [k, c] : v)
        out = lie_add(out, lie_scale(differential_of(k), c));
    return out;
}

ChainComplex Representation::underlying_complex() const
{
    ChainComplex c;
    std::map<int, int> dims;
    for (const auto& b : basis_)
        ++dims[b.degree];
    for (const auto& [n, d] : dims)
        c.set_dim(n, d);
    for (const auto& [n, d] : dims) {
        if (c.dim(n - 1) == 0)
            continue;
        RatMatrix dn(c.dim(n - 1), d);
        for (int k = 0; k < dim(); ++k) {
            if (degree(k) != n)
                continue;
            for (const auto& [t, v] : differential_of(k))
                dn.add_to(position_in_degree(t), position_in_degree(k), v);
        }
        c.set_differential(n, std::move(dn));
    }
    return c;
}

int Representation::position_in_degree(int k) const
{
    int pos = 0;
    for (int t = 0; t < k; ++t)
        if (basis_[t].degree == basis_[k].degree)
            ++pos;
    return pos;
}

Representation Representation::trivial()
{
    Representation m;
    m.add_basis_vector("1", 0);
    return m;
}

Representation Representation::adjoint(const DgLieAlgebra& g)
{
    Representation m;
    for (int k = 0; k < g.dim(); ++k)
        m.add_basis_vector(g.generator(k).name, g.degree(k));
    for (int k = 0; k < g.dim(); ++k)
        m.set_differential(k, g.differential_of(k));
    for (int i = 0; i < g.dim(); ++i)
        for (int k = 0; k < g.dim(); ++k)
            m.set_action(i, k, g.bracket_of(i, k));
    return m;
}

std::optional<LieViolation> validate_rep(const DgLieAlgebra& g, const Representation& m)
{
    for (int k = 0; k < m.dim(); ++k)
        for (const auto& [t, c] : m.differential_of(k))
            if (m.degree(t) != m.degree(k) - 1)
                return LieViolation{"degree", {m.basis_vector(k).name},
                                    "representation differential is not of degree -1"};
    for (int i = 0; i < g.dim(); ++i)
        for (int k = 0; k < m.dim(); ++k)
            for (const auto& [t, c] : m.action_of(i, k))
                if (m.degree(t) != g.degree(i) + m.degree(k))
                    return LieViolation{"degree", {g.generator(i).name, m.basis_vector(k).name},
                                        "action is not degree-additive"};
    for (int k = 0; k < m.dim(); ++k)
        if (!m.differential(m.differential_of(k)).empty())
            return LieViolation{"d_squared", {m.basis_vector(k).name}, "d o d != 0 on the module"};
    // d(x.v) = dx.v + (-1)^{|x|} x.dv
    for (int i = 0; i < g.dim(); ++i)
        for (int k = 0; k < m.dim(); ++k) {
            LieElement lhs = m.differential(m.action_of(i, k));
            LieElement rhs;
            for (const auto& [t, c] : g.differential_of(i))
                rhs = lie_add(rhs, lie_scale(m.action_of(t, k), c));
            rhs = lie_add(rhs, lie_scale(m.act(i, m.differential_of(k)),
                                         g.degree(i) % 2 == 0 ? Rat(1) : Rat(-1)));
            if (lhs != rhs)
                return LieViolation{"leibniz", {g.generator(i).name, m.basis_vector(k).name},
                                    "action is not compatible with the differentials"};
        }
    // [x,y].v = x.(y.v) - (-1)^{pq} y.(x.v)  (the U(g)-module convention)
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < m.dim(); ++k) {
                LieElement lhs;
                for (const auto& [t, c] : g.bracket_of(i, j))
                    lhs = lie_add(lhs, lie_scale(m.action_of(t, k), c));
                LieElement rhs = m.act(i, m.action_of(j, k));
                rhs = lie_add(rhs, lie_scale(m.act(j, m.action_of(i, k)),
                                             -parity_sign(g.degree(i), g.degree(j))));
                if (lhs != rhs)
                    return LieViolation{"module_law",
                                        {g.generator(i).name, g.generator(j).name, m.basis_vector(k).name},
                                        "[x,y].v != x.(y.v) - (-1)^{pq} y.(x.v)"};
            }
    return std::nullopt;
}

LieElement LieMorphism::apply(const LieElement& x) const
{
    LieElement out;
    for (const auto& [i, c] : x)
        out = lie_add(out, lie_scale(images.at(i), c));
    return out;
}

std::optional<LieViolation> validate_morphism(const LieMorphism& f)
{
    const auto& g = *f.src;
    const auto& h = *f.dst;
    for (int i = 0; i < g.dim(); ++i)
        for (const auto& [k, c] : f.images.at(i))
            if (h.degree(k) != g.degree(i))
                return LieViolation{"degree", {g.generator(i).name}, "morphism does not preserve degree"};
    for (int i = 0; i < g.dim(); ++i)
        if (f.apply(g.differential_of(i)) != h.differential(f.images.at(i)))
            return LieViolation{"chain_map", {g.generator(i).name}, "morphism does not commute with d"};
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            if (f.apply(g.bracket_of(i, j)) != h.bracket(f.images.at(i), f.images.at(j)))
                return LieViolation{"bracket", {g.generator(i).name, g.generator(j).name},
                                    "morphism does not preserve the bracket"};
    return std::nullopt;
}

DgLieAlgebra cone_lie(const DgLieAlgebra& g)
{
    DgLieAlgebra cn;
    const int m = g.dim();
    for (int i = 0; i < m; ++i)
        cn.add_generator(g.generator(i).name, g.degree(i));
    for (int i = 0; i < m; ++i)
        cn.add_generator(g.generator(i).name + "~", g.degree(i) - 1);
    auto barred = [m](const LieElement& x) {
        LieElement y;
        for (const auto& [i, c] : x)
            y[i + m] = c;
        return y;
    };
    for (int i = 0; i < m; ++i) {
        cn.set_differential(i, g.differential_of(i));
        cn.set_differential(i + m, lie_scale(barred(g.differential_of(i)), -1));
        for (int j = 0; j < m; ++j) {
            cn.set_bracket(i, j, g.bracket_of(i, j));
            cn.set_bracket(i, j + m, lie_scale(barred(g.bracket_of(i, j)),
                                               g.degree(i) % 2 == 0 ? Rat(1) : Rat(-1)));
            cn.set_bracket(i + m, j, barred(g.bracket_of(i, j)));
        }
    }
    return cn;
}

MixedGradedLie cone_mixed(const DgLieAlgebra& g)
{
    if (g.validate())
        throw AxiomFailure("cone_mixed: input algebra is not a dg Lie algebra");
    MixedGradedLie out;
    out.cone = cone_lie(g);
    out.base_dim = g.dim();
    if (auto v = out.cone.validate())
        throw AxiomFailure("cone_mixed: cone bracket signs violate " + v->identity);
    ChainComplex base = g.underlying_complex();
    out.module.set_weight(0, base);
    out.module.set_weight(1, base.shift(-1));
    for (const auto& [n, d] : base.dims()) {
        RatMatrix e = out.module.mixed(1, n - 1);
        for (int k = 0; k < d; ++k)
            e.add_to(k, k, 1);
        out.module.set_mixed(1, n - 1, std::move(e));
    }
    // the mixed differential must act as a left Koszul derivation of the bracket
    const auto& cn = out.cone;
    auto eps = [&](int i) -> LieElement {
        if (i >= out.base_dim)
            return {{i - out.base_dim, 1}};
        return {};
    };
    auto eps_elem = [&](const LieElement& x) {
        LieElement y;
        for (const auto& [i, c] : x)
            y = lie_add(y, lie_scale(eps(i), c));
        return y;
    };
    for (int a = 0; a < cn.dim(); ++a)
        for (int b = 0; b < cn.dim(); ++b) {
            LieElement lhs = eps_elem(cn.bracket_of(a, b));
            LieElement rhs = cn.bracket(eps(a), {{b, 1}});
            rhs = lie_add(rhs, lie_scale(cn.bracket({{a, 1}}, eps(b)),
                                         cn.degree(a) % 2 == 0 ? Rat(1) : Rat(-1)));
            if (lhs != rhs)
                throw AxiomFailure("cone_mixed: mixed differential is not a bracket derivation");
        }
    if (out.module.validate())
        throw AxiomFailure("cone_mixed: module validation failed");
    return out;
}

} // namespace mgce
