#include "mgce/pbw.hpp"

#include <algorithm>

namespace mgce {

void expansion_add(Expansion& e, const Word& w, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = e.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            e.erase(it);
    }
}

bool LieRewriter::is_normal(const Word& w) const
{
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] > w[k + 1])
            return false;
        if (w[k] == w[k + 1] && L_->degree(w[k]) % 2 != 0)
            return false;
    }
    return true;
}

int LieRewriter::word_degree(const Word& w) const
{
    int d = 0;
    for (int i : w)
        d += L_->degree(i);
    return d;
}

Expansion LieRewriter::normalize(const Word& w, const Rat& coeff) const
{
    Expansion out;
    std::vector<std::pair<Word, Rat>> work{{w, coeff}};
    while (!work.empty()) {
        auto [word, c] = std::move(work.back());
        work.pop_back();
        if (c == 0)
            continue;
        size_t bad = word.size();
        for (size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] > word[k + 1]
                || (word[k] == word[k + 1] && L_->degree(word[k]) % 2 != 0)) {
                bad = k;
                break;
            }
        }
        if (bad == word.size()) {
            expansion_add(out, word, c);
            continue;
        }
        const int a = word[bad], b = word[bad + 1];
        auto spliced = [&](const LieElement& bracket, const Rat& factor) {
            for (const auto& [t, q] : bracket) {
                Word shorter;
                shorter.reserve(word.size() - 1);
                shorter.insert(shorter.end(), word.begin(), word.begin() + bad);
                shorter.push_back(t);
                shorter.insert(shorter.end(), word.begin() + bad + 2, word.end());
                work.emplace_back(std::move(shorter), c * factor * q);
            }
        };
        if (a == b) {
            // odd letter: x x = [x,x]/2
            spliced(L_->bracket_of(a, a), Rat(1, 2));
            continue;
        }
        Word swapped = word;
        std::swap(swapped[bad], swapped[bad + 1]);
        const bool both_odd = L_->degree(a) % 2 != 0 && L_->degree(b) % 2 != 0;
        work.emplace_back(std::move(swapped), both_odd ? -c : c);
        spliced(L_->bracket_of(a, b), 1);
    }
    return out;
}

Expansion LieRewriter::derivative(const Word& w, const Rat& coeff) const
{
    Expansion out;
    int prefix = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        const Rat sign = (prefix % 2 == 0) ? coeff : -coeff;
        for (const auto& [t, q] : L_->differential_of(w[k])) {
            Word replaced = w;
            replaced[k] = t;
            for (const auto& [nw, nc] : normalize(replaced, sign * q))
                expansion_add(out, nw, nc);
        }
        prefix += L_->degree(w[k]);
    }
    return out;
}

PbwTruncation::PbwTruncation(const DgLieAlgebra& L, int max_word)
    : algebra_(L), rewriter_(algebra_), max_word_(max_word)
{
    if (max_word < 0)
        throw std::invalid_argument("negative word cap");
    std::vector<Word> current{{}};
    basis_.push_back({});
    for (int len = 1; len <= max_word_; ++len) {
        std::vector<Word> next;
        for (const auto& w : current) {
            const int start = w.empty() ? 0 : w.back();
            for (int g = start; g < algebra_.dim(); ++g) {
                if (!w.empty() && g == w.back() && algebra_.degree(g) % 2 != 0)
                    continue;
                Word longer = w;
                longer.push_back(g);
                next.push_back(std::move(longer));
            }
        }
        // lexicographic inside a fixed length
        std::sort(next.begin(), next.end());
        basis_.insert(basis_.end(), next.begin(), next.end());
        current = std::move(next);
    }
    for (int i = 0; i < size(); ++i)
        index_[basis_[i]] = i;
}

std::optional<int> PbwTruncation::index_of(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

PbwTruncation::Windowed PbwTruncation::window(const Expansion& e) const
{
    Windowed out;
    for (const auto& [w, c] : e) {
        if (static_cast<int>(w.size()) > max_word_) {
            out.overflow = true;
            continue;
        }
        out.terms[index_.at(w)] += c;
        if (out.terms[index_.at(w)] == 0)
            out.terms.erase(index_.at(w));
    }
    return out;
}

PbwTruncation::Windowed PbwTruncation::product(int i, int j) const
{
    Word w = basis_.at(i);
    const Word& v = basis_.at(j);
    w.insert(w.end(), v.begin(), v.end());
    return window(rewriter_.normalize(w));
}

std::map<int, Rat> PbwTruncation::differential(int idx) const
{
    Windowed w = window(rewriter_.derivative(basis_.at(idx)));
    if (w.overflow)
        throw std::logic_error("pbw differential left the window");
    return w.terms;
}

namespace {

int count_barred(const Word& w, int base_dim)
{
    int p = 0;
    for (int i : w)
        if (i >= base_dim)
            ++p;
    return p;
}

} // namespace

int UConeMixed::weight_of(const Word& w) const
{
    return count_barred(w, base_dim);
}

int UConeMixed::component_index(int weight, const Word& w) const
{
    const LieRewriter rw(cone);
    const int deg = rw.word_degree(w);
    const auto& list = basis.at(weight);
    int idx = 0;
    for (const auto& v : list) {
        if (v == w)
            return idx;
        if (rw.word_degree(v) == deg)
            ++idx;
    }
    throw std::out_of_range("word not in the window");
}

const Word& UConeMixed::component_word(int weight, int degree, int index) const
{
    const LieRewriter rw(cone);
    int idx = 0;
    for (const auto& v : basis.at(weight)) {
        if (rw.word_degree(v) == degree) {
            if (idx == index)
                return v;
            ++idx;
        }
    }
    throw std::out_of_range("no such component slot");
}

Expansion UConeMixed::epsilon_expansion(const Word& w) const
{
    const LieRewriter rw(cone);
    Expansion out;
    int prefix = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] >= base_dim) {
            Word unbarred = w;
            unbarred[k] = w[k] - base_dim;
            const Rat sign = (prefix % 2 == 0) ? 1 : -1;
            for (const auto& [nw, nc] : rw.normalize(unbarred, sign))
                expansion_add(out, nw, nc);
        }
        prefix += cone.degree(w[k]);
    }
    return out;
}

Expansion UConeMixed::act(const Word& u, const Word& w) const
{
    const LieRewriter rw(cone);
    Word prod = u;
    prod.insert(prod.end(), w.begin(), w.end());
    return rw.normalize(prod);
}

UConeMixed u_cone_mixed(const DgLieAlgebra& g, int D, int P)
{
    if (g.validate())
        throw AxiomFailure("u_cone_mixed: input is not a dg Lie algebra");
    UConeMixed out;
    out.cone = cone_lie(g);
    out.base_dim = g.dim();
    out.max_word = D;
    out.max_sym = P;
    const LieRewriter rw(out.cone);

    // window: sorted cone words of total length <= D + P, at most P barred
    PbwTruncation full(out.cone, D + P);
    for (int i = 0; i < full.size(); ++i) {
        const Word& w = full.monomial(i);
        const int p = count_barred(w, out.base_dim);
        if (p <= P)
            out.basis[p].push_back(w);
    }
    // group each weight by internal degree, stable in the (length, lex) order
    for (auto& [p, words] : out.basis) {
        std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
            return rw.word_degree(a) < rw.word_degree(b);
        });
        for (int k = 0; k < static_cast<int>(words.size()); ++k)
            out.ordinal[p][words[k]] = k;
    }

    for (const auto& [p, words] : out.basis) {
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
    for (const auto& [p, words] : out.basis) {
        if (p == 0)
            continue;
        const ChainComplex& src = out.module.weight(p);
        const ChainComplex& dst = out.module.weight(p - 1);
        std::map<int, RatMatrix> eps;
        for (const auto& [n, d] : src.dims())
            eps.emplace(n, RatMatrix(dst.dim(n + 1), d));
        for (const auto& w : words) {
            const int n = rw.word_degree(w);
            const int col = out.component_index(p, w);
            bool truncated = false;
            for (const auto& [img, coeff] : out.epsilon_expansion(w)) {
                const int pb = count_barred(img, out.base_dim);
                if (pb != p - 1)
                    throw std::logic_error("mixed image with unexpected weight");
                if (static_cast<int>(img.size()) > D + P) {
                    truncated = true; // cannot happen: eps never lengthens words
                    continue;
                }
                eps.at(n).add_to(out.component_index(p - 1, img), col, coeff);
            }
            if (truncated)
                out.truncated_sources.emplace_back(p, w);
        }
        for (auto& [n, e] : eps)
            out.module.set_mixed(p, n, std::move(e));
    }
    return out;
}

namespace {

// sort an exterior tuple, returning the permutation sign; zero on repeats
std::optional<std::pair<Word, int>> exterior_sort(Word lambda)
{
    int sign = 1;
    for (size_t i = 1; i < lambda.size(); ++i)
        for (size_t j = i; j > 0 && lambda[j - 1] >= lambda[j]; --j) {
            if (lambda[j - 1] == lambda[j])
                return std::nullopt;
            std::swap(lambda[j - 1], lambda[j]);
            sign = -sign;
        }
    return std::make_pair(std::move(lambda), sign);
}

} // namespace

KoszulResolution koszul_resolution(const DgLieAlgebra& g, int D, int P)
{
    if (!g.is_discrete())
        throw NotDiscrete("koszul_resolution: generators must sit in degree 0");
    if (g.validate())
        throw AxiomFailure("koszul_resolution: input is not a Lie algebra");
    if (P > g.dim())
        P = g.dim();
    KoszulResolution out;
    out.algebra = g;
    out.filtration = D;
    out.max_ext = P;
    const LieRewriter rw(g);

    PbwTruncation u(g, D);
    for (int n = 0; n <= P; ++n) {
        auto& slot = out.basis[n];
        // exterior tuples, strictly increasing
        std::vector<Word> tuples{{}};
        for (int step = 0; step < n; ++step) {
            std::vector<Word> next;
            for (const auto& t : tuples)
                for (int gidx = t.empty() ? 0 : t.back() + 1; gidx < g.dim(); ++gidx) {
                    Word longer = t;
                    longer.push_back(gidx);
                    next.push_back(std::move(longer));
                }
            tuples = std::move(next);
        }
        std::sort(tuples.begin(), tuples.end());
        for (int ui = 0; ui < u.size(); ++ui) {
            if (static_cast<int>(u.monomial(ui).size()) + n > D)
                continue;
            for (const auto& t : tuples)
                slot.emplace_back(u.monomial(ui), t);
        }
        std::sort(slot.begin(), slot.end());
        for (int k = 0; k < static_cast<int>(slot.size()); ++k)
            out.ordinal[n][slot[k]] = k;
        if (!slot.empty())
            out.complex.set_dim(n, static_cast<int>(slot.size()));
    }
    for (int n = 1; n <= P; ++n) {
        if (out.complex.dim(n) == 0)
            continue;
        RatMatrix dn(out.complex.dim(n - 1), out.complex.dim(n));
        for (const auto& [uw, lambda] : out.basis.at(n)) {
            const int col = out.ordinal.at(n).at({uw, lambda});
            // sum_k (-1)^{k+1} (u . g_k) (x) lambda minus k
            for (size_t k = 0; k < lambda.size(); ++k) {
                Word prod = uw;
                prod.push_back(lambda[k]);
                Word rest;
                for (size_t l = 0; l < lambda.size(); ++l)
                    if (l != k)
                        rest.push_back(lambda[l]);
                const Rat sign = (k % 2 == 0) ? 1 : -1; // (-1)^{k+1}, 1-based
                for (const auto& [nw, nc] : rw.normalize(prod, sign))
                    dn.add_to(out.ordinal.at(n - 1).at({nw, rest}), col, nc);
            }
            // sum_{k<l} (-1)^{k+l} u (x) (lambda with g_k removed, [g_k,g_l] at slot l)
            for (size_t k = 0; k < lambda.size(); ++k)
                for (size_t l = k + 1; l < lambda.size(); ++l) {
                    const Rat sign = ((k + l) % 2 == 0) ? 1 : -1; // (-1)^{k+l}, 1-based
                    for (const auto& [t, q] : g.bracket_of(lambda[k], lambda[l])) {
                        Word tup;
                        for (size_t s = 0; s < lambda.size(); ++s) {
                            if (s == k)
                                continue;
                            tup.push_back(s == l ? t : lambda[s]);
                        }
                        auto sorted = exterior_sort(tup);
                        if (!sorted)
                            continue;
                        dn.add_to(out.ordinal.at(n - 1).at({uw, sorted->first}), col,
                                  sign * q * sorted->second);
                    }
                }
        }
        out.complex.set_differential(n, std::move(dn));
    }
    out.augmentation = RatMatrix(1, out.complex.dim(0));
    for (const auto& [pair, k] : out.ordinal.at(0))
        if (pair.first.empty())
            out.augmentation.set(0, k, 1);
    return out;
}

} // namespace mgce
