#pragma once

#include "mgce/dg_lie.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mgce {

struct NotDiscrete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word in U(L): generator indices, not necessarily normal-ordered.
using Word = std::vector<int>;

// Linear combination of normal-ordered words, any length.
using Expansion = std::map<Word, Rat>;

void expansion_add(Expansion& e, const Word& w, const Rat& c);

// Normal ordering in the universal enveloping algebra: non-decreasing
// words, strictly increasing at odd-degree letters, via the rewriting
//   x y = (-1)^{|x||y|} y x + [x,y]   and   x x = [x,x]/2  (x odd).
class LieRewriter {
public:
    explicit LieRewriter(const DgLieAlgebra& L) : L_(&L) {}

    const DgLieAlgebra& algebra() const { return *L_; }
    bool is_normal(const Word& w) const;
    int word_degree(const Word& w) const;
    Expansion normalize(const Word& w, const Rat& coeff = 1) const;

    // d extended as a degree -1 left Koszul derivation, in normal form.
    Expansion derivative(const Word& w, const Rat& coeff = 1) const;

private:
    const DgLieAlgebra* L_;
};

// Truncated PBW model of U(L): the normal-ordered words of length <= D,
// listed by length then lexicographically. Products are exact; any part of
// a result beyond the word cap is dropped and flagged. Owns a copy of the
// algebra, so the input may be a temporary.
class PbwTruncation {
public:
    PbwTruncation(const DgLieAlgebra& L, int max_word);
    PbwTruncation(const PbwTruncation&) = delete;
    PbwTruncation& operator=(const PbwTruncation&) = delete;

    const DgLieAlgebra& algebra() const { return algebra_; }
    const LieRewriter& rewriter() const { return rewriter_; }
    int max_word() const { return max_word_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const Word& monomial(int idx) const { return basis_.at(idx); }
    std::optional<int> index_of(const Word& w) const;
    int degree_of(int idx) const { return rewriter_.word_degree(basis_.at(idx)); }

    struct Windowed {
        std::map<int, Rat> terms;
        bool overflow = false;
    };
    Windowed window(const Expansion& e) const;
    Windowed product(int i, int j) const;
    std::map<int, Rat> differential(int idx) const; // stays in the window

private:
    DgLieAlgebra algebra_;
    LieRewriter rewriter_; // points at the owned copy
    int max_word_;
    std::vector<Word> basis_;
    std::map<Word, int> index_;
};

// Mixed graded enveloping model of the cone of g: weight p carries the
// monomials u . b(x_1)...b(x_p), the mixed differential unbars one letter
// at a time (left Koszul derivation) and renormalizes. The window keeps
// total word length <= D + P, which neither differential can increase, so
// the square-zero and anticommutation laws hold on the whole window; the
// unbarred part of weight p is capped at D + P - p, in particular at D in
// the top weight. Anything a left action pushes past the cap is dropped
// and recorded.
struct UConeMixed {
    DgLieAlgebra cone;
    int base_dim = 0;
    int max_word = 0; // D, cap on the unbarred part
    int max_sym = 0;  // P, number of barred letters
    MixedModule module;
    std::map<int, std::vector<Word>> basis;           // weight -> words, grouped by degree
    std::map<int, std::map<Word, int>> ordinal;       // weight -> word -> position in basis[weight]
    std::vector<std::pair<int, Word>> truncated_sources;

    int weight_of(const Word& w) const;
    int component_index(int weight, const Word& w) const; // index inside (M_p)_deg
    const Word& component_word(int weight, int degree, int index) const;

    // exact mixed image of a basis word, no window applied
    Expansion epsilon_expansion(const Word& w) const;
    // exact left action of a word on a basis word
    Expansion act(const Word& u, const Word& w) const;
};

UConeMixed u_cone_mixed(const DgLieAlgebra& g, int D, int P);

// Truncated Koszul-type resolution of the trivial module for a discrete
// algebra: degree n holds u (x) g_{i_1} ^ ... ^ g_{i_n} with the window
// cut by total filtration |u| + n <= D, which d never increases, so the
// window is a subcomplex and d^2 = 0 holds throughout.
struct KoszulResolution {
    DgLieAlgebra algebra;
    int filtration = 0; // D
    int max_ext = 0;    // P
    ChainComplex complex;
    std::map<int, std::vector<std::pair<Word, Word>>> basis; // n -> (u, lambda)
    std::map<int, std::map<std::pair<Word, Word>, int>> ordinal;
    RatMatrix augmentation; // V_0 -> Q, kills positive words
};

KoszulResolution koszul_resolution(const DgLieAlgebra& g, int D, int P);

} // namespace mgce
