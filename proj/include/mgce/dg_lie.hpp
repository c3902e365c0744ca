#pragma once

#include "mgce/mixed_module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgce {

struct AxiomFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotLieMorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RepInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LieGenerator {
    std::string name;
    int degree = 0;
};

// Sparse element of the algebra: generator index -> coefficient.
using LieElement = std::map<int, Rat>;

LieElement lie_scale(const LieElement& x, const Rat& c);
LieElement lie_add(const LieElement& x, const LieElement& y);

struct LieViolation {
    std::string identity; // "antisymmetry", "jacobi", "leibniz", "d_squared", "degree"
    std::vector<std::string> witnesses;
    std::string message;
};

// Differential graded Lie algebra on a finite homogeneous basis, given by
// structure constants. Brackets may be stored one way round; the missing
// mirror [y,x] = -(-1)^{|x||y|} [x,y] is derived on access.
class DgLieAlgebra {
public:
    int add_generator(const std::string& name, int degree);
    int dim() const { return static_cast<int>(gens_.size()); }
    const LieGenerator& generator(int i) const { return gens_.at(i); }
    const std::vector<LieGenerator>& generators() const { return gens_; }
    int degree(int i) const { return gens_.at(i).degree; }
    std::optional<int> index_of(const std::string& name) const;

    void set_differential(int i, LieElement image);
    void set_bracket(int i, int j, LieElement value);

    const LieElement& differential_of(int i) const;
    LieElement bracket_of(int i, int j) const;
    LieElement differential(const LieElement& x) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;

    bool is_discrete() const; // every generator in degree 0

    std::optional<LieViolation> validate() const;

    // Basis of the underlying complex: generators grouped by degree,
    // declaration order inside a degree.
    ChainComplex underlying_complex() const;
    int position_in_degree(int i) const;
    int generator_at(int degree, int position) const;

private:
    std::vector<LieGenerator> gens_;
    std::map<int, LieElement> diff_;
    std::map<std::pair<int, int>, LieElement> bracket_;
};

DgLieAlgebra product_lie(const DgLieAlgebra& g, const DgLieAlgebra& h);
DgLieAlgebra trivial_lie(const ChainComplex& c);

// Representation by generator action; words of U(g) act by composition.
class Representation {
public:
    int add_basis_vector(const std::string& name, int degree);
    int dim() const { return static_cast<int>(basis_.size()); }
    const LieGenerator& basis_vector(int k) const { return basis_.at(k); }
    int degree(int k) const { return basis_.at(k).degree; }
    std::optional<int> index_of(const std::string& name) const;

    void set_differential(int k, LieElement image);
    void set_action(int gen, int k, LieElement value);

    const LieElement& differential_of(int k) const;
    const LieElement& action_of(int gen, int k) const;
    LieElement act(int gen, const LieElement& v) const;
    LieElement differential(const LieElement& v) const;

    ChainComplex underlying_complex() const;
    int position_in_degree(int k) const;

    static Representation trivial();
    static Representation adjoint(const DgLieAlgebra& g);

private:
    std::vector<LieGenerator> basis_;
    std::map<int, LieElement> diff_;
    std::map<std::pair<int, int>, LieElement> action_;
};

std::optional<LieViolation> validate_rep(const DgLieAlgebra& g, const Representation& m);

// Morphism of dg Lie algebras recorded by generator images.
struct LieMorphism {
    const DgLieAlgebra* src = nullptr;
    const DgLieAlgebra* dst = nullptr;
    std::vector<LieElement> images;

    LieElement apply(const LieElement& x) const;
};

std::optional<LieViolation> validate_morphism(const LieMorphism& f);

// Mixed graded cone: a copy of g in weight 0, g[-1] in weight 1, the
// identity as mixed differential. Bracket signs (x in g, bars in g[-1]):
//   [x, by] = (-1)^{|x|} b[x,y],   [by, x] = b[y,x],   [bx, by] = 0,
// the unique choice for which the mixed differential b(x) -> x extends to
// a left Koszul derivation, eps[a,b] = [eps a, b] + (-1)^{|a|} [a, eps b].
struct MixedGradedLie {
    DgLieAlgebra cone;   // generators of g first, then the barred copies
    int base_dim = 0;    // indices >= base_dim are barred
    MixedModule module;  // the underlying mixed graded module
};

DgLieAlgebra cone_lie(const DgLieAlgebra& g);
MixedGradedLie cone_mixed(const DgLieAlgebra& g);

} // namespace mgce
