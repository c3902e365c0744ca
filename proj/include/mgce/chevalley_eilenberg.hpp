#pragma once

#include "mgce/pbw.hpp"

#include <optional>
#include <string>

namespace mgce {

// Homological Chevalley-Eilenberg object of a dg Lie algebra: weight p
// carries Sym^p(g[-1]) (realized as the barred monomials of the cone),
// the internal differential is induced by d_g, and the mixed differential
// is the bracket part: unbar one letter, renormalize in U(cone), keep the
// purely barred terms. The comultiplication is the unshuffle coproduct of
// the symmetric coalgebra with Koszul signs.
struct CeHomological {
    DgLieAlgebra algebra;
    DgLieAlgebra cone;
    int base_dim = 0;
    int maxweight = 0;
    MixedModule module;                            // weights 0..maxweight
    std::map<int, std::vector<Word>> monomials;    // weight -> barred words, grouped by degree
    std::map<std::pair<int, int>, RatMatrix> comult; // (p, n) -> (M (x) M)_{p,n} <- (M_p)_n

    int component_index(int weight, const Word& w) const;
    const Word& component_word(int weight, int degree, int index) const;
    std::string monomial_name(const Word& w) const;
};

CeHomological ce_homological(const DgLieAlgebra& g, int maxweight);

// Cohomological side: the weightwise dual of the homological object, with
// the product the transpose of the comultiplication.
struct CeCohomological {
    DgLieAlgebra algebra;
    int maxweight = 0;
    MixedModule module;                              // weights -maxweight..0
    std::map<std::pair<int, int>, RatMatrix> product; // (p, n): N_{p,n} <- (N (x) N)_{p,n}
};

CeCohomological ce_cohomological(const CeHomological& hom);
CeCohomological ce_cohomological(const DgLieAlgebra& g, int maxweight);

// Cohomological object with coefficients: weight -p is Hom(Sym^p(g[-1]), M)
// with blocks by ascending Sym-degree, module index major inside a block.
// The mixed differential combines the bracket part (precomposition with
// the homological mixed differential) and the action part coming from the
// unbarred letter of the cone rewriting.
struct CeCoefficients {
    DgLieAlgebra algebra;
    Representation rep;
    int maxweight = 0;
    MixedModule module;
};

CeCoefficients ce_coefficients(const DgLieAlgebra& g, const Representation& m, int maxweight);

// Sym^p(f[-1]) in every weight; throws NotLieMorphism if f is not a map of
// dg Lie algebras, AxiomFailure if the induced map fails to commute with
// d, eps or the comultiplication (which would be an internal sign bug).
struct CeMap {
    CeHomological source;
    CeHomological target;
    std::map<std::pair<int, int>, RatMatrix> matrices; // (p, n)
};

CeMap ce_map(const LieMorphism& f, int maxweight);

// CE of a product against the tensor of the CEs, through the canonical
// monomial bijection; nullopt means everything matched (dims, d, eps and
// the comultiplication).
std::optional<std::string> monoidality_check(const DgLieAlgebra& g, const DgLieAlgebra& h,
                                             int maxweight);

// Cohomological = dual of homological, involutivity, the product as the
// transpose of the coproduct, and the (co)derivation laws, all cell-exact.
std::optional<std::string> duality_check(const DgLieAlgebra& g, int maxweight);

enum class CeSide { homological, cohomological };

struct BettiResult {
    std::map<int, long> by_degree;
    std::vector<std::string> warnings;
};

// Homology of the stabilized total complex. On the cohomological side the
// reported degree is the cohomological one (the negative of the total
// degree). Coefficients are supported on the cohomological side only.
BettiResult betti(const DgLieAlgebra& g, CeSide side, const Representation* coefficients,
                  int maxweight, int degree_lo, int degree_hi);

} // namespace mgce
