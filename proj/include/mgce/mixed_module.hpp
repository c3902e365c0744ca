#pragma once

#include "mgce/chain_complex.hpp"

#include <map>
#include <optional>
#include <string>

namespace mgce {

struct FloorTooHigh : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedViolation {
    int weight = 0;
    int degree = 0;
    std::string message;
};

struct GradedModule {
    std::map<int, ChainComplex> weights;

    void set_weight(int p, ChainComplex c);
    const ChainComplex& weight(int p) const;
    bool operator==(const GradedModule& rhs) const { return weights == rhs.weights; }
};

// Weight-graded chain complexes with a mixed differential
//   eps_p,n : (M_p)_n -> (M_{p-1})_{n+1}
// subject to eps o eps = 0 and eps o d + d o eps = 0. The mixed map is
// stored unshifted as a degree +1 map; together with the (-1)^k shift sign
// on complexes this encodes the chain-map condition M_p -> M_{p-1}[-1].
class MixedModule {
public:
    MixedModule() = default;

    static MixedModule unit(int q = 0); // k sitting in weight q, degree 0

    void set_weight(int p, ChainComplex c);
    const ChainComplex& weight(int p) const;
    const std::map<int, ChainComplex>& weights() const { return weights_; }
    bool has_weight(int p) const { return weights_.count(p) != 0; }
    int min_weight() const;
    int max_weight() const;
    bool empty() const { return weights_.empty(); }

    void set_mixed(int p, int degree, RatMatrix e);
    RatMatrix mixed(int p, int degree) const;

    std::optional<MixedViolation> validate() const;

    bool operator==(const MixedModule& rhs) const;
    bool operator!=(const MixedModule& rhs) const { return !(*this == rhs); }

private:
    std::map<int, ChainComplex> weights_;             // nonzero complexes only
    std::map<int, std::map<int, RatMatrix>> mixed_;   // p -> degree -> nonzero map
};

GradedModule oblv(const MixedModule& m);
MixedModule triv_eps(const GradedModule& g);

enum class AdjointSide { left, right };
MixedModule adjoint_eps(const GradedModule& g, AdjointSide side);

MixedModule tensor_mixed(const MixedModule& a, const MixedModule& b);
MixedModule internal_hom(const MixedModule& a, const MixedModule& b);
MixedModule dual_mixed(const MixedModule& m);
MixedModule weight_shift(const MixedModule& m, int q);

// Offset of the weight-i block inside (a (x) b) at (weight p, degree n):
// blocks are listed by ascending weight in the first factor, and inside a
// block follow the tensor_complex layout.
int mixed_tensor_offset(const MixedModule& a, const MixedModule& b, int p, int n, int i);

struct TensorSlot {
    int left_weight = 0;
    int left_degree = 0;
    int left = 0;
    int right = 0;
};

int encode_tensor_index(const MixedModule& a, const MixedModule& b, int p, int n,
                        const TensorSlot& slot);
TensorSlot decode_tensor_index(const MixedModule& a, const MixedModule& b, int p, int n, int idx);

// Stabilized total complex: sum over weights w <= -weight_floor of
// M_w[2w], total differential d + eps. weight_floor must be <= 0;
// weight_floor 0 is the plain realization, and any
// weight_floor <= -max_weight is the fully stabilized (Tate) one.
ChainComplex tate_total(const MixedModule& m, int weight_floor);
int tate_block_offset(const MixedModule& m, int weight_floor, int total_degree, int w);

} // namespace mgce
