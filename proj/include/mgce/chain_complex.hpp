#pragma once

#include "mgce/rat_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgce {

struct ComplexViolation {
    int degree = 0;
    int row = 0;
    int col = 0;
    std::string message;
};

// Finite chain complex of Q-vector spaces, homological grading: the
// differential at degree n maps C_n -> C_{n-1}.
//
// Conventions pinned here and used everywhere downstream:
//   * shift: (c[k])_n = c_{n-k}, with differential (-1)^k d.
//   * tensor: (a (x) b)_n = sum over i+j=n of a_i (x) b_j, blocks listed by
//     ascending i, row-major inside a block; d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
//   * dual: (c*)_n = (c_{-n})*, differential the plain transpose of the
//     adjacent differential (no sign twist, so dual of dual is the identity
//     on the nose).
class ChainComplex {
public:
    ChainComplex() = default;

    void set_dim(int degree, int dim);
    int dim(int degree) const;
    const std::map<int, int>& dims() const { return dims_; }
    int total_dim() const;
    bool empty() const { return dims_.empty(); }
    int min_degree() const;
    int max_degree() const;

    // d_n : C_n -> C_{n-1}; shape checked against the stored dimensions.
    void set_differential(int degree, RatMatrix d);
    RatMatrix differential(int degree) const;

    std::optional<ComplexViolation> validate() const;

    ChainComplex shift(int k) const;
    ChainComplex dual() const;
    std::map<int, long> homology() const;
    Rat euler_characteristic() const;

    bool operator==(const ChainComplex& rhs) const;
    bool operator!=(const ChainComplex& rhs) const { return !(*this == rhs); }

    static ChainComplex point(int degree, int dim = 1);

private:
    std::map<int, int> dims_;        // nonzero dimensions only
    std::map<int, RatMatrix> diff_;  // nonzero differentials only
};

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b);

// Offset of the (i, n-i) block inside (a (x) b)_n under the layout above.
int tensor_block_offset(const ChainComplex& a, const ChainComplex& b, int n, int i);

// Direct sum with the summands laid out in the given order.
ChainComplex direct_sum(const std::vector<const ChainComplex*>& summands);
int direct_sum_offset(const std::vector<const ChainComplex*>& summands, int n, int which);

} // namespace mgce
