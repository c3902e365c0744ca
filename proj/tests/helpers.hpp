#pragma once

#include "mgce/chevalley_eilenberg.hpp"
#include "mgce/manifest.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace helpers {

using namespace mgce;

inline DgLieAlgebra abelian(int n)
{
    DgLieAlgebra g;
    for (int i = 0; i < n; ++i)
        g.add_generator("a" + std::to_string(i + 1), 0);
    return g;
}

inline DgLieAlgebra aff1()
{
    DgLieAlgebra g;
    g.add_generator("e1", 0);
    g.add_generator("e2", 0);
    g.set_bracket(0, 1, {{0, 1}});
    return g;
}

inline DgLieAlgebra sl2()
{
    DgLieAlgebra g;
    g.add_generator("h", 0);
    g.add_generator("e", 0);
    g.add_generator("f", 0);
    g.set_bracket(0, 1, {{1, 2}});
    g.set_bracket(0, 2, {{2, -2}});
    g.set_bracket(1, 2, {{0, 1}});
    return g;
}

inline DgLieAlgebra heis3()
{
    DgLieAlgebra g;
    g.add_generator("x", 0);
    g.add_generator("y", 0);
    g.add_generator("z", 0);
    g.set_bracket(0, 1, {{2, 1}});
    return g;
}

inline DgLieAlgebra trivial_shifted()
{
    DgLieAlgebra g;
    g.add_generator("t", -1);
    return g;
}

// two-step nilpotent: brackets of the first gens land in the central tail
inline DgLieAlgebra random_nilpotent(std::mt19937& rng, int max_dim = 5)
{
    std::uniform_int_distribution<int> dim_dist(2, max_dim);
    const int n = dim_dist(rng);
    std::uniform_int_distribution<int> central_dist(1, n - 1);
    const int central = central_dist(rng);
    const int head = n - central;
    DgLieAlgebra g;
    for (int i = 0; i < n; ++i)
        g.add_generator("x" + std::to_string(i + 1), 0);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int i = 0; i < head; ++i)
        for (int j = i + 1; j < head; ++j) {
            LieElement value;
            for (int k = head; k < n; ++k) {
                int c = coeff(rng);
                if (c != 0)
                    value[k] = c;
            }
            g.set_bracket(i, j, std::move(value));
        }
    return g;
}

inline RatMatrix random_invertible(std::mt19937& rng, int n)
{
    RatMatrix m = RatMatrix::identity(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int step = 0; step < 3 * n; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        RatMatrix e = RatMatrix::identity(n);
        e.set(i, j, coeff(rng));
        m = e * m;
    }
    return m;
}

// dense Gauss-Jordan inverse, for small test matrices
inline RatMatrix inverse(const RatMatrix& m)
{
    const int n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw std::runtime_error("singular matrix");
        std::swap(a[col], a[pivot]);
        const Rat inv = 1 / a[col][col];
        for (int j = 0; j < 2 * n; ++j)
            a[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rat f = a[r][col];
            for (int j = 0; j < 2 * n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.set(i, j, a[i][n + j]);
    return out;
}

// sums of points and cones of identities, conjugated by a random basis
// change in every degree: a validated complex with nontrivial homology
inline ChainComplex random_complex(std::mt19937& rng, int min_deg = -2, int max_deg = 2)
{
    std::uniform_int_distribution<int> small(0, 2);
    ChainComplex c;
    // degree-n layout: [free slots | targets of cones from n+1 | cone sources]
    std::map<int, int> dims, free_slots, cone_slots;
    for (int n = min_deg; n <= max_deg; ++n) {
        free_slots[n] = small(rng);
        cone_slots[n] = (n > min_deg) ? small(rng) : 0;
    }
    for (int n = min_deg; n <= max_deg; ++n)
        dims[n] = free_slots[n] + cone_slots[n] + ((n + 1 <= max_deg) ? cone_slots[n + 1] : 0);
    dims[min_deg - 1] = (min_deg <= max_deg) ? cone_slots[min_deg] : 0;
    for (const auto& [n, d] : dims)
        if (d > 0)
            c.set_dim(n, d);
    for (int n = min_deg; n <= max_deg; ++n) {
        if (cone_slots[n] == 0)
            continue;
        RatMatrix dn(c.dim(n - 1), c.dim(n));
        const int src_off = free_slots[n] + ((n + 1 <= max_deg) ? cone_slots[n + 1] : 0);
        const int dst_off = free_slots.count(n - 1) ? free_slots[n - 1] : 0;
        for (int k = 0; k < cone_slots[n]; ++k)
            dn.set(dst_off + k, src_off + k, 1);
        c.set_differential(n, dn);
    }
    // conjugate by invertibles
    std::map<int, RatMatrix> p, pinv;
    for (const auto& [n, d] : c.dims()) {
        p[n] = random_invertible(rng, d);
        pinv[n] = inverse(p[n]);
    }
    ChainComplex out;
    for (const auto& [n, d] : c.dims())
        out.set_dim(n, d);
    for (const auto& [n, d] : c.dims()) {
        if (out.dim(n - 1) == 0)
            continue;
        out.set_differential(n, p.at(n - 1) * c.differential(n) * pinv.at(n));
    }
    return out;
}

inline GradedModule random_graded(std::mt19937& rng, int min_w = -1, int max_w = 2)
{
    GradedModule g;
    for (int w = min_w; w <= max_w; ++w)
        g.set_weight(w, random_complex(rng, -1, 1));
    return g;
}

inline Manifest load_fixture(const std::string& name)
{
    const std::string path = std::string(MGCE_FIXTURE_DIR) + "/" + name + ".json";
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing fixture " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_manifest(os.str());
}

} // namespace helpers
