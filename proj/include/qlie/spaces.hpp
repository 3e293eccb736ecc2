#pragma once

#include <string>
#include <vector>

#include "qlie/hopfmaps.hpp"
#include "qlie/linalg.hpp"
#include "qlie/ncpoly.hpp"

namespace qlie {

enum class Space { lq, ls };

std::string space_name(Space s);

// Weight/depth ceilings guarding basis and dimension sweeps.
struct ResourceLimits {
    int max_weight = 10;
    int max_depth = 6;
    // Reads LQ_MAX_WEIGHT / LQ_MAX_DEPTH when set.
    static ResourceLimits from_env();
};

// Standard-bracketing expansions of the Lyndon words spanning the
// (weight, depth) component of the free Lie algebra on the alphabet.
// Deterministic: Lyndon words in lexicographic order.
std::vector<NcPoly> lyndon_basis(Alphabet tag, int weight, int depth);

struct MembershipReport {
    bool member = false;
    std::string condition;  // first failed condition: "i".."iv"
    std::string detail;
    explicit operator bool() const { return member; }
};

// Conditions for lq on Q<B>: (i) zero coefficient at b0, (ii) zero
// coefficients at b0^m b_k for k+m even, (iii) primitivity, (iv)
// tau(pi0(p)) = pi0(p). Dbi input is expanded through from_dbi first;
// inhomogeneous input is decomposed into bigraded components.
MembershipReport is_in_lq(const NcPoly& p);

// Conditions for ls on Q<X>: (i) zero coefficients at x0 and x1, (ii) zero
// coefficient at x0^{m-1} x1 for m even, (iii) primitivity, (iv) pi_y(p)
// primitive in Q<Y>.
MembershipReport is_in_ls(const NcPoly& p);

struct GradedBasis {
    Space space;
    int weight = 0;
    int depth = 0;
    std::vector<NcPoly> basis;  // Dbi polynomials for lq, X for ls
    int dim() const { return static_cast<int>(basis.size()); }
};

GradedBasis basis_lq(int weight, int depth,
                     const ResourceLimits& limits = ResourceLimits::from_env());
GradedBasis basis_ls(int weight, int depth,
                     const ResourceLimits& limits = ResourceLimits::from_env());

struct DimTable {
    Space space;
    int max_weight = 0;
    int max_depth = 0;
    struct Entry {
        int weight;
        int depth;
        int dim;
    };
    std::vector<Entry> entries;  // complete grid, weight-major order
    int dim(int weight, int depth) const;
};

DimTable dim_table(Space space, int max_weight, int max_depth,
                   const ResourceLimits& limits = ResourceLimits::from_env());

}  // namespace qlie
