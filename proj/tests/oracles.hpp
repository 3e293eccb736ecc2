#pragma once

// Independent test oracles: the closed-formula counterparts of maps whose
// library implementations are composites, the direct Dbi-alphabet route of
// the A-bracket, and seeded random generators shared by the suites. These
// stay out of the library so the implementation path cannot leak into its
// own checks.

#include <random>

#include "qlie/brackets.hpp"
#include "qlie/hopfmaps.hpp"
#include "qlie/ncpoly.hpp"

namespace qlie::oracles {

// Explicit binomial expansion of sec (one sum per word).
NcPoly sec_closed(const NcPoly& p);

// Closed formula for S0 with the reversed-block word shape.
NcPoly antipode0_closed(const NcPoly& p);

// Closed multinomial formula for tau_dbi.
NcPoly tau_dbi_closed(const NcPoly& p);

// Explicit one-sided zero-projected derivation sums (single words).
NcPoly der_a0_explicit(const Word& w, Side side, const Word& v);

// The A-bracket computed entirely in the Dbi alphabet via the translated
// derivation formula (never touches the B route).
NcPoly der_a_dbi_direct(const NcPoly& w, const NcPoly& target);
NcPoly bracket_a_dbi_direct(const NcPoly& f, const NcPoly& g);

// Expanded form of the zero-projected bracket:
// d0_v(w) - d0_w(v) + v .0 w - w .0 v.
NcPoly bracket_a0_expanded(const NcPoly& v, const NcPoly& w);

// Seeded generators.
struct Rng {
    explicit Rng(std::uint32_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    std::mt19937 eng;
};

// Nonempty B-word of weight <= max_weight with no trailing b0.
Word random_b0_word(Rng& rng, int max_weight);
// Any B-word (possibly with trailing b0) of weight in [1, max_weight].
Word random_b_word(Rng& rng, int max_weight);
Word random_x_word(Rng& rng, int len);
Word random_dbi_word(Rng& rng, int max_weight, int max_len);
NcPoly random_x_poly(Rng& rng, int max_len, int terms);
// Nested commutators of letters: guaranteed nonzero Lie elements.
NcPoly random_lie_dbi(Rng& rng, int max_weight);
NcPoly random_lie_b(Rng& rng, int max_weight);
NcPoly random_lie_x(Rng& rng, int max_weight);

}  // namespace qlie::oracles
