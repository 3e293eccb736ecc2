#pragma once

#include <optional>

#include "qlie/ncpoly.hpp"

namespace qlie {

struct PrimitivityWitness {
    Word u;
    Word v;
    Rational pairing;  // (p | u sh v), nonzero
};

struct PrimitivityReport {
    bool is_primitive = false;
    std::optional<PrimitivityWitness> witness;
};

// p is primitive for the shuffle coproduct iff (p | u sh v) = 0 for all
// nonempty words u, v; equivalently p is a Lie element. The search runs
// over the complementary subsequence splits of the support of p.
PrimitivityReport is_primitive(const NcPoly& p);

// Antipode of the shuffle Hopf algebra: w -> (-1)^len reversed(w).
NcPoly antipode(const NcPoly& p);

// Kills every word ending in b0, fixes the rest. B alphabet.
NcPoly pi0(const NcPoly& p);

// b0^{m_1} b_{k_1} ... b0^{m_d} b_{k_d} ->
//   b0^{k_d-1} b_{m_d+1} ... b0^{k_1-1} b_{m_1+1}.
// Involution on B-words with no trailing b0; throws otherwise.
NcPoly tau(const NcPoly& p);

// Section of pi0: nested-adjoint expansion
//   ad(b0)^{m_1}( b_{k_1} ad(b0)^{m_2}( ... ad(b0)^{m_d}(b_{k_d}) ) ).
NcPoly sec(const NcPoly& p);

// Concatenation derivation with b0 -> 1, b_i -> 0 (i >= 1).
NcPoly partial0(const NcPoly& p);

// Block-rotating map with sign (-1)^{l_d+n_d-1}; see rho tests for the
// expanded sum. Defined on B-words with no trailing b0.
NcPoly rho(const NcPoly& p);

// S0 = pi0 . antipode . sec, an involution on the no-trailing-b0 subspace.
NcPoly antipode0(const NcPoly& p);

// Expands each letter D_{k,m} as ad(b0)^m(b_k). Dbi -> B.
NcPoly from_dbi(const NcPoly& p);

// Exact inverse of from_dbi on its image; throws DomainError when the
// input is not in Q<Dbi> (nonzero partial0, or reassembly mismatch).
NcPoly to_dbi(const NcPoly& p);

// sec . tau . pi0 transported to the Dbi alphabet; an involution.
NcPoly tau_dbi(const NcPoly& p);

}  // namespace qlie
