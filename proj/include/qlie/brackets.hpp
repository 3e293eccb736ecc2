#pragma once

#include <span>

#include "qlie/ncpoly.hpp"

namespace qlie {

enum class Side { left, right, both };

// The derivation d^w on Q<B> attached to w (extended bilinearly over the
// words of w): d^w(b0) = 0 and for i >= 1, with w = b0^{m_1}b_{k_1}...
// b0^{m_d}b_{k_d}b0^{m_{d+1}},
//   d^w(b_i) = sum over l_1+...+l_d+l = k_1+...+k_d, l_s >= 1, l >= 0 of
//     (-1)^l prod binom(k_s-1, l_s-1) *
//       { [b_{i+l}, W] | b_{i+l} W | W b_{i+l} }   (side both/right/left)
// where W = b0^{m_1}b_{l_1}...b0^{m_d}b_{l_d}b0^{m_{d+1}}.
NcPoly der_a(const NcPoly& w, Side side, const NcPoly& target);

// {f,g}_A = d^f(g) - d^g(f) + [f,g]. Both arguments B, or both Dbi
// (Dbi inputs are routed through from_dbi/to_dbi).
NcPoly bracket_a(const NcPoly& f, const NcPoly& g);

// Zero-projected one-sided derivations: pi0 . d^{sec(w)} . sec.
// All words of w and v must avoid a trailing b0.
NcPoly der_a0(const NcPoly& w, Side side, const NcPoly& v);

// v .0 w = pi0(sec(v) sec(w)).
NcPoly mul0(const NcPoly& v, const NcPoly& w);

// {v,w}_{A,0} = pi0({sec(v), sec(w)}_A).
NcPoly bracket_a0(const NcPoly& v, const NcPoly& w);

// Ihara derivation d_w on Q<X>: x0 -> 0, x1 -> [x1, w].
NcPoly der_ihara(const NcPoly& w, const NcPoly& target);

// {f,g} = d_f(g) - d_g(f) + [f,g] on Q<X>.
NcPoly ihara_bracket(const NcPoly& f, const NcPoly& g);

// Concatenation derivation D_{k,m} -> D_{k+1,m+1}; raises weight by 2,
// preserves depth. Dbi alphabet.
NcPoly delta(const NcPoly& p);

// Binomial identities underlying the tau-conjugation of the zero-projected
// left derivation. Pure integer predicates so test suites can sweep
// parameter boxes without building polynomials.
//
// ks = (k_1..k_d) with k_s >= 1, ms = (m_1..m_d) with m_s >= 0,
// lambdas = (lambda_1..lambda_{d-1}) with 1 <= lambda_s <= k_s,
// mus = (mu_1..mu_{d-1}) with 0 <= mu_s <= m_s,
// lambda >= 1, lambda_bar >= 0, sum lambdas + lambda + lambda_bar = sum ks,
// mu, mu_bar >= 0, sum mus + mu + mu_bar = sum ms.

// (-1)^lambda_bar sum_{l_1+..+l_d = sum ks, l_s >= 1} (-1)^{l_d}
//   binom(l_d-1, lambda-1) prod_{s<d} binom(k_s-lambda_s, l_s-lambda_s)
//  == (-1)^lambda binom(k_d-1, lambda_bar)
bool collapse_identity_k(std::span<const int> ks, std::span<const int> lambdas,
                         int lambda, int lambda_bar);

// (-1)^mu_bar sum_{n_1+..+n_d = sum ms, n_s >= 0} (-1)^{n_d} binom(n_d, mu)
//   prod_{s<d} binom(m_s-mu_s, n_s-mu_s) == (-1)^mu binom(m_d, mu_bar)
bool collapse_identity_m(std::span<const int> ms, std::span<const int> mus,
                         int mu, int mu_bar);

// (-1)^{lambda+mu} binom(m_d, mu_bar) binom(k_d-1, lambda_bar) ==
// (-1)^{lambda_bar+mu_bar} sum over (l_s), (n_s) of (-1)^{l_d+n_d}
//   binom(l_d-1, lambda-1) binom(n_d, mu)
//   prod_{s<d} binom(k_s-lambda_s, l_s-lambda_s) binom(m_s-mu_s, n_s-mu_s)
bool derivation_reversal_identity(std::span<const int> ks,
                                  std::span<const int> ms,
                                  std::span<const int> lambdas, int lambda,
                                  int lambda_bar, std::span<const int> mus,
                                  int mu, int mu_bar);

}  // namespace qlie
