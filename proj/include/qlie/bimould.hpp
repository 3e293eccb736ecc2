#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qlie/hopfmaps.hpp"
#include "qlie/ncpoly.hpp"

namespace qlie {

// Commutative polynomial in X_1, Y_1, ..., X_d, Y_d with exact rational
// coefficients, keyed by exponent vectors (e_1, f_1, ..., e_d, f_d).
class CommPoly {
  public:
    explicit CommPoly(int depth) : depth_(depth) {}

    static CommPoly constant(int depth, Rational c);
    // X_i (kind 'x') or Y_i (kind 'y'), 1-based i.
    static CommPoly variable(int depth, char kind, int i, Rational c = 1);

    int depth() const { return depth_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Rational& c);
    Rational coeff(const std::vector<int>& exponents) const;

    CommPoly& operator+=(const CommPoly& q);
    CommPoly& operator*=(const Rational& c);
    friend CommPoly operator+(CommPoly p, const CommPoly& q) { return p += q; }
    friend CommPoly operator*(const CommPoly& p, const CommPoly& q);
    friend CommPoly operator*(CommPoly p, const Rational& c) { return p *= c; }
    friend bool operator==(const CommPoly& p, const CommPoly& q) = default;

    // Exact composition: substitutes x_args[i-1] for X_i and y_args[i-1]
    // for Y_i; all argument polynomials share the target depth.
    CommPoly substitute(const std::vector<CommPoly>& x_args,
                        const std::vector<CommPoly>& y_args,
                        int target_depth) const;

  private:
    int depth_;
    std::map<std::vector<int>, Rational> terms_;
};

// Depth-indexed sequence of commutative polynomials; absent depth = 0.
class Bimould {
  public:
    Bimould() = default;

    bool is_zero() const { return comps_.empty(); }
    const std::map<int, CommPoly>& components() const { return comps_; }
    const CommPoly component(int d) const;
    void set_component(int d, CommPoly p);
    int max_depth() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }

    Bimould& operator+=(const Bimould& b);
    Bimould& operator-=(const Bimould& b);
    friend Bimould operator+(Bimould a, const Bimould& b) { return a += b; }
    friend Bimould operator-(Bimould a, const Bimould& b) { return a -= b; }
    friend bool operator==(const Bimould& a, const Bimould& b) = default;

  private:
    std::map<int, CommPoly> comps_;
};

// D_{k_1,m_1}...D_{k_d,m_d} -> X_1^{k_1-1} Y_1^{m_1} ... X_d^{k_d-1} Y_d^{m_d};
// the depth-0 component of the image is always 0.
Bimould beta(const NcPoly& p);

// Inverse of beta on depth >= 1 components (constant component ignored).
NcPoly coefficient_poly(const Bimould& a);

// Deconcatenation product: mu(A,B)_d = sum_i A_i(..X_i) B_{d-i}(X_{i+1}..).
Bimould mu(const Bimould& a, const Bimould& b);

// Component-wise substitution
//   (X_1..X_d; Y_1..Y_d) -> (Y_d, Y_{d-1}+Y_d, ..., Y_1+...+Y_d ;
//                            X_d-X_{d-1}, ..., X_2-X_1, X_1); an involution.
Bimould swap(const Bimould& a);

// arit_b(a): the difference of the two double sums with X-shifted b-factors
// and one Y-summed a-slot; bilinear in both arguments.
Bimould arit(const Bimould& b, const Bimould& a);

// ari(A,B) = arit_A(B) - arit_B(A) + mu(A,B) - mu(B,A).
Bimould ari(const Bimould& a, const Bimould& b);

// delta(A)_d = (X_1 Y_1 + ... + X_d Y_d) A_d.
Bimould delta(const Bimould& a);

struct AlternalityReport {
    bool alternal = false;
    // A pair of Dbi-words with nonzero shuffle pairing, when not alternal.
    std::optional<PrimitivityWitness> witness;
};

// The coefficient map kills all proper shuffles of Dbi-words.
AlternalityReport is_alternal(const Bimould& a);

struct SwapInvarianceReport {
    bool swap_invariant = false;
    // Depth and exponent vector of the first differing monomial.
    std::optional<std::pair<int, std::vector<int>>> witness;
};

SwapInvarianceReport is_swap_invariant(const Bimould& a);

}  // namespace qlie
