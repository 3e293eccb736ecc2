#pragma once

#include <map>

#include "qlie/rational.hpp"
#include "qlie/word.hpp"

namespace qlie {

// Sparse non-commutative polynomial over one tagged alphabet.
// Stored coefficients are nonzero; term order is the canonical word order.
class NcPoly {
  public:
    explicit NcPoly(Alphabet tag) : tag_(tag) {}

    static NcPoly zero(Alphabet tag) { return NcPoly(tag); }
    static NcPoly unit(Alphabet tag);
    static NcPoly monomial(Word w, Rational coeff = 1);

    Alphabet alphabet() const { return tag_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rational>& terms() const { return terms_; }

    Rational coeff(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    NcPoly& operator+=(const NcPoly& q);
    NcPoly& operator-=(const NcPoly& q);
    NcPoly& operator*=(const Rational& c);

    friend NcPoly operator+(NcPoly p, const NcPoly& q) { return p += q; }
    friend NcPoly operator-(NcPoly p, const NcPoly& q) { return p -= q; }
    friend NcPoly operator*(NcPoly p, const Rational& c) { return p *= c; }
    friend NcPoly operator*(const Rational& c, NcPoly p) { return p *= c; }
    friend NcPoly operator-(NcPoly p) { return p *= Rational(-1); }
    // Concatenation product.
    friend NcPoly operator*(const NcPoly& p, const NcPoly& q);

    friend bool operator==(const NcPoly& p, const NcPoly& q) = default;

  private:
    Alphabet tag_;
    std::map<Word, Rational> terms_;
};

NcPoly concat(const NcPoly& p, const NcPoly& q);
NcPoly commutator(const NcPoly& p, const NcPoly& q);

// Recursive shuffle product, defined on every alphabet.
NcPoly shuffle(const NcPoly& p, const NcPoly& q);

// b_i v * b_j w = b_i(v * b_j w) + b_j(b_i v * w) + [ij>0] b_{i+j}(v * w);
// B alphabet only.
NcPoly balanced_quasi_shuffle(const NcPoly& p, const NcPoly& q);

// Projection to the maximal-depth homogeneous component; 0 -> 0.
NcPoly gr_depth(const NcPoly& p);

Rational coeff(const NcPoly& p, const Word& w);

// Splits p into its (weight, depth)-homogeneous components, ordered.
std::map<std::pair<int, int>, NcPoly> bigraded_components(const NcPoly& p);

void require_same_alphabet(const NcPoly& p, const NcPoly& q, const char* op);
void require_alphabet(const NcPoly& p, Alphabet tag, const char* op);

}  // namespace qlie
