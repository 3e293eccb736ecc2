#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qlie/error.hpp"

namespace qlie {

enum class Alphabet { B, X, Y, Dbi };

std::string alphabet_name(Alphabet a);

// One letter of a tagged alphabet.
//   B:   b_s, s >= 0        weight s + [s=0], depth [s!=0]
//   X:   x_i, i in {0,1}    weight 1, depth [i=1]
//   Y:   y_k, k >= 1        weight k, depth 1
//   Dbi: D_{k,m}, k>=1,m>=0 weight k+m, depth 1
class Letter {
  public:
    static Letter b(int s);
    static Letter x(int i);
    static Letter y(int k);
    static Letter dbi(int k, int m);

    Alphabet alphabet() const { return tag_; }
    // b_s -> s, x_i -> i, y_k -> k, D_{k,m} -> k
    int index() const { return a_; }
    // D_{k,m} -> m (the ad(b0)-power); 0 for the other alphabets
    int ad_power() const { return b_; }

    int weight() const;
    int depth() const;

    friend auto operator<=>(const Letter&, const Letter&) = default;

  private:
    Letter(Alphabet tag, int a, int b) : tag_(tag), a_(a), b_(b) {}
    Alphabet tag_;
    int a_;
    int b_;
};

// Finite letter sequence over one alphabet with cached bigrading.
class Word {
  public:
    explicit Word(Alphabet tag) : tag_(tag) {}
    Word(Alphabet tag, std::vector<Letter> letters);

    Alphabet alphabet() const { return tag_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    int weight() const { return weight_; }
    int depth() const { return depth_; }

    Word prefix(std::size_t n) const;
    Word suffix(std::size_t from) const;
    // Letters at positions selected by the bit mask (bit i = position i).
    Word subword(std::uint64_t mask) const;

    friend Word concat(const Word& u, const Word& v);

    // Plain left-to-right lexicographic comparison (used for Lyndon words).
    static bool lex_less(const Word& u, const Word& v);

    // Canonical term order: degree-lexicographic on (weight, depth, letters).
    friend std::strong_ordering operator<=>(const Word& u, const Word& v);
    friend bool operator==(const Word& u, const Word& v) = default;

  private:
    Alphabet tag_;
    std::vector<Letter> letters_;
    int weight_ = 0;
    int depth_ = 0;
};

// Run-length view of a B-word: b0^{m_1} b_{k_1} ... b0^{m_d} b_{k_d} b0^{tail}.
struct BBlocks {
    std::vector<std::pair<int, int>> mk;  // (m_i, k_i), k_i >= 1
    int tail = 0;                         // trailing b0 exponent
};

BBlocks b_blocks(const Word& w);

// Throws DomainError unless w is a B-word with no trailing b0.
BBlocks b0_blocks_checked(const Word& w);

Word word_from_blocks(const BBlocks& blocks);

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

}  // namespace qlie
