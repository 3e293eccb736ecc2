#include "qlie/linalg.hpp"

#include <algorithm>
#include <utility>

namespace qlie {

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> rref;  // reduced rows, one per pivot
    std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) forward elimination on the denominator-cleared
// matrix, then back-substitution to reduced echelon form. Pivot search by
// first nonzero column; relative row order is preserved.
Echelon eliminate(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational v = m.at(i, j) * Rational(lcm);
            a[i][j] = v.get_num();
        }
    }

    std::vector<std::size_t> pivot_cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r) std::rotate(a.begin() + r, a.begin() + sel, a.begin() + sel + 1);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    // Back-substitute in rationals to reach RREF.
    std::vector<std::vector<Rational>> rr(pivot_cols.size(),
                                          std::vector<Rational>(cols));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) rr[i][j] = Rational(a[i][j]);
    for (std::size_t ii = pivot_cols.size(); ii-- > 0;) {
        const std::size_t pc = pivot_cols[ii];
        Rational inv = 1 / rr[ii][pc];
        for (std::size_t j = pc; j < cols; ++j) rr[ii][j] *= inv;
        for (std::size_t k = 0; k < ii; ++k) {
            Rational f = rr[k][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) rr[k][j] -= f * rr[ii][j];
        }
    }
    return {std::move(rr), std::move(pivot_cols)};
}

}  // namespace

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
    Echelon e = eliminate(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.rref[i][f];
        basis.push_back(std::move(v));
    }
    auto leading = [](const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    };
    std::sort(basis.begin(), basis.end(),
              [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
                  std::size_t lx = leading(x), ly = leading(y);
                  if (lx != ly) return lx < ly;
                  for (std::size_t i = 0; i < x.size(); ++i)
                      if (x[i] != y[i]) return x[i] < y[i];
                  return false;
              });
    return basis;
}

std::size_t rank(const RationalMatrix& m) { return eliminate(m).pivot_cols.size(); }

}  // namespace qlie
