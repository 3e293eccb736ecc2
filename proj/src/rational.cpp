#include "qlie/rational.hpp"

namespace qlie {

Integer binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer multinom(long n, std::span<const long> parts) {
    Integer r = 1;
    long rest = n;
    for (long p : parts) {
        if (p < 0 || p > rest) return 0;
        r *= binom(rest, p);
        rest -= p;
    }
    if (rest != 0) return 0;
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qlie
