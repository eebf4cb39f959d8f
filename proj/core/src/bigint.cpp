#include "dyckpaint/bigint.hpp"

namespace dyckpaint {

Count binomial(unsigned long n, unsigned long k) {
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_decimal(const Count& v) { return v.get_str(); }

} // namespace dyckpaint
