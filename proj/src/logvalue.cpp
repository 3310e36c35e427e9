#include <gent/logvalue.hpp>

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <gent/errors.hpp>

namespace gent {

Integer integer_pow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

std::string decimal_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

LogValue::LogValue(Integer c, int b) : count(std::move(c)), base(b) {
    if (base < 2) throw std::invalid_argument("LogValue base must be >= 2");
    if (count < 0) throw std::invalid_argument("LogValue count must be >= 0");
}

double LogValue::to_double() const {
    if (count == 0) return -std::numeric_limits<double>::infinity();
    // Exact enough for display; comparisons never go through here.
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, count.get_mpz_t());
    return (std::log2(d) + static_cast<double>(exp)) / std::log2(static_cast<double>(base));
}

bool LogValue::is_integer() const {
    if (count == 0) return false;
    Integer m = count;
    while (m > 1) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), base)) return false;
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), base);
    }
    return m == 1;
}

long LogValue::integer_value() const {
    long j = 0;
    Integer m = count;
    while (m > 1) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), base);
        ++j;
    }
    return j;
}

int compare(const LogValue& a, const Rational& r) {
    if (a.count == 0) return -1;  // log(0) = -inf is below every rational
    // log_s(m) <=> p/q  <=>  m^q <=> s^p   (q >= 1 by canonical form)
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    if (!q.fits_ulong_p())
        throw std::overflow_error("rational denominator too large for exact log comparison");
    Integer lhs = integer_pow(a.count, q.get_ui());
    if (p >= 0) {
        if (!p.fits_ulong_p()) throw std::overflow_error("rational numerator too large");
        Integer rhs = integer_pow(Integer(a.base), p.get_ui());
        return cmp(lhs, rhs);
    }
    Integer minus_p = -p;
    if (!minus_p.fits_ulong_p()) throw std::overflow_error("rational numerator too large");
    lhs *= integer_pow(Integer(a.base), minus_p.get_ui());
    return cmp(lhs, Integer(1));
}

namespace {

// |log_{sa}(ma) - log_{sb}(mb)| evaluated at 256-bit precision; refuses to
// decide differences smaller than the separation guard.
int mpfr_log_compare(const Integer& ma, int sa, const Integer& mb, int sb) {
    constexpr mpfr_prec_t kPrec = 256;
    mpfr_t x, y, lsa, lsb;
    mpfr_inits2(kPrec, x, y, lsa, lsb, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(x, ma.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_set_ui(lsa, static_cast<unsigned long>(sa), MPFR_RNDN);
    mpfr_log(lsa, lsa, MPFR_RNDN);
    mpfr_div(x, x, lsa, MPFR_RNDN);
    mpfr_set_z(y, mb.get_mpz_t(), MPFR_RNDN);
    mpfr_log(y, y, MPFR_RNDN);
    mpfr_set_ui(lsb, static_cast<unsigned long>(sb), MPFR_RNDN);
    mpfr_log(lsb, lsb, MPFR_RNDN);
    mpfr_div(y, y, lsb, MPFR_RNDN);
    mpfr_sub(x, x, y, MPFR_RNDN);
    double diff = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clears(x, y, lsa, lsb, static_cast<mpfr_ptr>(nullptr));
    if (std::fabs(diff) < 1e-12)
        throw PrecisionError("cross-base log values indistinguishable at 256-bit precision");
    return diff < 0 ? -1 : 1;
}

}  // namespace

int compare(const LogValue& a, const LogValue& b) {
    if (a.count == 0 || b.count == 0) {
        if (a.count == b.count) return 0;
        return a.count == 0 ? -1 : 1;
    }
    if (a.base == b.base) return cmp(a.count, b.count);
    bool ia = a.is_integer(), ib = b.is_integer();
    if (ia && ib) {
        long va = a.integer_value(), vb = b.integer_value();
        return va < vb ? -1 : va > vb ? 1 : 0;
    }
    if (ia) return -compare(b, Rational(a.integer_value()));
    if (ib) return compare(a, Rational(b.integer_value()));
    return mpfr_log_compare(a.count, a.base, b.count, b.base);
}

int compare_log_sum(const LogValue& a, const LogValue& b, const Rational& t) {
    if (a.base != b.base)
        throw std::invalid_argument("compare_log_sum requires a common base");
    if (a.count == 0 || b.count == 0) return -1;
    return compare(LogValue(a.count * b.count, a.base), t);
}

std::string to_string(const LogValue& v) {
    return "log_" + std::to_string(v.base) + "(" + v.count.get_str() + ")";
}

}  // namespace gent
