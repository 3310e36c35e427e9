#pragma once

#include <gent/rational.hpp>

namespace gent {

// Exact value log_base(count), the common shape of guessing numbers and
// index-code lengths. count = 0 is an explicit "empty" marker that never
// comes out of a search operation.
struct LogValue {
    Integer count{1};
    int base{2};

    LogValue() = default;
    LogValue(Integer c, int b);
    LogValue(unsigned long c, int b) : LogValue(Integer(c), b) {}

    double to_double() const;

    // count == base^j for some j >= 0
    bool is_integer() const;
    // the j above; only meaningful when is_integer()
    long integer_value() const;
};

// Three-way comparisons. Same-base and log-vs-rational comparisons are exact
// (big-integer exponentiation). Cross-base comparisons evaluate at 256-bit
// precision and throw PrecisionError when the difference is below 1e-12.
int compare(const LogValue& a, const LogValue& b);
int compare(const LogValue& a, const Rational& r);
inline int compare(const Rational& r, const LogValue& a) { return -compare(a, r); }

inline bool operator==(const LogValue& a, const LogValue& b) { return compare(a, b) == 0; }
inline bool operator!=(const LogValue& a, const LogValue& b) { return compare(a, b) != 0; }
inline bool operator<(const LogValue& a, const LogValue& b) { return compare(a, b) < 0; }
inline bool operator<=(const LogValue& a, const LogValue& b) { return compare(a, b) <= 0; }
inline bool operator>(const LogValue& a, const LogValue& b) { return compare(a, b) > 0; }
inline bool operator>=(const LogValue& a, const LogValue& b) { return compare(a, b) >= 0; }

// log_base(a.count) + log_base(b.count) <=> t, exact; requires a.base == b.base.
int compare_log_sum(const LogValue& a, const LogValue& b, const Rational& t);

std::string to_string(const LogValue& v);

}  // namespace gent
