// Modified Bessel functions of integer order, plain and log-scaled.
//
// Every kernel in this project is built from ratios like
//
//     K_j(|k| rho) / K_j(|k| a),     I_j(|k| a) / K_j(|k| a),
//
// whose individual factors overflow or underflow double precision long
// before the combination does (K_j(x) ~ exp(-x), I_j(x) ~ exp(+x), and for
// small arguments K_j ~ (j-1)! (2/x)^j).  The functions here therefore come
// in two flavours: plain values for convenience, and natural-log values that
// callers combine additively and exponentiate once per term.

#pragma once

#include <cmath>
#include <limits>

namespace corrcyl::bessel {

/// Sign/magnitude representation of a real number in log space.
/// Covers |log magnitude| far beyond the ~709 cutoff of plain doubles.
struct LogScaled {
    double log_mag = -std::numeric_limits<double>::infinity();
    int sign = 0;  // -1, 0, +1

    static LogScaled from_value(double v);

    /// Plain value; overflows to +-inf and underflows to (signed) 0.
    double value() const;

    friend LogScaled operator*(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0 || b.sign == 0) return LogScaled{};
        return LogScaled{a.log_mag + b.log_mag, a.sign * b.sign};
    }
    friend LogScaled operator/(const LogScaled& a, const LogScaled& b) {
        return LogScaled{a.log_mag - b.log_mag, a.sign * b.sign};
    }
};

/// Largest |order| accepted before a ConfigError is thrown.  The cap guards
/// runaway order sums; energy-level code raises it to match its own order
/// budget.  Raising is monotonic and thread-safe.
int order_cap();
void raise_order_cap(int cap);

/// I_j(x).  Plain value; +inf once x exceeds the overflow range (use
/// bessel_i_log there).  Integer-order reflection I_{-j} = I_j applies.
double bessel_i(int order, double x);

/// K_j(x).  Plain value; +inf in the small-x / large-order overflow corner.
double bessel_k(int order, double x);

LogScaled bessel_i_log(int order, double x);
LogScaled bessel_k_log(int order, double x);

/// ln I_j(x) and ln K_j(x); always finite for x > 0.
double log_bessel_i(int order, double x);
double log_bessel_k(int order, double x);

/// d/drho K_j(|k| rho) = -(|k|/2) [K_{j-1}(|k| rho) + K_{j+1}(|k| rho)].
double bessel_k_drho(int order, double k, double rho);

/// ln |d/drho K_j(q rho)| for q > 0 (the derivative itself is negative).
double log_abs_bessel_k_drho(int order, double q, double rho);

/// K_j(x_num) / K_j(x_den), evaluated in log space.
double k_ratio(int order, double x_num, double x_den);

}  // namespace corrcyl::bessel
