#include "fxx/num_core.hpp"

#include <cmath>
#include <string>

#include "fxx/error.hpp"

namespace fxx {
namespace {

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be finite");
    }
}

}  // namespace

double std_normal_pdf(double x) {
    require_finite(x, "std_normal_pdf");
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_cdf(double z) {
    require_finite(z, "std_normal_cdf");
    return 0.5 * std::erfc(-z / kSqrt2);
}

double inv_std_normal_cdf_as241(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("inv_std_normal_cdf: p must lie in (0, 1)");
    }
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num =
            ((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0;
        const double den =
            ((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0;
        return q * num / den;
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            ((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                 2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
               3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
             4.63033784615654529590e+0) * r + 1.42343711074968357734e+0;
        const double den =
            ((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                 1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
               6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
             2.05319162663775882187e+0) * r + 1.0;
        x = num / den;
    } else {
        r -= 5.0;
        const double num =
            ((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                 1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
               2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
             5.46378491116411436990e+0) * r + 6.65790464350110377720e+0;
        const double den =
            ((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                 1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
               1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
             5.99832206555887937690e-1) * r + 1.0;
        x = num / den;
    }
    return q < 0.0 ? -x : x;
}

double inv_std_normal_cdf(double p) {
    // Refine on the smaller tail, where 1 - p is exact for p >= 0.5.
    const bool upper = p > 0.5;
    const double tail = upper ? 1.0 - p : p;
    double x = inv_std_normal_cdf_as241(tail);
    const double pdf = std_normal_pdf(x);
    if (pdf > 0.0) {
        x -= (0.5 * std::erfc(-x / kSqrt2) - tail) / pdf;
    }
    return upper ? -x : x;
}

double inv_std_normal_cdf_fast(double p) noexcept {
    constexpr double p_low = 0.02425;
    if (p < p_low || p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(p < p_low ? p : 1.0 - p));
        const double x =
            (((((-7.784894002430293e-03 * q - 3.223964580411365e-01) * q -
                2.400758277161838e+00) * q - 2.549732539343734e+00) * q +
              4.374664141464968e+00) * q + 2.938163982698783e+00) /
            ((((7.784695709041462e-03 * q + 3.224671290700398e-01) * q +
               2.445134137142996e+00) * q + 3.754408661907416e+00) * q + 1.0);
        return p < p_low ? x : -x;
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((-3.969683028665376e+01 * r + 2.209460984245205e+02) * r -
               2.759285104469687e+02) * r + 1.383577518672690e+02) * r -
             3.066479806614716e+01) * r + 2.506628277459239e+00) * q /
           (((((-5.447609879822406e+01 * r + 1.615858368580409e+02) * r -
               1.556989798598866e+02) * r + 6.680131188771972e+01) * r -
             1.328068155288572e+01) * r + 1.0);
}

double erf(double x) {
    require_finite(x, "erf");
    return std::erf(x);
}

double erfc(double x) {
    require_finite(x, "erfc");
    return std::erfc(x);
}

}  // namespace fxx
