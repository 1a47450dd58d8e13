#ifndef LIP_ALGEBRA_HPP
#define LIP_ALGEBRA_HPP

namespace lip {

/// Grey-scale bound M of the logarithmic image processing (LIP) model.
///
/// Grey tones live on the inverted scale [0, M): 0 is the "white"
/// extremity (full transmission of the source), values grow toward dark.
/// M defaults to 256, the conventional bound for 8-bit data, but any
/// positive real is accepted.
struct GreyScale {
    double m_bound = 256.0;

    GreyScale() = default;
    explicit GreyScale(double m);

    double white_cap() const { return m_bound - 1.0; }
};

/// LIP addition:  a (+) b = a + b - a*b/M.
///
/// Models stacking two half-transparent layers; 0 is the neutral
/// element. Commutative (bit-exact: the expression is symmetric in a
/// and b), associative up to rounding. Result stays in [0, M).
/// Throws std::domain_error if a or b lies outside [0, M).
double lip_add(double a, double b, const GreyScale& scale = GreyScale());

/// LIP subtraction:  a (-) b = (a - b) / (1 - b/M).
///
/// Inverse of lip_add in its second argument. The result is a plain
/// real: it is negative whenever a < b, and is not clamped. Throws
/// std::domain_error if a or b lies outside [0, M).
double lip_sub(double a, double b, const GreyScale& scale = GreyScale());

/// LIP scalar multiplication:  lambda (x) a = M - M*(1 - a/M)^lambda.
///
/// lambda acts as a thickness factor: the image of a half-transparent
/// object stacked on itself lambda times. Requires lambda >= 0 and
/// a in [0, M); the result stays in [0, M).
///
/// Evaluated through log1p/expm1 so that transmittances close to 0 or 1
/// keep full relative precision; lip_mul(lmc(g1,g2), min(g1,g2))
/// recovers max(g1,g2) to a few ulp rather than drifting.
double lip_mul(double lambda, double a, const GreyScale& scale = GreyScale());

/// Grey-scale complement:  a^c = M - 1 - a.
///
/// Converts between the conventional orientation (0 = black) and the
/// LIP orientation (0 = white). Involutive on [0, M-1]; throws
/// std::domain_error outside that interval.
double complement(double a, const GreyScale& scale = GreyScale());

/// Logarithmic multiplicative contrast of two grey tones:
///
///   lmc(g1, g2) = ln(1 - max(g1,g2)/M) / ln(1 - min(g1,g2)/M)
///
/// the number of times the brighter tone must be stacked on itself
/// (via lip_mul) to reach the darker one:
/// lip_mul(lmc(g1,g2), min(g1,g2)) == max(g1,g2).
///
/// When the brighter tone is exactly 0 it is replaced by 1 before the
/// logarithm, so the contrast stays finite. Result >= 1.
double lmc(double g1, double g2, const GreyScale& scale = GreyScale());

} // namespace lip

#endif
