#include "lip/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lip {

namespace {

[[noreturn]] void domain_fail(const char* op, const char* what, double value) {
    std::ostringstream msg;
    msg << op << ": " << what << " (got " << value << ")";
    throw std::domain_error(msg.str());
}

void check_tone(const char* op, double v, double m) {
    if (!(v >= 0.0 && v < m))
        domain_fail(op, "grey tone outside [0, M)", v);
}

// Largest representable value strictly below M. The algebraic results of
// (+) and (x) are < M for valid inputs; rounding may land exactly on M,
// which would leave the grey-tone range.
double below(double m) {
    return std::nextafter(m, 0.0);
}

} // namespace

GreyScale::GreyScale(double m) : m_bound(m) {
    if (!(m > 0.0))
        throw std::domain_error("GreyScale: bound M must be positive");
}

double lip_add(double a, double b, const GreyScale& scale) {
    const double m = scale.m_bound;
    check_tone("lip_add", a, m);
    check_tone("lip_add", b, m);
    const double r = a + b - (a * b) / m;
    if (r < 0.0) return 0.0;
    if (r >= m) return below(m);
    return r;
}

double lip_sub(double a, double b, const GreyScale& scale) {
    const double m = scale.m_bound;
    check_tone("lip_sub", a, m);
    check_tone("lip_sub", b, m);
    return (a - b) / (1.0 - b / m);
}

double lip_mul(double lambda, double a, const GreyScale& scale) {
    const double m = scale.m_bound;
    if (!(lambda >= 0.0))
        domain_fail("lip_mul", "lambda must be non-negative", lambda);
    check_tone("lip_mul", a, m);
    // M - M*(1 - a/M)^lambda  ==  -M * expm1(lambda * log1p(-a/M))
    const double r = -m * std::expm1(lambda * std::log1p(-a / m));
    if (r < 0.0) return 0.0;
    if (r >= m) return below(m);
    return r;
}

double complement(double a, const GreyScale& scale) {
    const double cap = scale.white_cap();
    if (!(a >= 0.0 && a <= cap))
        domain_fail("complement", "grey tone outside [0, M-1]", a);
    return cap - a;
}

double lmc(double g1, double g2, const GreyScale& scale) {
    const double m = scale.m_bound;
    check_tone("lmc", g1, m);
    check_tone("lmc", g2, m);
    double lo = std::min(g1, g2);
    const double hi = std::max(g1, g2);
    if (lo == 0.0) lo = 1.0; // keep the ratio finite
    if (hi <= lo) return 1.0; // equal tones, or both darker than the guard
    return std::log1p(-hi / m) / std::log1p(-lo / m);
}

} // namespace lip
