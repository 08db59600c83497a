#include "cellforge/qnum.hpp"

#include <cmath>
#include <cstdlib>
#include <quadmath.h>
#include <sstream>
#include <stdexcept>

namespace cellforge {

namespace {

// sin(pi * p / q) with the argument reduced exactly in integer arithmetic,
// so that [m] = [n-m] holds bit-for-bit and large m stays accurate.
// Reduction: sin is odd with period 2, and sin(pi(1-t)) = sin(pi t).
template <typename F>
F sin_pi_ratio(long long p, long long q) {
    long long two_q = 2 * q;
    long long r = p % two_q;
    if (r < 0) r += two_q;
    int sign = 1;
    if (r >= q) { // sin(pi + t) = -sin(t)
        r -= q;
        sign = -1;
    }
    if (2 * r > q) r = q - r; // sin(pi(1 - t)) = sin(pi t)
    F t;
    F result;
    if constexpr (sizeof(F) == sizeof(__float128)) {
        t = static_cast<F>(r) / static_cast<F>(q);
        result = sinq(t * M_PIq);
    } else {
        t = static_cast<F>(r) / static_cast<F>(q);
        result = std::sin(t * static_cast<F>(M_PI));
    }
    return sign < 0 ? -result : result;
}

double qint_root_double(int n, int m) {
    return sin_pi_ratio<double>(m, n) / sin_pi_ratio<double>(1, n);
}

__float128 qint_root_quad(int n, int m) {
    return sin_pi_ratio<__float128>(m, n) / sin_pi_ratio<__float128>(1, n);
}

double qint_generic_double(double x, int m) {
    if (m == 0) return 0.0;
    return std::sinh(m * x) / std::sinh(x);
}

__float128 qint_generic_quad(double x, int m) {
    if (m == 0) return 0.0q;
    __float128 xq = x;
    return sinhq(m * xq) / sinhq(xq);
}

} // namespace

QContext QContext::root_of_unity(int n, int precision) {
    if (n < 4) throw std::invalid_argument("QContext: root-of-unity label n must be >= 4");
    if (precision != 53 && precision < 113)
        throw std::invalid_argument("QContext: precision must be 53 or >= 113");
    QContext ctx;
    ctx.kind = Kind::RootOfUnity;
    ctx.n = n;
    ctx.precision = precision;
    return ctx;
}

QContext QContext::generic(double x, int precision) {
    if (!(x > 0.0)) throw std::invalid_argument("QContext: generic exponent must be positive");
    if (precision != 53 && precision < 113)
        throw std::invalid_argument("QContext: precision must be 53 or >= 113");
    QContext ctx;
    ctx.kind = Kind::Generic;
    ctx.x = x;
    ctx.precision = precision;
    return ctx;
}

double qint(const QContext& ctx, int m) {
    if (m < 0) throw std::invalid_argument("qint: m must be nonnegative");
    if (m == 0) return 0.0;
    if (m == 1) return 1.0;
    if (ctx.kind == QContext::Kind::RootOfUnity) {
        if (ctx.precision <= 53) return qint_root_double(ctx.n, m);
        return static_cast<double>(qint_root_quad(ctx.n, m));
    }
    if (ctx.precision <= 53) return qint_generic_double(ctx.x, m);
    return static_cast<double>(qint_generic_quad(ctx.x, m));
}

double qprod(const QContext& ctx, const int* ms, int count) {
    if (ctx.precision <= 53) {
        double acc = 1.0;
        for (int i = 0; i < count; ++i) acc *= qint(ctx, ms[i]);
        return acc;
    }
    __float128 acc = 1.0q;
    for (int i = 0; i < count; ++i) {
        int m = ms[i];
        if (m < 0) throw std::invalid_argument("qprod: m must be nonnegative");
        acc *= ctx.kind == QContext::Kind::RootOfUnity ? qint_root_quad(ctx.n, m)
                                                       : qint_generic_quad(ctx.x, m);
    }
    return static_cast<double>(acc);
}

double IdentityReport::max_violation() const {
    double v = reflection;
    if (ratio > v) v = ratio;
    if (quadratic > v) v = quadratic;
    if (fusion > v) v = fusion;
    return v;
}

std::string IdentityReport::to_string() const {
    std::ostringstream os;
    os << "reflection " << reflection << ", ratio " << ratio << ", quadratic " << quadratic
       << ", fusion " << fusion;
    return os.str();
}

IdentityReport check_identities(const QContext& ctx, int max_m) {
    if (!ctx.is_root()) throw std::invalid_argument("check_identities: root-of-unity context required");
    if (max_m > ctx.n - 2) throw std::invalid_argument("check_identities: max_m must be <= n-2");
    IdentityReport rep;
    auto q = [&](int m) { return qint(ctx, m); };
    auto track = [](double& slot, double v) {
        v = std::fabs(v);
        if (v > slot) slot = v;
    };

    for (int a = 1; a <= ctx.n - 1; ++a) track(rep.reflection, q(a) - q(ctx.n - a));

    for (int a = 2; a <= max_m; ++a) track(rep.ratio, (q(a) - q(a - 2)) - q(2 * a - 2) / q(a - 1));

    for (int a = 1; a <= max_m; ++a) {
        track(rep.quadratic, q(a) * q(a) - q(a - 1) * q(a + 1) - 1.0);
        for (int b = 0; a + b <= max_m; ++b)
            track(rep.quadratic, q(a) * q(a + b) - q(a - 1) * q(a + b + 1) - q(b + 1));
    }

    for (int a = 1; a <= max_m; ++a)
        for (int b = 1; b <= max_m; ++b) {
            int lo = std::abs(a - b) + 1;
            int hi = std::min(a + b - 1, 2 * ctx.n - a - b - 1);
            double sum = 0.0;
            for (int c = lo; c <= hi; c += 2) sum += q(c);
            track(rep.fusion, q(a) * q(b) - sum);
        }

    return rep;
}

} // namespace cellforge
