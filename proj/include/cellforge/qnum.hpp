#ifndef CELLFORGE_QNUM_HPP
#define CELLFORGE_QNUM_HPP

#include <string>

namespace cellforge {

// Deformation parameter for the quantum integers [m]_q.
//
// Two regimes are supported:
//   - root of unity: q = exp(i*pi/n) with Coxeter label n >= 4, where
//     [m] = sin(m*pi/n)/sin(pi/n) is real;
//   - generic:       q = exp(x) with x > 0, where [m] = sinh(m*x)/sinh(x).
//
// `precision` selects the working mantissa width in bits. 53 evaluates in
// double; anything larger evaluates internally in IEEE binary128 (113-bit
// mantissa) and rounds the result back to double. Products of several
// quantum numbers at n = 24 lose a few ulps in double, which the wide path
// avoids.
struct QContext {
    enum class Kind { RootOfUnity, Generic };

    Kind kind = Kind::RootOfUnity;
    int n = 0;          // Coxeter label, RootOfUnity only
    double x = 0.0;     // exponent, Generic only
    int precision = 53; // mantissa bits: 53, or >= 113 for binary128

    static QContext root_of_unity(int n, int precision = 53);
    static QContext generic(double x, int precision = 53);

    bool is_root() const { return kind == Kind::RootOfUnity; }
};

// [m]_q at the context's precision. [0] = 0 and [1] = 1 for every context.
// m may exceed n; at a root of unity the sine convention gives [n] = 0 and
// [n + j] = -[j].
double qint(const QContext& ctx, int m);

// Product [m1][m2]...[mk] accumulated at the context's precision before
// rounding, for expressions like [3][4]^2[5][7] that appear in the cell
// tables.
double qprod(const QContext& ctx, const int* ms, int count);

inline double qprod(const QContext& ctx, std::initializer_list<int> ms) {
    return qprod(ctx, ms.begin(), static_cast<int>(ms.size()));
}

// Violations of the quantum-number identities, families:
//   (i)   [a] = [n-a]                                   (root of unity)
//   (ii)  [a] - [a-2] = [2a-2]/[a-1]
//   (iii) [a]^2 - [a-1][a+1] = 1,  [a][a+b] - [a-1][a+b+1] = [b+1]
//   (iv)  [a][b] = sum of [c], c = |a-b|+1, |a-b|+3, ..., capped at
//         min(a+b-1, 2n-a-b-1)
// Family (iv) is the SU(2) fusion sum written in dimension labels. The
// ranges scan 1 <= a, b <= max_m.
struct IdentityReport {
    double reflection = 0.0; // (i)
    double ratio = 0.0;      // (ii)
    double quadratic = 0.0;  // (iii)
    double fusion = 0.0;     // (iv)
    double max_violation() const;
    std::string to_string() const;
};

IdentityReport check_identities(const QContext& ctx, int max_m);

} // namespace cellforge

#endif
