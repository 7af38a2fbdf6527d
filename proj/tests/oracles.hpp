// Brute-force reference implementations used only by the tests. They share
// no code with the library: plain loops, fixed windows, no tail bounds.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
constexpr double pi = 3.14159265358979323846;
const cd I{0.0, 1.0};

/// q^x with q = e^{pi i tau}.
inline cd nome_pow(cd tau, double x) { return std::exp(pi * I * tau * x); }

/// Classical cosine/sine series for theta1..theta4.
inline cd theta(int j, cd u, cd tau, int N = 40) {
    cd s = 0.0;
    switch (j) {
    case 1:
        for (int n = 0; n <= N; ++n)
            s += (n % 2 ? -2.0 : 2.0) * nome_pow(tau, (n + 0.5) * (n + 0.5)) * std::sin((2.0 * n + 1.0) * pi * u);
        return s;
    case 2:
        for (int n = 0; n <= N; ++n)
            s += 2.0 * nome_pow(tau, (n + 0.5) * (n + 0.5)) * std::cos((2.0 * n + 1.0) * pi * u);
        return s;
    case 3:
        s = 1.0;
        for (int n = 1; n <= N; ++n) s += 2.0 * nome_pow(tau, double(n) * n) * std::cos(2.0 * n * pi * u);
        return s;
    default:
        s = 1.0;
        for (int n = 1; n <= N; ++n)
            s += (n % 2 ? -2.0 : 2.0) * nome_pow(tau, double(n) * n) * std::cos(2.0 * n * pi * u);
        return s;
    }
}

/// sum_{|n|<=N} exp(2 pi i [ (n+a)^2 tau/2 + (n+a)(u+b) ]).
inline cd theta_char(double a, double b, cd u, cd tau, int N = 40) {
    cd s = 0.0;
    for (int n = -N; n <= N; ++n) {
        const double m = n + a;
        s += std::exp(2.0 * pi * I * (0.5 * m * m * tau + m * (u + b)));
    }
    return s;
}

/// Genus-2 double sum over |m_i| <= N.
inline cd theta_g2(const double a[2], const double b[2], cd z1, cd z2, cd t11, cd t12, cd t22, int N = 30) {
    cd s = 0.0;
    for (int i = -N; i <= N; ++i)
        for (int k = -N; k <= N; ++k) {
            const double m1 = i + a[0], m2 = k + a[1];
            const cd quad = 0.5 * (m1 * m1 * t11 + 2.0 * m1 * m2 * t12 + m2 * m2 * t22);
            s += std::exp(2.0 * pi * I * (quad + m1 * (z1 + b[0]) + m2 * (z2 + b[1])));
        }
    return s;
}

/// Genus-2 constant on [[tau0,tau1],[tau1,tau0]] written in the nomes
/// q = e^{pi i tau0}, r = e^{pi i tau1}: sum q^{M1^2+M2^2} r^{2 M1 M2} e[M.b].
inline cd theta_g2_nomes(const double a[2], const double b[2], cd q, cd r, int N = 30) {
    const cd lq = std::log(q), lr = std::log(r);
    cd s = 0.0;
    for (int i = -N; i <= N; ++i)
        for (int k = -N; k <= N; ++k) {
            const double m1 = i + a[0], m2 = k + a[1];
            s += std::exp((m1 * m1 + m2 * m2) * lq + 2.0 * m1 * m2 * lr + 2.0 * pi * I * (m1 * b[0] + m2 * b[1]));
        }
    return s;
}

/// eta with nome e^{2 pi i tau}, fixed number of factors.
inline cd eta(cd tau, int factors = 200) {
    cd p = std::exp(2.0 * pi * I * tau / 24.0);
    for (int n = 1; n <= factors; ++n) p *= 1.0 - std::exp(2.0 * pi * I * tau * double(n));
    return p;
}

/// Borwein series by plain double sum, omega as a polar phase.
inline cd borwein(char which, double q, int N = 60) {
    const cd w = std::polar(1.0, 2.0 * pi / 3.0);
    cd s = 0.0;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (which == 'a') s += std::pow(q, double(m * m + m * n + n * n));
            if (which == 'b') s += std::pow(w, double(((m - n) % 3 + 3) % 3)) * std::pow(q, double(m * m + m * n + n * n));
            if (which == 'c') {
                const double x = m + 1.0 / 3.0, y = n + 1.0 / 3.0;
                s += std::pow(q, x * x + x * y + y * y);
            }
        }
    return s;
}

// Dense integer polynomials truncated at a fixed length.
using Poly = std::vector<long long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// prod_{n>=1} (1 + sign q^{step n + offset}) to length len.
inline Poly poly_product(int sign, int step, int offset, std::size_t len) {
    Poly p(len, 0);
    p[0] = 1;
    for (int n = 1;; ++n) {
        const int e = step * n + offset;
        if (e >= static_cast<int>(len)) break;
        Poly f(len, 0);
        f[0] = 1;
        f[e] = sign;
        p = poly_mul(p, f);
    }
    return p;
}

/// Euler: coefficient of q^k in prod (1 - q^n).
inline long long pentagonal(int k) {
    for (int j = 0; j * (3 * j - 1) / 2 <= k; ++j) {
        if (j * (3 * j - 1) / 2 == k || j * (3 * j + 1) / 2 == k) return j % 2 ? -1 : 1;
    }
    return 0;
}

/// Jacobi: number of representations of n as a sum of four squares.
inline long long r4(long long n) {
    if (n == 0) return 1;
    long long s = 0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0 && d % 4 != 0) s += d;
    return 8 * s;
}

/// Fixed-seed sampler for property sweeps.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    cd complex(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }
    /// tau with Re in [-0.5, 0.5] and Im in [im_lo, im_hi].
    cd tau(double im_lo, double im_hi) { return complex(-0.5, 0.5, im_lo, im_hi); }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle
