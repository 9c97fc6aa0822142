#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace esymdom {

/// All complex roots of the monic polynomial
///   z^n + c[0] z^{n-1} + ... + c[n-1]
/// by simultaneous Weierstrass (Durand-Kerner) iteration. Degrees here are
/// desk scale (n <= ~16); the iteration is started on a circle of radius
/// 1 + max_k |c_k|^{1/k} with a fixed phase offset, so results are fully
/// deterministic. Returns nullopt if the iteration fails to settle.
[[nodiscard]] inline std::optional<std::vector<std::complex<double>>>
all_roots_monic(std::span<const double> c, int max_iter = 400,
                double step_tol = 1e-13)
{
    using cd = std::complex<double>;
    const std::size_t n = c.size();
    if (n == 0) return std::vector<cd>{};
    if (n == 1) return std::vector<cd>{cd(-c[0], 0.0)};

    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        radius = std::max(radius,
                          std::pow(std::fabs(c[k]), 1.0 / static_cast<double>(k + 1)));
    radius += 1.0;

    std::vector<cd> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double angle =
            2.0 * 3.14159265358979323846 * static_cast<double>(j) /
                static_cast<double>(n) +
            0.4;
        z[j] = radius * cd(std::cos(angle), std::sin(angle));
    }

    const auto eval = [&](cd v) {
        cd p(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) p = p * v + c[k];
        return p;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        double worst_step = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            cd denom(1.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                const cd d = z[j] - z[k];
                if (std::abs(d) < 1e-300) return std::nullopt;
                denom *= d;
            }
            const cd delta = eval(z[j]) / denom;
            z[j] -= delta;
            worst_step = std::max(worst_step,
                                  std::abs(delta) / (1.0 + std::abs(z[j])));
        }
        if (worst_step <= step_tol) return z;
    }
    return std::nullopt;
}

/// Realness-and-sign filter for recovered roots: accepted iff every root r
/// has |Im r| <= imag_tol * max(|r|, 1) and -Re r > 0 (so that x = -Re(r)
/// is a valid positive vector).
struct RootednessCheck {
    std::vector<std::complex<double>> roots;
    double imag_tol = 1e-8;
    bool accepted = false;

    [[nodiscard]] static RootednessCheck
    run(std::vector<std::complex<double>> roots, double imag_tol = 1e-8)
    {
        RootednessCheck rc{std::move(roots), imag_tol, true};
        for (const auto& r : rc.roots) {
            if (std::fabs(r.imag()) > imag_tol * std::max(std::abs(r), 1.0) ||
                !(-r.real() > 0.0)) {
                rc.accepted = false;
                break;
            }
        }
        return rc;
    }
};

} // namespace esymdom
