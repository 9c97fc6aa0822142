#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace esymdom {

/// Improper integral over (0, inf) with declared endpoint behavior:
/// the integrand must look like c*t^p as t -> 0+ (p > -1) and decay like
/// t^{-q}, possibly times log t, as t -> inf (q > 1).
struct QuadratureProblem {
    std::function<double(double)> integrand;
    double left_exponent = 0.0;  // p
    double right_exponent = 2.0; // q
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 48;
    long max_evaluations = 2'000'000; // hard stop; excess -> NonConvergence
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct NonConvergence : std::runtime_error {
    NonConvergence(double best, double err, long evals)
        : std::runtime_error("quadrature did not meet tolerance: best=" +
                             std::to_string(best) + " err=" + std::to_string(err)),
          best_value(best), achieved_error(err), evaluations(evals)
    {
    }
    double best_value;
    double achieved_error;
    long evaluations;
};

namespace detail {

// 15-point Gauss-Legendre on [-1, 1]. All nodes interior, so integrands
// singular at a panel edge are never evaluated there.
inline constexpr double kGl15Nodes[8] = {
    0.0,
    0.20119409399743452,
    0.39415134707756337,
    0.57097217260853885,
    0.72441773136017005,
    0.84820658341042722,
    0.93727339240070590,
    0.98799251802048543,
};
inline constexpr double kGl15Weights[8] = {
    0.20257824192556127,
    0.19843148532711158,
    0.18616100001556221,
    0.16626920581699393,
    0.13957067792615431,
    0.10715922046717194,
    0.07036604748810812,
    0.03075324199611727,
};

// value * t^exponent without intermediate overflow: the power factor alone
// can exceed the double range deep in a graded subdivision even when the
// product is ordinary.
inline double scaled_by_power(double value, double t, double exponent)
{
    if (value == 0.0) return 0.0;
    return std::copysign(
        std::exp(std::log(std::fabs(value)) + exponent * std::log(t)), value);
}

inline double gl15(const std::function<double(double)>& f, double a, double b,
                   long& evals)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = kGl15Weights[0] * f(c);
    for (int i = 1; i < 8; ++i) {
        const double d = h * kGl15Nodes[i];
        sum += kGl15Weights[i] * (f(c - d) + f(c + d));
    }
    evals += 15;
    return h * sum;
}

struct PanelAccumulator {
    const std::function<double(double)>* f = nullptr;
    double rel_tol = 1e-8;
    int max_depth = 48;
    long max_evaluations = 2'000'000;
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

inline void adapt_panel(PanelAccumulator& acc, double a, double b,
                        double abs_tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double coarse = gl15(*acc.f, a, b, acc.evaluations);
    const double refined = gl15(*acc.f, a, m, acc.evaluations) +
                           gl15(*acc.f, m, b, acc.evaluations);
    const double err = std::fabs(coarse - refined);
    // a non-finite panel cannot improve under bisection with this rule, and
    // the evaluation budget bounds the recursion tree; either way the final
    // tolerance check turns the inflated error into NonConvergence
    if (!std::isfinite(err) || acc.evaluations > acc.max_evaluations) {
        acc.value += refined;
        acc.error += std::isfinite(err) ? err : std::fabs(coarse) + 1.0;
        return;
    }
    if (err <= 0.5 * std::max(abs_tol, acc.rel_tol * std::fabs(refined)) ||
        depth >= acc.max_depth) {
        acc.value += refined;
        acc.error += err;
        return;
    }
    adapt_panel(acc, a, m, 0.5 * abs_tol, depth + 1);
    adapt_panel(acc, m, b, 0.5 * abs_tol, depth + 1);
}

// Integrate over (0, b] when the integrand behaves like c*t^r near 0.
// For r < 0 a geometric subdivision toward 0 is laid out first, so the
// adaptive pass only ever sees panels on which the integrand is smooth;
// the remaining head below the last breakpoint is completed analytically
// from the declared power law and charged to the error estimate in full.
inline void integrate_left_graded(PanelAccumulator& acc, double b, double r,
                                  double abs_tol)
{
    if (r >= 0.0) {
        adapt_panel(acc, 0.0, b, abs_tol, 0);
        return;
    }
    constexpr double sigma = 0.25;
    constexpr int max_panels = 800;
    const double head_budget = 0.1 * abs_tol;

    std::vector<double> cuts{b};
    double lo = b;
    double head = 0.0;
    for (int i = 0; i < max_panels; ++i) {
        lo *= sigma;
        cuts.push_back(lo);
        const double fval = (*acc.f)(lo);
        ++acc.evaluations;
        head = std::fabs(fval) * lo / (r + 1.0);
        if (head <= head_budget) break;
        if (lo < 1e-300 || !std::isfinite(head)) break; // give up grading
    }
    const double panel_tol =
        0.9 * abs_tol / static_cast<double>(cuts.size() - 1);
    for (std::size_t i = cuts.size() - 1; i >= 1; --i)
        adapt_panel(acc, cuts[i], cuts[i - 1], panel_tol, 0);

    // asymptotic completion of the head interval (0, lo]
    const double fval = (*acc.f)(lo);
    ++acc.evaluations;
    const double head_value = fval * lo / (r + 1.0);
    if (std::isfinite(head_value)) {
        acc.value += head_value;
        acc.error += std::fabs(head_value);
    } else {
        acc.error += std::fabs(acc.value) + 1.0; // forces NonConvergence
    }
}

} // namespace detail

/// Integrate the problem over (0, inf): the interval is split at t = 1 and
/// the tail mapped back to (0, 1] via t -> 1/u, after which both halves are
/// handled by adaptive bisection with the interior 15-point rule. The error
/// estimate per panel is the coarse-vs-refined difference. Throws
/// NonConvergence (carrying the best estimate) if the summed estimate does
/// not meet max(abs_tol, rel_tol*|value|).
[[nodiscard]] inline QuadratureResult
integrate_halfline(const QuadratureProblem& prob)
{
    if (!(prob.left_exponent > -1.0))
        throw std::invalid_argument("integrate_halfline: need left exponent > -1");
    if (!(prob.right_exponent > 1.0))
        throw std::invalid_argument("integrate_halfline: need right exponent > 1");
    if (!(prob.abs_tol > 0.0) || !(prob.rel_tol > 0.0))
        throw std::invalid_argument("integrate_halfline: tolerances must be > 0");
    if (!prob.integrand)
        throw std::invalid_argument("integrate_halfline: missing integrand");

    detail::PanelAccumulator acc;
    acc.rel_tol = prob.rel_tol;
    acc.max_depth = prob.max_depth;
    acc.max_evaluations = prob.max_evaluations;

    const std::function<double(double)>& f = prob.integrand;
    acc.f = &f;
    detail::integrate_left_graded(acc, 1.0, prob.left_exponent,
                                  0.5 * prob.abs_tol);

    const std::function<double(double)> tail = [&f](double u) {
        return f(1.0 / u) / (u * u);
    };
    acc.f = &tail;
    detail::integrate_left_graded(acc, 1.0, prob.right_exponent - 2.0,
                                  0.5 * prob.abs_tol);

    QuadratureResult res{acc.value, acc.error, acc.evaluations};
    const bool ok =
        std::isfinite(res.value) &&
        res.error_estimate <=
            std::max(prob.abs_tol, prob.rel_tol * std::fabs(res.value));
    if (!ok) throw NonConvergence(res.value, res.error_estimate, res.evaluations);
    return res;
}

/// Endpoint profile of the two power-weighted kernels used by the s^alpha
/// integral identities: LogKernel multiplies a factor vanishing linearly at
/// 0 (like log(1+ts)) by t^{-alpha-1} with 0 < alpha < 1; CompensatedKernel
/// multiplies a factor vanishing quadratically (like log(1+ts) - ts) by the
/// same weight with 1 < alpha < 2.
enum class PowerWeightKind { LogKernel, CompensatedKernel };

/// Integrate f(t) * t^{-alpha-1} over (0, inf), with the near-0 subdivision
/// derived from the known power behavior of the weighted integrand.
[[nodiscard]] inline QuadratureResult
integrate_with_power_weight(const std::function<double(double)>& f,
                            double alpha, PowerWeightKind kind)
{
    QuadratureProblem prob;
    if (kind == PowerWeightKind::LogKernel) {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw std::invalid_argument(
                "integrate_with_power_weight: LogKernel needs alpha in (0,1)");
        prob.left_exponent = -alpha;
        prob.right_exponent = 1.0 + alpha;
    } else {
        if (!(alpha > 1.0 && alpha < 2.0))
            throw std::invalid_argument(
                "integrate_with_power_weight: CompensatedKernel needs alpha in (1,2)");
        prob.left_exponent = 1.0 - alpha;
        prob.right_exponent = alpha;
    }
    prob.integrand = [&f, alpha](double t) {
        return detail::scaled_by_power(f(t), t, -alpha - 1.0);
    };
    return integrate_halfline(prob);
}

} // namespace esymdom
