#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "esymdom/esym.hpp"
#include "esymdom/quadrature.hpp"

namespace esymdom {

struct SimplexViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised by the closed divided-difference evaluators when two spectrum
/// entries are too close for the formula to be trustworthy; callers fall
/// back to the integral evaluator.
struct DegenerateSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Order parameter of the Renyi entropy. The value 1 is excluded here and
/// served by shannon_entropy; monotonicity under the dominance order is
/// only claimed for alpha in [0, 2].
struct RenyiOrder {
    double alpha;
    explicit RenyiOrder(double a) : alpha(a)
    {
        if (!std::isfinite(a) || a < 0.0 || a == 1.0)
            throw std::invalid_argument(
                "RenyiOrder: alpha must be finite, >= 0, and != 1");
    }
};

namespace detail {

inline constexpr double kSimplexTol = 1e-9;
inline constexpr double kDefaultGapThreshold = 1e-4;

inline double entry_sum(const PositiveVector& x)
{
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

inline void require_simplex(const PositiveVector& x, const char* who)
{
    if (std::fabs(entry_sum(x) - 1.0) > kSimplexTol)
        throw SimplexViolation(std::string(who) +
                               ": entries must sum to 1 within 1e-9");
}

inline double min_relative_gap(const PositiveVector& x)
{
    const std::size_t n = x.size();
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g = std::min(g, std::fabs(x[i] - x[j]) / std::max(x[i], x[j]));
    return g;
}

inline void require_separated(const PositiveVector& x, double threshold,
                              const char* who)
{
    if (x.size() >= 2 && !(min_relative_gap(x) > threshold))
        throw DegenerateSpectrum(std::string(who) +
                                 ": pairwise relative gap below threshold");
}

/// log(1+u) - u without cancellation: series for small u, direct otherwise.
inline double log1p_minus_linear(double u)
{
    if (std::fabs(u) < 1e-4) {
        const double u2 = u * u;
        return -u2 * (0.5 - u * (1.0 / 3.0 - u * (0.25 - u * 0.2)));
    }
    return std::log1p(u) - u;
}

} // namespace detail

/// sum_i (log x_i)^2.
[[nodiscard]] inline double sum_sq_logs(const PositiveVector& x)
{
    double s = 0.0;
    for (double v : x) {
        const double l = std::log(v);
        s += l * l;
    }
    return s;
}

/// Renyi entropy of a probability vector: log(sum x_i^alpha) / (1 - alpha).
/// alpha = 0 gives log n, since all entries are strictly positive.
[[nodiscard]] inline double renyi_entropy(const PositiveVector& x, RenyiOrder order)
{
    detail::require_simplex(x, "renyi_entropy");
    if (order.alpha == 0.0)
        return std::log(static_cast<double>(x.size()));
    double s = 0.0;
    for (double v : x) s += std::pow(v, order.alpha);
    return std::log(s) / (1.0 - order.alpha);
}

/// -sum x_i log x_i on a probability vector.
[[nodiscard]] inline double shannon_entropy(const PositiveVector& x)
{
    detail::require_simplex(x, "shannon_entropy");
    double s = 0.0;
    for (double v : x) s -= v * std::log(v);
    return s;
}

/// sum x_i^alpha for alpha in (0,1) or (1,2); exposed on its own so the
/// direction flip of the power-sum inequality across alpha = 1 can be
/// checked without the log/(1-alpha) wrapper.
[[nodiscard]] inline double power_sum(const PositiveVector& x, double alpha)
{
    if (!((alpha > 0.0 && alpha < 1.0) || (alpha > 1.0 && alpha < 2.0)))
        throw std::invalid_argument("power_sum: alpha must lie in (0,1) or (1,2)");
    double s = 0.0;
    for (double v : x) s += std::pow(v, alpha);
    return s;
}

/// Subentropy via the closed divided-difference form
///   Q(x) = -sum_i x_i^n log(x_i) / prod_{j != i} (x_i - x_j).
/// Fast but cancellation-prone near coalescing entries, so it requires all
/// pairwise relative gaps above gap_threshold; throws DegenerateSpectrum
/// otherwise (use subentropy_integral instead).
[[nodiscard]] inline double
subentropy_closed(const PositiveVector& x,
                  double gap_threshold = detail::kDefaultGapThreshold)
{
    detail::require_simplex(x, "subentropy_closed");
    detail::require_separated(x, gap_threshold, "subentropy_closed");
    const std::size_t n = x.size();
    if (n == 1) return 0.0;
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double denom = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= x[i] - x[j];
        q -= std::pow(x[i], static_cast<double>(n)) * std::log(x[i]) / denom;
    }
    return q;
}

/// Subentropy via its regularized integral representation. The canonical
/// evaluator: valid for every positive spectrum on the simplex, repeated
/// entries included. With e_1 = 1 the integrand collapses algebraically to
///   sum_{k=2..n} e_k t^{n-k+1} / ((1+t) prod_j (t + x_j)),
/// which is subtraction-free; the input is rescaled by 1/e_1(x) (allowed
/// drift at most 1e-9) so that identity applies exactly.
[[nodiscard]] inline double subentropy_integral(const PositiveVector& x)
{
    detail::require_simplex(x, "subentropy_integral");
    const std::size_t n = x.size();
    if (n == 1) return 0.0;

    const double s1 = detail::entry_sum(x);
    std::vector<double> u(x.entries());
    for (double& v : u) v /= s1;
    const PositiveVector xs{std::move(u)};
    const ESignature sig = esym_all(xs);

    QuadratureProblem prob;
    prob.left_exponent = 1.0;
    prob.right_exponent = 2.0;
    prob.integrand = [&xs, &sig, n](double t) {
        // Horner from the leading coefficient: e_2 t^{n-1} + ... + e_n t
        double num = 0.0;
        for (std::size_t k = 2; k <= n; ++k) num = num * t + sig.e(k);
        num *= t;
        double den = 1.0 + t;
        for (double v : xs) den *= t + v;
        return num / den;
    };
    return integrate_halfline(prob).value;
}

/// Divided difference of t -> t^alpha over the nodes x (0 < alpha < 1):
///   sum_i x_i^alpha / prod_{j != i} (x_i - x_j),
/// evaluated on x as given; the sum is symmetric so no sorting is applied.
/// Requires pairwise relative gaps above the confluence threshold.
[[nodiscard]] inline double
divided_difference_power(const PositiveVector& x, double alpha,
                         double gap_threshold = detail::kDefaultGapThreshold)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument(
            "divided_difference_power: alpha must lie in (0,1)");
    const std::size_t n = x.size();
    if (n == 1) return std::pow(x[0], alpha);
    detail::require_separated(x, gap_threshold, "divided_difference_power");
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double denom = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= x[i] - x[j];
        s += std::pow(x[i], alpha) / denom;
    }
    return s;
}

/// One of the three scalar integral identities the library certifies:
/// two power representations reproducing s^alpha and the squared-log
/// representation. Carries the assembled pieces (kernel in (t, s), weight
/// density in t, prefactor, endpoint exponents) for generic integration.
struct IntegralRepresentation {
    enum class Id { EQ7, EQ8, EQ10 };

    Id identity_id;
    double alpha; // NaN for the squared-log identity
    double prefactor;
    std::function<double(double, double)> integrand;     // (t, s)
    std::function<double(double)> measure_weight;        // d(mu)/dt
    double weight_exponent; // the weight is t^weight_exponent exactly
    double left_exponent;
    double right_exponent;

    /// s^alpha = (alpha sin(alpha pi)/pi) * Int log(1+ts) t^{-alpha-1} dt,
    /// for 0 < alpha < 1.
    [[nodiscard]] static IntegralRepresentation power_kernel(double alpha)
    {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw std::invalid_argument("power_kernel: alpha must lie in (0,1)");
        IntegralRepresentation rep;
        rep.identity_id = Id::EQ7;
        rep.alpha = alpha;
        rep.prefactor = alpha * std::sin(alpha * std::numbers::pi) / std::numbers::pi;
        rep.integrand = [](double t, double s) { return std::log1p(t * s); };
        rep.measure_weight = [alpha](double t) { return std::pow(t, -alpha - 1.0); };
        rep.weight_exponent = -alpha - 1.0;
        rep.left_exponent = -alpha;
        rep.right_exponent = 1.0 + alpha;
        return rep;
    }

    /// s^alpha = (alpha sin(alpha pi)/pi) * Int (log(1+ts) - ts) t^{-alpha-1} dt,
    /// for 1 < alpha < 2; the prefactor is negative there and the kernel is
    /// evaluated by a compensated series for small ts.
    [[nodiscard]] static IntegralRepresentation compensated_power_kernel(double alpha)
    {
        if (!(alpha > 1.0 && alpha < 2.0))
            throw std::invalid_argument(
                "compensated_power_kernel: alpha must lie in (1,2)");
        IntegralRepresentation rep;
        rep.identity_id = Id::EQ8;
        rep.alpha = alpha;
        rep.prefactor = alpha * std::sin(alpha * std::numbers::pi) / std::numbers::pi;
        rep.integrand = [](double t, double s) {
            return detail::log1p_minus_linear(t * s);
        };
        rep.measure_weight = [alpha](double t) { return std::pow(t, -alpha - 1.0); };
        rep.weight_exponent = -alpha - 1.0;
        rep.left_exponent = 1.0 - alpha;
        rep.right_exponent = alpha;
        return rep;
    }

    /// (log s)^2 = Int log((1+ts)(t+s) / (s(1+t)^2)) dt/t, for s > 0.
    /// The log argument simplifies exactly to 1 + t(1-s)^2/(s(1+t)^2),
    /// which is how the kernel is evaluated.
    [[nodiscard]] static IntegralRepresentation squared_log_kernel()
    {
        IntegralRepresentation rep;
        rep.identity_id = Id::EQ10;
        rep.alpha = std::numeric_limits<double>::quiet_NaN();
        rep.prefactor = 1.0;
        rep.integrand = [](double t, double s) {
            const double d = 1.0 + t;
            return std::log1p(t * (1.0 - s) * (1.0 - s) / (s * d * d));
        };
        rep.measure_weight = [](double t) { return 1.0 / t; };
        rep.weight_exponent = -1.0;
        rep.left_exponent = 0.0;
        rep.right_exponent = 2.0;
        return rep;
    }

    /// The value the identity must reproduce at s.
    [[nodiscard]] double closed_form(double s) const
    {
        if (identity_id == Id::EQ10) {
            const double l = std::log(s);
            return l * l;
        }
        return std::pow(s, alpha);
    }
};

/// Numerically integrate the representation at s. Must reproduce
/// closed_form(s) within quadrature tolerance on the identity's validity
/// range (s >= 0 for the power kernels, s > 0 for the squared-log kernel).
[[nodiscard]] inline double
eval_integral_identity(const IntegralRepresentation& rep, double s)
{
    if (rep.identity_id == IntegralRepresentation::Id::EQ10) {
        if (!(s > 0.0))
            throw std::invalid_argument("eval_integral_identity: need s > 0");
    } else {
        if (!(s >= 0.0))
            throw std::invalid_argument("eval_integral_identity: need s >= 0");
        if (s == 0.0) return 0.0; // kernel vanishes identically
    }
    QuadratureProblem prob;
    prob.left_exponent = rep.left_exponent;
    prob.right_exponent = rep.right_exponent;
    prob.integrand = [&rep, s](double t) {
        // assembled in log space: the weight alone can overflow double range
        // deep in the graded subdivision even though the product is ordinary
        return esymdom::detail::scaled_by_power(rep.integrand(t, s), t, rep.weight_exponent);
    };
    return rep.prefactor * integrate_halfline(prob).value;
}

} // namespace esymdom
