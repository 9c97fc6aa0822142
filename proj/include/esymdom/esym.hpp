#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace esymdom {

/// Strictly positive real vector. All scalar functionals in this library
/// take their arguments through this type; construction rejects entries
/// that are zero, negative, or not finite.
class PositiveVector {
public:
    explicit PositiveVector(std::vector<double> entries)
        : entries_(std::move(entries))
    {
        if (entries_.empty())
            throw std::invalid_argument("PositiveVector: need at least one entry");
        for (double v : entries_) {
            if (!std::isfinite(v) || v <= 0.0)
                throw std::invalid_argument(
                    "PositiveVector: entries must be finite and > 0, got " +
                    std::to_string(v));
        }
    }

    [[nodiscard]] const std::vector<double>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return entries_[i]; }

    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

private:
    std::vector<double> entries_;
};

/// The sequence (e_1, ..., e_n) of elementary symmetric polynomial values
/// of an n-vector. e(0) is the conventional 1.
struct ESignature {
    std::vector<double> values; // e_1 .. e_n

    [[nodiscard]] std::size_t dim() const noexcept { return values.size(); }

    /// e_k with 1-based k; e(0) == 1.
    [[nodiscard]] double e(std::size_t k) const
    {
        if (k == 0) return 1.0;
        return values.at(k - 1);
    }
};

/// All elementary symmetric polynomials of x at once, via the in-place
/// product expansion of prod_i (1 + t*x_i). Coefficients are updated from
/// high index to low, so every intermediate value is a sum of products of
/// positive entries: no subtraction, no cancellation.
[[nodiscard]] inline ESignature esym_all(const PositiveVector& x)
{
    const std::size_t n = x.size();
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        for (std::size_t j = std::min(i + 1, n); j >= 1; --j)
            e[j] += xi * e[j - 1];
    }
    return ESignature{std::vector<double>(e.begin() + 1, e.end())};
}

/// prod_i (1 + t*x_i), the generating function whose coefficients are the
/// elementary symmetric polynomials. Requires t >= 0.
[[nodiscard]] inline double gen_poly_one_plus_t(const PositiveVector& x, double t)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("gen_poly_one_plus_t: t must be >= 0");
    double p = 1.0;
    for (double xi : x) p *= 1.0 + t * xi;
    return p;
}

/// prod_i (t + x_i), the reversed generating function. Requires t >= 0.
[[nodiscard]] inline double gen_poly_t_plus_x(const PositiveVector& x, double t)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("gen_poly_t_plus_x: t must be >= 0");
    double p = 1.0;
    for (double xi : x) p *= t + xi;
    return p;
}

enum class OrderKind { Equal, StrictOrder, WeakOrder, Incomparable };
enum class OrderDirection { LeftBelowRight, RightBelowLeft, NotApplicable };

[[nodiscard]] inline const char* to_string(OrderKind k)
{
    switch (k) {
        case OrderKind::Equal: return "Equal";
        case OrderKind::StrictOrder: return "StrictOrder";
        case OrderKind::WeakOrder: return "WeakOrder";
        case OrderKind::Incomparable: return "Incomparable";
    }
    return "?";
}

[[nodiscard]] inline const char* to_string(OrderDirection d)
{
    switch (d) {
        case OrderDirection::LeftBelowRight: return "LeftBelowRight";
        case OrderDirection::RightBelowLeft: return "RightBelowLeft";
        case OrderDirection::NotApplicable: return "NotApplicable";
    }
    return "?";
}

/// Tolerance policy for signature comparison. The top-coefficient equality
/// test is relative to max(e_n(x), e_n(y)); every other margin is measured
/// against scale_k = max(|e_k(x)|, |e_k(y)|, 1).
struct ComparisonTolerance {
    double tol_eq = 1e-9;

    [[nodiscard]] static double scale(double a, double b)
    {
        return std::max({std::fabs(a), std::fabs(b), 1.0});
    }
};

/// Outcome of comparing two signatures under the elementary symmetric
/// dominance order. margins[k-1] = e_k(y) - e_k(x); direction reports which
/// argument is the dominated one.
struct DominanceVerdict {
    OrderKind kind = OrderKind::Incomparable;
    OrderDirection direction = OrderDirection::NotApplicable;
    std::vector<double> margins;
};

/// Classify a signature pair. StrictOrder means e_k ordered for k < n and
/// e_n equal within tolerance; WeakOrder relaxes the last test to one-sided.
/// With n = 1 there are no strict indices, so only Equal and Incomparable
/// can be returned.
[[nodiscard]] inline DominanceVerdict
compare_signatures(const ESignature& ex, const ESignature& ey,
                   ComparisonTolerance tol = {})
{
    const std::size_t n = ex.dim();
    if (n != ey.dim())
        throw std::invalid_argument("compare: dimension mismatch");
    if (!(tol.tol_eq > 0.0))
        throw std::invalid_argument("compare: tol_eq must be > 0");

    DominanceVerdict v;
    v.margins.resize(n);
    bool all_equal = true;
    for (std::size_t k = 1; k <= n; ++k) {
        const double m = ey.e(k) - ex.e(k);
        v.margins[k - 1] = m;
        if (std::fabs(m) > tol.tol_eq * ComparisonTolerance::scale(ex.e(k), ey.e(k)))
            all_equal = false;
    }
    if (all_equal) {
        v.kind = OrderKind::Equal;
        v.direction = OrderDirection::NotApplicable;
        return v;
    }
    if (n == 1) return v; // Incomparable: nothing but e_1, and it differs

    const double enx = ex.e(n);
    const double eny = ey.e(n);
    const bool top_equal =
        std::fabs(enx - eny) <= tol.tol_eq * std::max(enx, eny);

    const auto below = [&](bool left_below, std::size_t k_hi) {
        for (std::size_t k = 1; k <= k_hi; ++k) {
            const double m = left_below ? v.margins[k - 1] : -v.margins[k - 1];
            if (m < -tol.tol_eq * ComparisonTolerance::scale(ex.e(k), ey.e(k)))
                return false;
        }
        return true;
    };

    if (top_equal) {
        if (below(true, n - 1)) {
            v.kind = OrderKind::StrictOrder;
            v.direction = OrderDirection::LeftBelowRight;
        } else if (below(false, n - 1)) {
            v.kind = OrderKind::StrictOrder;
            v.direction = OrderDirection::RightBelowLeft;
        }
        return v;
    }
    if (below(true, n)) {
        v.kind = OrderKind::WeakOrder;
        v.direction = OrderDirection::LeftBelowRight;
    } else if (below(false, n)) {
        v.kind = OrderKind::WeakOrder;
        v.direction = OrderDirection::RightBelowLeft;
    }
    return v;
}

[[nodiscard]] inline DominanceVerdict
compare(const PositiveVector& x, const PositiveVector& y,
        ComparisonTolerance tol = {})
{
    if (x.size() != y.size())
        throw std::invalid_argument("compare: dimension mismatch");
    return compare_signatures(esym_all(x), esym_all(y), tol);
}

/// Worst relative margin of the two generating-function inequalities over a
/// t grid: min over t of (prod(y) - prod(x)) / max(prod(x), prod(y), 1) for
/// both prod(1 + t*.) and prod(t + .). Nonnegative up to rounding whenever
/// x is weakly dominated by y. The margin is normalized because the raw
/// products reach ~1e30 at the large-t end of the default grid.
[[nodiscard]] inline double
verify_generating_inequality(const PositiveVector& x, const PositiveVector& y,
                             std::span<const double> t_grid)
{
    const DominanceVerdict v = compare(x, y);
    const bool ordered =
        (v.kind == OrderKind::StrictOrder || v.kind == OrderKind::WeakOrder ||
         v.kind == OrderKind::Equal) &&
        v.direction != OrderDirection::RightBelowLeft;
    if (!ordered)
        throw std::invalid_argument(
            "verify_generating_inequality: x must be weakly dominated by y");

    double worst = 0.0;
    bool first = true;
    for (double t : t_grid) {
        const double a1 = gen_poly_one_plus_t(x, t);
        const double b1 = gen_poly_one_plus_t(y, t);
        const double a2 = gen_poly_t_plus_x(x, t);
        const double b2 = gen_poly_t_plus_x(y, t);
        const double m1 = (b1 - a1) / std::max({a1, b1, 1.0});
        const double m2 = (b2 - a2) / std::max({a2, b2, 1.0});
        const double m = std::min(m1, m2);
        worst = first ? m : std::min(worst, m);
        first = false;
    }
    return worst;
}

/// Newton-Maclaurin chain on a derived signature:
/// (e_k / C(n,k))^2 >= (e_{k-1}/C(n,k-1)) * (e_{k+1}/C(n,k+1)).
[[nodiscard]] inline bool
newton_maclaurin_ok(const ESignature& sig, double rel_tol = 1e-9)
{
    const std::size_t n = sig.dim();
    std::vector<double> binom(n + 1);
    binom[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k)
        binom[k] = binom[k - 1] * static_cast<double>(n - k + 1) / static_cast<double>(k);

    for (std::size_t k = 1; k + 1 <= n; ++k) {
        const double mk = sig.e(k) / binom[k];
        const double lo = sig.e(k - 1) / binom[k - 1];
        const double hi = sig.e(k + 1) / binom[k + 1];
        const double lhs = mk * mk;
        const double rhs = lo * hi;
        if (lhs < rhs - rel_tol * std::max(lhs, rhs)) return false;
    }
    return true;
}

/// count points, logarithmically spaced over [lo, hi], endpoints included.
[[nodiscard]] inline std::vector<double>
log_spaced_grid(double lo, double hi, std::size_t count)
{
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw std::invalid_argument("log_spaced_grid: need 0 < lo < hi, count >= 2");
    std::vector<double> g(count);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(count - 1);
        g[i] = std::exp(llo + f * (lhi - llo));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace esymdom
