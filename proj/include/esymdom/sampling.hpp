#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "esymdom/esym.hpp"
#include "esymdom/matrix.hpp"
#include "esymdom/polyroots.hpp"
#include "esymdom/rng.hpp"

namespace esymdom {

/// Which hypotheses the generated pair certifies: strict kinds pin the top
/// coefficient e_n equal, simplex kinds additionally pin e_1 = 1 on both
/// sides. SimplexStrict needs n >= 3: with n = 2, fixing e_1 and e_2
/// forces x = y.
enum class PairConstraint { FullStrict, WeakOnly, SimplexStrict, SimplexWeak };

[[nodiscard]] inline const char* to_string(PairConstraint c)
{
    switch (c) {
        case PairConstraint::FullStrict: return "FullStrict";
        case PairConstraint::WeakOnly: return "WeakOnly";
        case PairConstraint::SimplexStrict: return "SimplexStrict";
        case PairConstraint::SimplexWeak: return "SimplexWeak";
    }
    return "?";
}

[[nodiscard]] inline std::optional<PairConstraint>
parse_constraint(const std::string& s)
{
    if (s == "FullStrict") return PairConstraint::FullStrict;
    if (s == "WeakOnly") return PairConstraint::WeakOnly;
    if (s == "SimplexStrict") return PairConstraint::SimplexStrict;
    if (s == "SimplexWeak") return PairConstraint::SimplexWeak;
    return std::nullopt;
}

[[nodiscard]] inline bool constraint_feasible(PairConstraint c, std::size_t n)
{
    return n >= (c == PairConstraint::SimplexStrict ? 3u : 2u);
}

[[nodiscard]] inline bool simplex_constraint(PairConstraint c)
{
    return c == PairConstraint::SimplexStrict || c == PairConstraint::SimplexWeak;
}

[[nodiscard]] inline bool strict_constraint(PairConstraint c)
{
    return c == PairConstraint::FullStrict || c == PairConstraint::SimplexStrict;
}

/// A generated pair together with its recomputed verdict. The verdict is
/// always re-derived through compare(); the construction is never trusted.
struct DominancePair {
    PositiveVector x;
    PositiveVector y;
    PairConstraint constraint;
    DominanceVerdict verdict;
};

struct InfeasibleProduct : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SampleStatus { Accepted, Rejected, SolverFailure };

struct PairSample {
    SampleStatus status = SampleStatus::Rejected;
    std::optional<DominancePair> pair;
};

namespace detail {

/// Did the recomputed verdict land inside the declared constraint? Equal is
/// always admissible, and a WeakOnly draw that happens to keep e_n equal
/// (StrictOrder) certifies the weak hypothesis a fortiori.
inline bool verdict_matches(PairConstraint c, const DominanceVerdict& v)
{
    if (v.direction == OrderDirection::RightBelowLeft) return false;
    switch (v.kind) {
        case OrderKind::Equal: return true;
        case OrderKind::StrictOrder: return true;
        case OrderKind::WeakOrder: return !strict_constraint(c);
        case OrderKind::Incomparable: return false;
    }
    return false;
}

inline bool on_simplex(const PositiveVector& v)
{
    double s = 0.0;
    for (double e : v) s += e;
    return std::fabs(s - 1.0) <= 1e-9;
}

} // namespace detail

struct PairRanges {
    double product_min = 0.1;
    double product_max = 10.0;
    double sum_factor_max = 10.0; // sums sampled in [2 sqrt(p), factor*sqrt(p)]
};

/// Root pair of t^2 - s t + p, largest first. Requires s >= 2 sqrt(p); the
/// smaller root comes from the product to dodge the subtractive branch.
[[nodiscard]] inline std::vector<double> quadratic_root_pair(double s, double p)
{
    const double disc = std::sqrt(std::max(0.0, s * s - 4.0 * p));
    const double hi = 0.5 * (s + disc);
    return {hi, p / hi};
}

/// Rejection-free n = 2 generator: fixes the product p, samples two sums
/// s_x <= s_y in [2 sqrt(p), factor*sqrt(p)], and recovers each vector as
/// the root pair of t^2 - s t + p. Only e_1 carries a strict index at
/// n = 2, so every draw is FullStrict by construction.
[[nodiscard]] inline DominancePair pair_n2(std::uint64_t seed,
                                           const PairRanges& ranges = {})
{
    if (!(ranges.product_min > 0.0) || !(ranges.product_max > ranges.product_min) ||
        !(ranges.sum_factor_max > 2.0))
        throw std::invalid_argument("pair_n2: bad ranges");
    SplitMix64 rng(seed);
    const double p = rng.log_uniform(ranges.product_min, ranges.product_max);
    const double root_p = std::sqrt(p);
    const double s_lo = 2.0 * root_p;
    const double s_hi = ranges.sum_factor_max * root_p;
    double sa = rng.uniform(s_lo, s_hi);
    double sb = rng.uniform(s_lo, s_hi);
    if (sa > sb) std::swap(sa, sb);

    PositiveVector x{quadratic_root_pair(sa, p)};
    PositiveVector y{quadratic_root_pair(sb, p)};
    DominanceVerdict v = compare(x, y);
    return DominancePair{std::move(x), std::move(y),
                         PairConstraint::FullStrict, std::move(v)};
}

/// Feasible interval [c_min, c_max] of e_2 values for which the cubic
/// t^3 - t^2 + c t - p has three positive real roots (e_1 = 1, e_3 = p).
/// The boundary configurations have a double root (a, a, 1-2a); each is
/// located by bisection on a^2(1-2a) = p over the two monotone branches.
[[nodiscard]] inline std::pair<double, double>
simplex_cubic_e2_interval(double p)
{
    if (!(p > 0.0) || p > 1.0 / 27.0 + 1e-15)
        throw InfeasibleProduct(
            "simplex_cubic_e2_interval: e_3 must lie in (0, 1/27]");
    const auto bisect_branch = [p](double lo, double hi, bool increasing) {
        // g(a) = a^2 (1 - 2a) - p, monotone on each branch
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double g = mid * mid * (1.0 - 2.0 * mid) - p;
            if ((g < 0.0) == increasing)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    const double third = 1.0 / 3.0;
    const double a_lo = bisect_branch(0.0, third, true);
    const double a_hi = bisect_branch(third, 0.5, false);
    const double c_lo = 2.0 * a_lo - 3.0 * a_lo * a_lo;
    const double c_hi = 2.0 * a_hi - 3.0 * a_hi * a_hi;
    return {std::min(c_lo, c_hi), std::max(c_lo, c_hi)};
}

/// Three real roots of t^3 - t^2 + c t - p via the trigonometric solution
/// of the depressed cubic. Valid when the discriminant is nonnegative; the
/// acos argument is clamped against rounding spill.
[[nodiscard]] inline std::array<double, 3>
cubic_roots_trig(double c, double p)
{
    const double P = c - 1.0 / 3.0;
    const double Q = -2.0 / 27.0 + c / 3.0 - p;
    const double m = 2.0 * std::sqrt(std::max(0.0, -P / 3.0));
    double arg = 0.0;
    if (m > 0.0) arg = 3.0 * Q / (P * m);
    arg = std::min(1.0, std::max(-1.0, arg));
    const double phi = std::acos(arg) / 3.0;
    std::array<double, 3> r{};
    for (int k = 0; k < 3; ++k)
        r[k] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + 1.0 / 3.0;
    return r;
}

/// Rejection-free n = 3 simplex generator: fixes e_1 = 1 and a sampled
/// e_3 = p in (0, 1/27], computes the feasible e_2 interval, samples
/// c_x <= c_y inside it, and recovers both root triples in closed form.
[[nodiscard]] inline DominancePair pair_n3_simplex(std::uint64_t seed)
{
    SplitMix64 rng(seed);
    const double p = rng.uniform_open01() / 27.0;
    const auto [c_min, c_max] = simplex_cubic_e2_interval(p);
    // keep away from the discriminant-zero boundary so the recovered roots
    // stay well separated from double-root configurations
    const double pad = 1e-6 * (c_max - c_min);
    double ca = rng.uniform(c_min + pad, c_max - pad);
    double cb = rng.uniform(c_min + pad, c_max - pad);
    if (ca > cb) std::swap(ca, cb);

    const auto vec_of = [p](double c) {
        const auto r = cubic_roots_trig(c, p);
        return PositiveVector{{r[0], r[1], r[2]}};
    };
    PositiveVector x = vec_of(ca);
    PositiveVector y = vec_of(cb);
    DominanceVerdict v = compare(x, y);
    return DominancePair{std::move(x), std::move(y),
                         PairConstraint::SimplexStrict, std::move(v)};
}

/// General coefficient-space generator: samples y with log-uniform entries
/// in [0.1, 10] (rescaled to the simplex for simplex kinds), shrinks the
/// free signature coefficients by factors 1 - shrink*u_k, and recovers x as
/// the negated real parts of the roots of the monic polynomial with the
/// shrunk coefficients. Draws whose roots fail the realness/sign check, or
/// whose recomputed signature drifts off the targets, are Rejected; the
/// caller resamples from the next substream.
[[nodiscard]] inline PairSample
pair_general(std::uint64_t seed, std::size_t n, PairConstraint constraint,
             double shrink = 0.05)
{
    if (n < 2) throw std::invalid_argument("pair_general: need n >= 2");
    if (!constraint_feasible(constraint, n))
        throw std::invalid_argument("pair_general: infeasible constraint for n");
    if (!(shrink >= 0.0 && shrink <= 0.2))
        throw std::invalid_argument("pair_general: shrink must lie in [0, 0.2]");

    SplitMix64 rng(seed);
    std::vector<double> ye(n);
    for (double& v : ye) v = rng.log_uniform(0.1, 10.0);
    if (simplex_constraint(constraint)) {
        double s = 0.0;
        for (double v : ye) s += v;
        for (double& v : ye) v /= s;
    }
    PositiveVector y{std::move(ye)};
    const ESignature sy = esym_all(y);

    std::vector<double> targets(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const bool hold_first = simplex_constraint(constraint) && k == 1;
        const bool hold_last = strict_constraint(constraint) && k == n;
        const double theta =
            (hold_first || hold_last) ? 1.0 : 1.0 - shrink * rng.uniform01();
        targets[k - 1] = theta * sy.e(k);
    }

    auto roots = all_roots_monic(targets);
    if (!roots) return PairSample{SampleStatus::SolverFailure, std::nullopt};
    const RootednessCheck rc = RootednessCheck::run(std::move(*roots));
    if (!rc.accepted) return PairSample{SampleStatus::Rejected, std::nullopt};

    std::vector<double> xe(n);
    for (std::size_t i = 0; i < n; ++i) xe[i] = -rc.roots[i].real();
    PositiveVector x{std::move(xe)};

    // recomputation gate: recovered signature must reproduce every target
    const ESignature sx = esym_all(x);
    for (std::size_t k = 1; k <= n; ++k) {
        const double got = sx.e(k);
        const double want = targets[k - 1];
        if (std::fabs(got - want) > 1e-10 * std::max(std::fabs(got), std::fabs(want)))
            return PairSample{SampleStatus::Rejected, std::nullopt};
    }
    if (simplex_constraint(constraint) &&
        !(detail::on_simplex(x) && detail::on_simplex(y)))
        return PairSample{SampleStatus::Rejected, std::nullopt};

    DominanceVerdict v = compare_signatures(sx, sy);
    if (!detail::verdict_matches(constraint, v))
        return PairSample{SampleStatus::Rejected, std::nullopt};
    return PairSample{SampleStatus::Accepted,
                      DominancePair{std::move(x), std::move(y), constraint,
                                    std::move(v)}};
}

/// Harness default for the coefficient shrink: the real-rooted cone around
/// theta = 1 narrows sharply with dimension (acceptance at shrink 0.05
/// drops from ~40% at n=4 to ~0.02% at n=8), so the shrink is halved per
/// added coordinate beyond n=4 to keep rejection sampling practical.
[[nodiscard]] inline double default_shrink(std::size_t n)
{
    return std::min(0.05, 0.8 * std::pow(0.5, static_cast<double>(n)));
}

/// One pair draw routed to the cheapest generator that serves the
/// constraint: the analytic n = 2 and n = 3 constructions are rejection
/// free, everything else goes through the coefficient-space sampler.
/// A negative shrink selects the dimension-scaled default.
[[nodiscard]] inline PairSample draw_pair(std::uint64_t seed, std::size_t n,
                                          PairConstraint constraint,
                                          double shrink = -1.0)
{
    if (!constraint_feasible(constraint, n))
        throw std::invalid_argument("draw_pair: infeasible constraint for n");
    if (shrink < 0.0) shrink = default_shrink(n);
    if (n == 2 && constraint == PairConstraint::FullStrict)
        return PairSample{SampleStatus::Accepted, pair_n2(seed)};
    if (n == 3 && constraint == PairConstraint::SimplexStrict)
        return PairSample{SampleStatus::Accepted, pair_n3_simplex(seed)};
    return pair_general(seed, n, constraint, shrink);
}

struct MajorizationPair {
    PositiveVector x; // majorized: x ≺ y
    PositiveVector y;
};

/// Classical majorization pair: sample y, then average x down from it with
/// 2n random T-transforms (convex combinations of the identity and a
/// transposition on two coordinates). Sums are preserved exactly up to
/// rounding, so x ≺ y holds by construction.
[[nodiscard]] inline MajorizationPair majorization_pair(std::uint64_t seed,
                                                        std::size_t n)
{
    if (n < 2) throw std::invalid_argument("majorization_pair: need n >= 2");
    SplitMix64 rng(seed);
    std::vector<double> ye(n);
    for (double& v : ye) v = rng.log_uniform(0.1, 10.0);
    std::vector<double> xe(ye);
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const std::size_t i = static_cast<std::size_t>(rng.next() % n);
        std::size_t j = static_cast<std::size_t>(rng.next() % (n - 1));
        if (j >= i) ++j;
        const double lam = rng.uniform01();
        const double xi = xe[i];
        const double xj = xe[j];
        xe[i] = lam * xi + (1.0 - lam) * xj;
        xe[j] = lam * xj + (1.0 - lam) * xi;
    }
    return MajorizationPair{PositiveVector{std::move(xe)},
                            PositiveVector{std::move(ye)}};
}

struct MatrixTriple {
    SpdMatrix a;
    SpdMatrix b;
    SpdMatrix c;
    PositiveVector x; // spectrum of C^{-1/2} A C^{-1/2}
    PositiveVector y; // spectrum of C^{-1/2} B C^{-1/2}
};

namespace detail {

/// Random orthogonal matrix: Gaussian fill, then modified Gram-Schmidt.
inline Matrix random_orthogonal(SplitMix64& rng, std::size_t n)
{
    Matrix q(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> v(n);
        for (double& e : v) e = rng.normal();
        for (std::size_t prev = 0; prev < col; ++prev) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += v[i] * q(i, prev);
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, prev);
        }
        double norm = 0.0;
        for (double e : v) norm += e * e;
        norm = std::sqrt(norm);
        if (norm < 1e-8) {
            // essentially impossible for Gaussian draws; restart the column
            --col;
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) q(i, col) = v[i] / norm;
    }
    return q;
}

inline Matrix conjugate_diag(const Matrix& q, const std::vector<double>& d)
{
    const std::size_t n = q.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += q(i, k) * d[k] * q(j, k);
            out(i, j) = s;
            out(j, i) = s;
        }
    return out;
}

} // namespace detail

/// Unit test fixture for the matrix inequalities: draws a dominance pair
/// (x, y), two independent random orthogonal bases, and a random SPD C,
/// and returns A = C^{1/2} U diag(x) U^T C^{1/2} (same for B with V, y),
/// so that the spectrum of A C^{-1} is exactly x and of B C^{-1} exactly y.
/// Returns nullopt when the underlying pair draw is rejected.
[[nodiscard]] inline std::optional<MatrixTriple>
matrix_triple(std::uint64_t seed, std::size_t n, PairConstraint constraint,
              double shrink = -1.0)
{
    PairSample ps = draw_pair(mix64(seed), n, constraint, shrink);
    if (ps.status != SampleStatus::Accepted) return std::nullopt;
    DominancePair pair = std::move(*ps.pair);

    SplitMix64 rng(mix64(seed ^ 0x5851F42D4C957F2DULL));
    const Matrix u = detail::random_orthogonal(rng, n);
    const Matrix v = detail::random_orthogonal(rng, n);
    std::vector<double> cd(n);
    for (double& e : cd) e = rng.log_uniform(0.2, 5.0);
    const Matrix c = detail::conjugate_diag(detail::random_orthogonal(rng, n), cd);

    SpdMatrix cm{c};
    const Matrix half = cm.sqrt_matrix();
    const Matrix a =
        (half * detail::conjugate_diag(u, pair.x.entries()) * half).symmetrized();
    const Matrix b =
        (half * detail::conjugate_diag(v, pair.y.entries()) * half).symmetrized();
    return MatrixTriple{SpdMatrix{a}, SpdMatrix{b}, std::move(cm),
                        std::move(pair.x), std::move(pair.y)};
}

struct SpdPair {
    SpdMatrix a;
    SpdMatrix b;
    PositiveVector x;
    PositiveVector y;
};

/// The C = I specialization: a pair of SPD matrices with prescribed
/// dominance-ordered spectra in independent random bases.
[[nodiscard]] inline std::optional<SpdPair>
spd_pair(std::uint64_t seed, std::size_t n, PairConstraint constraint,
         double shrink = -1.0)
{
    PairSample ps = draw_pair(mix64(seed), n, constraint, shrink);
    if (ps.status != SampleStatus::Accepted) return std::nullopt;
    DominancePair pair = std::move(*ps.pair);

    SplitMix64 rng(mix64(seed ^ 0x5851F42D4C957F2DULL));
    const Matrix u = detail::random_orthogonal(rng, n);
    const Matrix v = detail::random_orthogonal(rng, n);
    return SpdPair{SpdMatrix{detail::conjugate_diag(u, pair.x.entries())},
                   SpdMatrix{detail::conjugate_diag(v, pair.y.entries())},
                   std::move(pair.x), std::move(pair.y)};
}

/// Pair corpus CSV: header `n,constraint,seed,index,x_1..x_n,y_1..y_n`
/// (expanded per coordinate), one accepted pair per row at 17 significant
/// digits. `index` is the substream index that produced the row, so the
/// file is reproducible from (seed, index) alone. Throws if the acceptance
/// rate collapses.
inline void write_pair_corpus(std::ostream& os, std::size_t n,
                              PairConstraint constraint, std::uint64_t seed,
                              long count, double shrink = -1.0)
{
    if (!constraint_feasible(constraint, n))
        throw std::invalid_argument("write_pair_corpus: infeasible constraint");
    os << "n,constraint,seed,index";
    for (std::size_t i = 1; i <= n; ++i) os << ",x_" << i;
    for (std::size_t i = 1; i <= n; ++i) os << ",y_" << i;
    os << "\n";

    char buf[64];
    long written = 0;
    const long max_attempts = 1000 * std::max(count, 1L) + 1000;
    for (long index = 0; written < count; ++index) {
        if (index >= max_attempts)
            throw std::runtime_error("write_pair_corpus: acceptance rate too low");
        PairSample ps = draw_pair(substream_key(seed, static_cast<std::uint64_t>(index)),
                                  n, constraint, shrink);
        if (ps.status != SampleStatus::Accepted) continue;
        os << n << "," << to_string(constraint) << "," << seed << "," << index;
        for (double e : ps.pair->x) {
            std::snprintf(buf, sizeof buf, "%.17g", e);
            os << "," << buf;
        }
        for (double e : ps.pair->y) {
            std::snprintf(buf, sizeof buf, "%.17g", e);
            os << "," << buf;
        }
        os << "\n";
        ++written;
    }
}

} // namespace esymdom
