#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "esymdom/esym.hpp"
#include "esymdom/functionals.hpp"
#include "esymdom/matrix.hpp"
#include "esymdom/rng.hpp"
#include "esymdom/sampling.hpp"
#include "esymdom/version.hpp"

namespace esymdom {

/// Bad harness configuration (unknown property, infeasible n, alpha out of
/// the identity's range, ...). The CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Every numerically verifiable claim in scope, one id per theorem,
/// inequality, or integral identity.
enum class PropertyId {
    SSLI,
    RENYI,
    SHANNON,
    POWER_SUM_DIRECTION,
    SUBENTROPY,
    DIVDIFF_POWER,
    SCHUR_CONCAVE,
    GEN_FUNC,
    LOGDET,
    RIEMANNIAN,
    SDIV,
    QUANTUM_RENYI,
    EQ7_IDENTITY,
    EQ8_IDENTITY,
    EQ10_IDENTITY,
    EQ14_CROSSCHECK,
};

[[nodiscard]] inline const char* to_string(PropertyId p)
{
    switch (p) {
        case PropertyId::SSLI: return "SSLI";
        case PropertyId::RENYI: return "RENYI";
        case PropertyId::SHANNON: return "SHANNON";
        case PropertyId::POWER_SUM_DIRECTION: return "POWER_SUM_DIRECTION";
        case PropertyId::SUBENTROPY: return "SUBENTROPY";
        case PropertyId::DIVDIFF_POWER: return "DIVDIFF_POWER";
        case PropertyId::SCHUR_CONCAVE: return "SCHUR_CONCAVE";
        case PropertyId::GEN_FUNC: return "GEN_FUNC";
        case PropertyId::LOGDET: return "LOGDET";
        case PropertyId::RIEMANNIAN: return "RIEMANNIAN";
        case PropertyId::SDIV: return "SDIV";
        case PropertyId::QUANTUM_RENYI: return "QUANTUM_RENYI";
        case PropertyId::EQ7_IDENTITY: return "EQ7_IDENTITY";
        case PropertyId::EQ8_IDENTITY: return "EQ8_IDENTITY";
        case PropertyId::EQ10_IDENTITY: return "EQ10_IDENTITY";
        case PropertyId::EQ14_CROSSCHECK: return "EQ14_CROSSCHECK";
    }
    return "?";
}

[[nodiscard]] inline std::vector<PropertyId> all_properties()
{
    return {PropertyId::SSLI,          PropertyId::RENYI,
            PropertyId::SHANNON,       PropertyId::POWER_SUM_DIRECTION,
            PropertyId::SUBENTROPY,    PropertyId::DIVDIFF_POWER,
            PropertyId::SCHUR_CONCAVE, PropertyId::GEN_FUNC,
            PropertyId::LOGDET,        PropertyId::RIEMANNIAN,
            PropertyId::SDIV,          PropertyId::QUANTUM_RENYI,
            PropertyId::EQ7_IDENTITY,  PropertyId::EQ8_IDENTITY,
            PropertyId::EQ10_IDENTITY, PropertyId::EQ14_CROSSCHECK};
}

[[nodiscard]] inline std::optional<PropertyId>
parse_property(const std::string& name)
{
    for (PropertyId p : all_properties())
        if (name == to_string(p)) return p;
    return std::nullopt;
}

struct VerifyConfig {
    PropertyId property = PropertyId::SSLI;
    std::size_t n = 4;
    long trials = 1000; // target number of evaluated (non-rejected) trials
    std::uint64_t seed = 1;
    std::vector<double> alpha_grid; // empty = property default
    double shrink = -1.0; // negative = dimension-scaled default
};

/// Result of one seeded batch. `trials` counts every attempt consumed,
/// including sampler rejections, so passes + failures = trials - rejections
/// holds by construction; worst_margin is the minimum signed margin over
/// all evaluated trials, passing or failing.
struct VerificationReport {
    std::string property;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    long trials = 0;
    long passes = 0;
    long rejections = 0;
    double worst_margin = 0.0;
    std::string worst_witness_json = "{}";
    long wall_time_ms = 0;
    std::string library_version = esymdom::library_version;
    std::string direction = "not_applicable";

    [[nodiscard]] long evaluated() const { return trials - rejections; }
    [[nodiscard]] long failures() const { return evaluated() - passes; }
};

namespace detail {

inline std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_vec(std::span<const double> v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt17(v[i]);
    }
    return s + "]";
}

inline std::string json_matrix(const Matrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) s += ",";
            s += fmt17(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

inline std::string witness_pair(const PositiveVector& x, const PositiveVector& y)
{
    return "{\"x\":" + json_vec(x.entries()) + ",\"y\":" + json_vec(y.entries()) +
           "}";
}

/// (hi - lo) / max(|hi|, |lo|, 1): the uniform margin normalization.
inline double norm_margin(double hi, double lo)
{
    return (hi - lo) / std::max({std::fabs(hi), std::fabs(lo), 1.0});
}

struct TrialResult {
    double margin = 0.0;
    std::string witness = "{}";
};

/// Seeded batch engine: runs trial substreams until `target` of them are
/// evaluated (rejections do not count), tracking the worst margin and its
/// witness. Aborts via ConfigError if the sampler acceptance collapses.
template <typename TrialFn>
inline void run_sampled_batch(VerificationReport& rep, long target,
                              double pass_threshold, TrialFn&& trial)
{
    if (target < 1) throw ConfigError("trials must be >= 1");
    long evaluated = 0;
    double worst = std::numeric_limits<double>::infinity();
    const long max_attempts = 1000 * target + 1000;
    long index = 0;
    for (; evaluated < target; ++index) {
        if (index >= max_attempts)
            throw ConfigError("sampler acceptance rate too low for this "
                              "configuration");
        std::optional<TrialResult> r =
            trial(substream_key(rep.seed, static_cast<std::uint64_t>(index)));
        if (!r) {
            ++rep.rejections;
            continue;
        }
        ++evaluated;
        if (r->margin < worst) {
            worst = r->margin;
            rep.worst_witness_json = std::move(r->witness);
        }
        if (r->margin >= pass_threshold) ++rep.passes;
    }
    rep.trials = index;
    rep.worst_margin = evaluated ? worst : 0.0;
}

/// Fixed-grid engine for the integral identities: one "trial" per grid
/// point, no randomness involved.
inline void run_grid_batch(VerificationReport& rep,
                           std::span<const TrialResult> points)
{
    rep.trials = static_cast<long>(points.size());
    double worst = std::numeric_limits<double>::infinity();
    for (const TrialResult& r : points) {
        if (r.margin < worst) {
            worst = r.margin;
            rep.worst_witness_json = r.witness;
        }
        if (r.margin >= 0.0) ++rep.passes;
    }
    rep.worst_margin = points.empty() ? 0.0 : worst;
}

inline std::vector<double> default_alpha_grid(PropertyId p)
{
    switch (p) {
        case PropertyId::RENYI:
        case PropertyId::QUANTUM_RENYI:
            return {0.0, 0.25, 0.5, 0.75, 1.25, 1.5, 2.0};
        case PropertyId::POWER_SUM_DIRECTION:
            return {0.25, 0.5, 0.75, 1.25, 1.5};
        case PropertyId::DIVDIFF_POWER: return {0.25, 0.5, 0.75};
        case PropertyId::EQ7_IDENTITY:
            return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        case PropertyId::EQ8_IDENTITY:
            return {1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9};
        default: return {};
    }
}

inline void check_alpha_grid(PropertyId p, std::span<const double> grid)
{
    const auto fail = [&](const char* msg) { throw ConfigError(msg); };
    for (double a : grid) {
        switch (p) {
            case PropertyId::RENYI:
            case PropertyId::QUANTUM_RENYI:
                if (!(a >= 0.0 && a <= 2.0) || a == 1.0)
                    fail("alpha grid must lie in [0,2] excluding 1");
                break;
            case PropertyId::POWER_SUM_DIRECTION:
                if (!((a > 0.0 && a < 1.0) || (a > 1.0 && a < 2.0)))
                    fail("alpha grid must lie in (0,1) or (1,2)");
                break;
            case PropertyId::DIVDIFF_POWER:
            case PropertyId::EQ7_IDENTITY:
                if (!(a > 0.0 && a < 1.0)) fail("alpha grid must lie in (0,1)");
                break;
            case PropertyId::EQ8_IDENTITY:
                if (!(a > 1.0 && a < 2.0)) fail("alpha grid must lie in (1,2)");
                break;
            default: fail("this property takes no alpha grid");
        }
    }
}

inline PositiveVector random_simplex_point(std::uint64_t key, std::size_t n)
{
    SplitMix64 rng(key);
    std::vector<double> e(n);
    double s = 0.0;
    for (double& v : e) {
        v = rng.log_uniform(0.1, 10.0);
        s += v;
    }
    for (double& v : e) v /= s;
    return PositiveVector{std::move(e)};
}

inline constexpr double kMonotoneTol = 1e-8;   // uniform margin tolerance
inline constexpr double kSchurTol = 1e-10;     // Schur-concavity margin
inline constexpr double kGenFuncTol = 1e-10;   // generating-function margin
inline constexpr double kIdentityTol = 1e-6;   // integral identities
inline constexpr double kShannonLimitTol = 1e-5;
inline constexpr double kCrossCheckTol = 1e-7; // closed vs integral Q

} // namespace detail

inline const std::vector<double>& identity_s_grid()
{
    static const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 10.0};
    return grid;
}

/// Run one seeded verification batch and return its report. Deterministic
/// for a fixed configuration except for wall_time_ms.
[[nodiscard]] inline VerificationReport run_property(const VerifyConfig& cfg)
{
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    VerificationReport rep;
    rep.property = to_string(cfg.property);
    rep.seed = cfg.seed;
    rep.n = cfg.n;

    std::vector<double> alphas = cfg.alpha_grid.empty()
                                     ? detail::default_alpha_grid(cfg.property)
                                     : cfg.alpha_grid;
    if (!cfg.alpha_grid.empty()) detail::check_alpha_grid(cfg.property, alphas);

    const auto need_n = [&](std::size_t lo) {
        if (cfg.n < lo)
            throw ConfigError(std::string(rep.property) + " needs n >= " +
                              std::to_string(lo));
    };

    switch (cfg.property) {
        case PropertyId::SSLI: {
            need_n(2);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PairSample ps =
                        draw_pair(key, cfg.n, PairConstraint::FullStrict, cfg.shrink);
                    if (ps.status != SampleStatus::Accepted) return std::nullopt;
                    const double lx = sum_sq_logs(ps.pair->x);
                    const double ly = sum_sq_logs(ps.pair->y);
                    return detail::TrialResult{
                        detail::norm_margin(ly, lx),
                        detail::witness_pair(ps.pair->x, ps.pair->y)};
                });
            break;
        }
        case PropertyId::RENYI: {
            need_n(3);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PairSample ps = draw_pair(key, cfg.n,
                                              PairConstraint::SimplexStrict,
                                              cfg.shrink);
                    if (ps.status != SampleStatus::Accepted) return std::nullopt;
                    double margin = std::numeric_limits<double>::infinity();
                    for (double a : alphas) {
                        const double hx = renyi_entropy(ps.pair->x, RenyiOrder(a));
                        const double hy = renyi_entropy(ps.pair->y, RenyiOrder(a));
                        margin = std::min(margin, detail::norm_margin(hy, hx));
                    }
                    const double sx = shannon_entropy(ps.pair->x);
                    const double sy = shannon_entropy(ps.pair->y);
                    margin = std::min(margin, detail::norm_margin(sy, sx));
                    return detail::TrialResult{
                        margin, detail::witness_pair(ps.pair->x, ps.pair->y)};
                });
            break;
        }
        case PropertyId::SHANNON: {
            need_n(2);
            detail::run_sampled_batch(
                rep, cfg.trials, 0.0,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PositiveVector x = detail::random_simplex_point(key, cfg.n);
                    const double h = shannon_entropy(x);
                    const double lo = renyi_entropy(x, RenyiOrder(1.0 - 1e-6));
                    const double hi = renyi_entropy(x, RenyiOrder(1.0 + 1e-6));
                    const double dev =
                        std::max(std::fabs(h - lo), std::fabs(h - hi));
                    return detail::TrialResult{
                        detail::kShannonLimitTol - dev,
                        "{\"x\":" + detail::json_vec(x.entries()) + "}"};
                });
            break;
        }
        case PropertyId::POWER_SUM_DIRECTION: {
            need_n(3);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PairSample ps = draw_pair(key, cfg.n,
                                              PairConstraint::SimplexStrict,
                                              cfg.shrink);
                    if (ps.status != SampleStatus::Accepted) return std::nullopt;
                    double margin = std::numeric_limits<double>::infinity();
                    for (double a : alphas) {
                        const double px = power_sum(ps.pair->x, a);
                        const double py = power_sum(ps.pair->y, a);
                        // direction flips across alpha = 1
                        const double m = a < 1.0 ? detail::norm_margin(py, px)
                                                 : detail::norm_margin(px, py);
                        margin = std::min(margin, m);
                    }
                    return detail::TrialResult{
                        margin, detail::witness_pair(ps.pair->x, ps.pair->y)};
                });
            break;
        }
        case PropertyId::SUBENTROPY: {
            need_n(2);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PairSample ps = draw_pair(key, cfg.n,
                                              PairConstraint::SimplexWeak,
                                              cfg.shrink);
                    if (ps.status != SampleStatus::Accepted) return std::nullopt;
                    const double qx = subentropy_integral(ps.pair->x);
                    const double qy = subentropy_integral(ps.pair->y);
                    return detail::TrialResult{
                        detail::norm_margin(qy, qx),
                        detail::witness_pair(ps.pair->x, ps.pair->y)};
                });
            break;
        }
        case PropertyId::DIVDIFF_POWER: {
            need_n(2);
            // First pass: collect per-trial signed normalized differences,
            // then orient by the batch-wide consensus and score.
            struct Outcome {
                double lo, hi; // min and max over the alpha grid
                std::string witness;
            };
            std::vector<Outcome> outcomes;
            long index = 0;
            const long max_attempts = 1000 * std::max(cfg.trials, 1L) + 1000;
            while (static_cast<long>(outcomes.size()) < cfg.trials) {
                if (index >= max_attempts)
                    throw ConfigError("sampler acceptance rate too low");
                const std::uint64_t key =
                    substream_key(cfg.seed, static_cast<std::uint64_t>(index++));
                PairSample ps =
                    draw_pair(key, cfg.n, PairConstraint::FullStrict, cfg.shrink);
                if (ps.status != SampleStatus::Accepted) {
                    ++rep.rejections;
                    continue;
                }
                double lo = std::numeric_limits<double>::infinity();
                double hi = -lo;
                bool degenerate = false;
                for (double a : alphas) {
                    try {
                        const double dx = divided_difference_power(ps.pair->x, a);
                        const double dy = divided_difference_power(ps.pair->y, a);
                        const double d = detail::norm_margin(dx, dy);
                        lo = std::min(lo, d);
                        hi = std::max(hi, d);
                    } catch (const DegenerateSpectrum&) {
                        degenerate = true;
                        break;
                    }
                }
                if (degenerate) {
                    ++rep.rejections;
                    continue;
                }
                outcomes.push_back(
                    {lo, hi, detail::witness_pair(ps.pair->x, ps.pair->y)});
            }
            rep.trials = index;

            const double band = detail::kMonotoneTol;
            long support_ge = 0; // DD(x) >= DD(y)
            long support_le = 0;
            bool internal_mix = false;
            for (const Outcome& o : outcomes) {
                const bool pos = o.hi > band;
                const bool neg = o.lo < -band;
                if (pos && neg) internal_mix = true;
                else if (pos) ++support_ge;
                else if (neg) ++support_le;
            }
            const bool ge = support_ge >= support_le;
            if (internal_mix || (support_ge > 0 && support_le > 0))
                rep.direction = "mixed";
            else
                rep.direction = ge ? "x_ge_y" : "x_le_y";

            double worst = std::numeric_limits<double>::infinity();
            for (const Outcome& o : outcomes) {
                const double oriented = ge ? o.lo : -o.hi;
                if (oriented < worst) {
                    worst = oriented;
                    rep.worst_witness_json = o.witness;
                }
                if (oriented >= -band) ++rep.passes;
            }
            rep.worst_margin = outcomes.empty() ? 0.0 : worst;
            break;
        }
        case PropertyId::SCHUR_CONCAVE: {
            need_n(2);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kSchurTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    MajorizationPair mp = majorization_pair(key, cfg.n);
                    const ESignature ex = esym_all(mp.x);
                    const ESignature ey = esym_all(mp.y);
                    double margin = std::numeric_limits<double>::infinity();
                    for (std::size_t k = 1; k <= cfg.n; ++k)
                        margin = std::min(margin,
                                          detail::norm_margin(ex.e(k), ey.e(k)));
                    return detail::TrialResult{margin,
                                               detail::witness_pair(mp.x, mp.y)};
                });
            break;
        }
        case PropertyId::GEN_FUNC: {
            need_n(2);
            const std::vector<double> grid = log_spaced_grid(1e-3, 1e3, 32);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kGenFuncTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PairSample ps =
                        draw_pair(key, cfg.n, PairConstraint::FullStrict, cfg.shrink);
                    if (ps.status != SampleStatus::Accepted) return std::nullopt;
                    const double m =
                        verify_generating_inequality(ps.pair->x, ps.pair->y, grid);
                    return detail::TrialResult{
                        m, detail::witness_pair(ps.pair->x, ps.pair->y)};
                });
            break;
        }
        case PropertyId::LOGDET: {
            need_n(2);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    auto pr = spd_pair(key, cfg.n, PairConstraint::WeakOnly,
                                       cfg.shrink);
                    if (!pr) return std::nullopt;
                    const double la = logdet_I_plus(pr->a);
                    const double lb = logdet_I_plus(pr->b);
                    return detail::TrialResult{
                        detail::norm_margin(lb, la),
                        "{\"a\":" + detail::json_matrix(pr->a.dense()) +
                            ",\"b\":" + detail::json_matrix(pr->b.dense()) + "}"};
                });
            break;
        }
        case PropertyId::RIEMANNIAN:
        case PropertyId::SDIV: {
            need_n(2);
            const bool riem = cfg.property == PropertyId::RIEMANNIAN;
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    auto tr = matrix_triple(key, cfg.n, PairConstraint::FullStrict,
                                            cfg.shrink);
                    if (!tr) return std::nullopt;
                    const double da = riem ? riemannian_distance(tr->a, tr->c)
                                           : s_divergence(tr->a, tr->c);
                    const double db = riem ? riemannian_distance(tr->b, tr->c)
                                           : s_divergence(tr->b, tr->c);
                    return detail::TrialResult{
                        detail::norm_margin(db, da),
                        "{\"a\":" + detail::json_matrix(tr->a.dense()) +
                            ",\"b\":" + detail::json_matrix(tr->b.dense()) +
                            ",\"c\":" + detail::json_matrix(tr->c.dense()) + "}"};
                });
            break;
        }
        case PropertyId::QUANTUM_RENYI: {
            need_n(3);
            detail::run_sampled_batch(
                rep, cfg.trials, -detail::kMonotoneTol,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    auto pr = spd_pair(key, cfg.n, PairConstraint::SimplexStrict,
                                       cfg.shrink);
                    if (!pr) return std::nullopt;
                    double margin = std::numeric_limits<double>::infinity();
                    double worst_alpha = alphas.front();
                    for (double a : alphas) {
                        const double hx = quantum_renyi(pr->a, RenyiOrder(a));
                        const double hy = quantum_renyi(pr->b, RenyiOrder(a));
                        const double m = detail::norm_margin(hy, hx);
                        if (m < margin) {
                            margin = m;
                            worst_alpha = a;
                        }
                    }
                    return detail::TrialResult{
                        margin,
                        "{\"a\":" + detail::json_matrix(pr->a.dense()) +
                            ",\"b\":" + detail::json_matrix(pr->b.dense()) +
                            ",\"alpha\":" + detail::fmt17(worst_alpha) + "}"};
                });
            break;
        }
        case PropertyId::EQ7_IDENTITY:
        case PropertyId::EQ8_IDENTITY: {
            std::vector<detail::TrialResult> points;
            for (double a : alphas) {
                const IntegralRepresentation rep_a =
                    cfg.property == PropertyId::EQ7_IDENTITY
                        ? IntegralRepresentation::power_kernel(a)
                        : IntegralRepresentation::compensated_power_kernel(a);
                for (double s : identity_s_grid()) {
                    const double got = eval_integral_identity(rep_a, s);
                    const double want = rep_a.closed_form(s);
                    const double tol = std::max(detail::kIdentityTol,
                                                detail::kIdentityTol *
                                                    std::fabs(want));
                    points.push_back(
                        {tol - std::fabs(got - want),
                         "{\"alpha\":" + detail::fmt17(a) +
                             ",\"s\":" + detail::fmt17(s) + "}"});
                }
            }
            detail::run_grid_batch(rep, points);
            break;
        }
        case PropertyId::EQ10_IDENTITY: {
            const IntegralRepresentation rep10 =
                IntegralRepresentation::squared_log_kernel();
            std::vector<detail::TrialResult> points;
            for (double s : identity_s_grid()) {
                const double got = eval_integral_identity(rep10, s);
                const double want = rep10.closed_form(s);
                const double tol = std::max(detail::kIdentityTol,
                                            detail::kIdentityTol * std::fabs(want));
                points.push_back({tol - std::fabs(got - want),
                                  "{\"s\":" + detail::fmt17(s) + "}"});
            }
            detail::run_grid_batch(rep, points);
            break;
        }
        case PropertyId::EQ14_CROSSCHECK: {
            need_n(2);
            detail::run_sampled_batch(
                rep, cfg.trials, 0.0,
                [&](std::uint64_t key) -> std::optional<detail::TrialResult> {
                    PositiveVector x = detail::random_simplex_point(key, cfg.n);
                    double closed = 0.0;
                    try {
                        closed = subentropy_closed(x);
                    } catch (const DegenerateSpectrum&) {
                        return std::nullopt; // confluent draw; resample
                    }
                    const double integral = subentropy_integral(x);
                    return detail::TrialResult{
                        detail::kCrossCheckTol - std::fabs(closed - integral),
                        "{\"x\":" + detail::json_vec(x.entries()) + "}"};
                });
            break;
        }
    }

    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           clock::now() - t0)
                           .count();
    return rep;
}

/// Report JSON, snake_case keys, numeric fields at 17 significant digits.
/// Byte-stable for identical runs except for the wall_time_ms field.
[[nodiscard]] inline std::string report_to_json(const VerificationReport& r)
{
    std::string s = "{\n";
    s += "  \"property\": \"" + r.property + "\",\n";
    s += "  \"seed\": " + std::to_string(r.seed) + ",\n";
    s += "  \"n\": " + std::to_string(r.n) + ",\n";
    s += "  \"trials\": " + std::to_string(r.trials) + ",\n";
    s += "  \"passes\": " + std::to_string(r.passes) + ",\n";
    s += "  \"rejections\": " + std::to_string(r.rejections) + ",\n";
    s += "  \"worst_margin\": " + detail::fmt17(r.worst_margin) + ",\n";
    s += "  \"worst_witness\": " + r.worst_witness_json + ",\n";
    s += "  \"wall_time_ms\": " + std::to_string(r.wall_time_ms) + ",\n";
    s += "  \"library_version\": \"" + r.library_version + "\",\n";
    s += "  \"direction\": \"" + r.direction + "\"\n";
    s += "}\n";
    return s;
}

[[nodiscard]] inline std::string summary_line(const VerificationReport& r)
{
    std::string s = r.property + " n=" + std::to_string(r.n) +
                    " seed=" + std::to_string(r.seed) +
                    " trials=" + std::to_string(r.trials) +
                    " evaluated=" + std::to_string(r.evaluated()) +
                    " passes=" + std::to_string(r.passes) +
                    " failures=" + std::to_string(r.failures()) +
                    " rejections=" + std::to_string(r.rejections) +
                    " worst_margin=" + detail::fmt17(r.worst_margin);
    if (r.direction != "not_applicable") s += " direction=" + r.direction;
    return s;
}

} // namespace esymdom
