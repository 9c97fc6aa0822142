// Quick tour: build a dominance-ordered pair, look at its signatures, and
// watch the monotone functionals respect the order.

#include <cstdio>

#include "esymdom/esymdom.hpp"

using namespace esymdom;

int main()
{
    const PositiveVector x{{2.0, 0.5}};
    const PositiveVector y{{4.0, 0.25}};

    const ESignature ex = esym_all(x);
    const ESignature ey = esym_all(y);
    std::printf("e(x) = (%g, %g)   e(y) = (%g, %g)\n", ex.e(1), ex.e(2),
                ey.e(1), ey.e(2));

    const DominanceVerdict v = compare(x, y);
    std::printf("verdict: %s, %s\n", to_string(v.kind), to_string(v.direction));

    std::printf("sum of squared logs: %.12f <= %.12f\n", sum_sq_logs(x),
                sum_sq_logs(y));

    // the same order on matrices, in random bases
    const auto pair = spd_pair(7, 4, PairConstraint::WeakOnly);
    if (pair)
        std::printf("logdet(I+A) = %.12f <= logdet(I+B) = %.12f\n",
                    logdet_I_plus(pair->a), logdet_I_plus(pair->b));

    // a tiny seeded verification batch
    VerifyConfig cfg;
    cfg.property = PropertyId::SSLI;
    cfg.n = 5;
    cfg.trials = 500;
    cfg.seed = 2024;
    const VerificationReport rep = run_property(cfg);
    std::printf("%s\n", summary_line(rep).c_str());
    return rep.failures() == 0 ? 0 : 1;
}
