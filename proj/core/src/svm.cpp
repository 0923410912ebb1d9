#include <algorithm>
#include <cmath>
#include <limits>

#include "hp_util.hpp"
#include "manazel/classifiers.hpp"

namespace manazel {

namespace {

// Feasible range for the pair step t, where alpha_i -> alpha_i - y_i*t and
// alpha_j -> alpha_j + y_j*t stay inside [0, C].
void step_bounds(double ai, double aj, double yi, double yj, double c, double& lo,
                 double& hi) {
    // alpha_j + yj*t in [0, C]
    if (yj > 0.0) {
        lo = -aj;
        hi = c - aj;
    } else {
        lo = aj - c;
        hi = aj;
    }
    // alpha_i - yi*t in [0, C]
    if (yi > 0.0) {
        lo = std::max(lo, ai - c);
        hi = std::min(hi, ai);
    } else {
        lo = std::max(lo, -ai);
        hi = std::min(hi, c - ai);
    }
}

}  // namespace

LinearSvm::LinearSvm(const HyperParams& hp) {
    validate_hyperparams(Family::Svm, hp);
    if (const auto c = detail::hp_get(hp, "C")) {
        c_ = detail::parse_positive_double(*c, "C");
        c_str_ = *c;
    }
    if (const auto k = detail::hp_get(hp, "kernel")) kernel_ = *k;
}

HyperParams LinearSvm::hyperparams() const {
    return {{"C", c_str_}, {"kernel", kernel_}};
}

double LinearSvm::objective(const Dataset& d, double c,
                            const std::array<double, 3>& params) {
    double obj = 0.5 * (params[0] * params[0] + params[1] * params[1]);
    for (const Observation& o : d.rows) {
        const double y = o.output == 1 ? 1.0 : -1.0;
        const double margin = 1.0 - y * (params[0] * o.arcv + params[1] * o.w + params[2]);
        obj += c * std::max(0.0, margin);
    }
    return obj;
}

// SMO on the dual with maximal-violating-pair selection. The pair update is
// parameterized by the step t along the equality constraint, which handles
// the degenerate eta = 0 case (duplicate points) uniformly.
void LinearSvm::fit(const Dataset& d) {
    if (d.empty()) throw EmptyInputError("cannot fit on an empty dataset");
    bool has0 = false, has1 = false;
    for (const Observation& o : d.rows) (o.output == 1 ? has1 : has0) = true;
    if (!has0 || !has1) throw InputError("training requires both classes present");

    const std::size_t n = d.size();
    std::vector<std::array<double, 2>> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = {d.rows[i].arcv, d.rows[i].w};
        y[i] = d.rows[i].output == 1 ? 1.0 : -1.0;
    }
    const auto dot = [&x](std::size_t a, std::size_t b) {
        return x[a][0] * x[b][0] + x[a][1] * x[b][1];
    };

    std::vector<double> alpha(n, 0.0);
    // grad_i = d(dual)/d(alpha_i) = y_i * sum_j alpha_j y_j K_ij - 1.
    std::vector<double> grad(n, -1.0);

    const double tol = 1e-6;
    const long max_updates = 500000;
    double gap = std::numeric_limits<double>::infinity();

    for (long update = 0;; ++update) {
        // Maximal violating pair over the feasible ascent/descent sets.
        double up_best = -std::numeric_limits<double>::infinity();
        double low_best = std::numeric_limits<double>::infinity();
        std::size_t i = n, j = n;
        for (std::size_t t = 0; t < n; ++t) {
            const double v = -y[t] * grad[t];
            const bool in_up = (y[t] > 0.0 && alpha[t] < c_) || (y[t] < 0.0 && alpha[t] > 0.0);
            const bool in_low = (y[t] > 0.0 && alpha[t] > 0.0) || (y[t] < 0.0 && alpha[t] < c_);
            if (in_up && v > up_best) {
                up_best = v;
                i = t;
            }
            if (in_low && v < low_best) {
                low_best = v;
                j = t;
            }
        }
        gap = up_best - low_best;
        if (i == n || j == n || gap < tol) break;
        if (update >= max_updates) {
            throw ConvergenceError("svm working-set optimization did not converge", gap);
        }

        // Minimize the dual along alpha_i -= y_i t, alpha_j += y_j t.
        const double g_t = y[j] * grad[j] - y[i] * grad[i];
        const double eta = dot(i, i) + dot(j, j) - 2.0 * dot(i, j);
        double lo, hi;
        step_bounds(alpha[i], alpha[j], y[i], y[j], c_, lo, hi);
        double t_step;
        if (eta > 1e-12) {
            t_step = std::clamp(-g_t / eta, lo, hi);
        } else {
            t_step = g_t < 0.0 ? hi : lo;  // linear segment: walk downhill
        }
        if (t_step == 0.0) break;

        const double dai = -y[i] * t_step;
        const double daj = y[j] * t_step;
        alpha[i] += dai;
        alpha[j] += daj;
        for (std::size_t s = 0; s < n; ++s) {
            grad[s] += y[s] * (dai * y[i] * dot(i, s) + daj * y[j] * dot(j, s));
        }
    }

    w_[0] = 0.0;
    w_[1] = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        w_[0] += alpha[s] * y[s] * x[s][0];
        w_[1] += alpha[s] * y[s] * x[s][1];
    }

    // Intercept from free support vectors; otherwise the midpoint of the
    // KKT-feasible interval.
    const double eps = 1e-8 * c_;
    double b_sum = 0.0;
    std::size_t b_count = 0;
    double b_lo = -std::numeric_limits<double>::infinity();
    double b_hi = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n; ++s) {
        const double bs = y[s] - (w_[0] * x[s][0] + w_[1] * x[s][1]);
        if (alpha[s] > eps && alpha[s] < c_ - eps) {
            b_sum += bs;
            ++b_count;
        } else if (alpha[s] <= eps) {
            // margin constraint y(wx+b) >= 1
            if (y[s] > 0.0) b_lo = std::max(b_lo, bs);
            else b_hi = std::min(b_hi, bs);
        } else {
            // at the box bound: y(wx+b) <= 1
            if (y[s] > 0.0) b_hi = std::min(b_hi, bs);
            else b_lo = std::max(b_lo, bs);
        }
    }
    if (b_count > 0) {
        b_ = b_sum / static_cast<double>(b_count);
    } else if (std::isfinite(b_lo) && std::isfinite(b_hi)) {
        b_ = 0.5 * (b_lo + b_hi);
    } else if (std::isfinite(b_lo)) {
        b_ = b_lo;
    } else if (std::isfinite(b_hi)) {
        b_ = b_hi;
    } else {
        b_ = 0.0;
    }
}

double LinearSvm::decision(double arcv, double w) const {
    return w_[0] * arcv + w_[1] * w + b_;
}

int LinearSvm::predict_one(double arcv, double w) const {
    return decision(arcv, w) > 0.0 ? 1 : 0;  // sign 0 falls to class 0
}

void LinearSvm::set_params(const std::array<double, 3>& p) {
    w_[0] = p[0];
    w_[1] = p[1];
    b_ = p[2];
}

}  // namespace manazel
