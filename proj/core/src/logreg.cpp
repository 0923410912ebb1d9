#include <cmath>

#include "hp_util.hpp"
#include "manazel/classifiers.hpp"

namespace manazel {

namespace {

// log(1 + exp(-m)) without overflow for large |m|.
double log1p_exp_neg(double m) {
    if (m > 0.0) return std::log1p(std::exp(-m));
    return -m + std::log1p(std::exp(m));
}

// sigma(-m) = 1 / (1 + exp(m)), the per-sample loss derivative factor.
double sigma_neg(double m) {
    if (m > 0.0) {
        const double e = std::exp(-m);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(m));
}

// Solve the 3x3 system a*x = b in place (partial pivoting).
bool solve3(double a[3][3], double b[3], double x[3]) {
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::fabs(a[perm[r]][col]) > std::fabs(a[perm[pivot]][col])) pivot = r;
        }
        std::swap(perm[col], perm[pivot]);
        const double diag = a[perm[col]][col];
        if (std::fabs(diag) < 1e-300) return false;
        for (int r = col + 1; r < 3; ++r) {
            const double factor = a[perm[r]][col] / diag;
            for (int c = col; c < 3; ++c) a[perm[r]][c] -= factor * a[perm[col]][c];
            b[perm[r]] -= factor * b[perm[col]];
        }
    }
    for (int col = 2; col >= 0; --col) {
        double acc = b[perm[col]];
        for (int c = col + 1; c < 3; ++c) acc -= a[perm[col]][c] * x[c];
        x[col] = acc / a[perm[col]][col];
    }
    return true;
}

}  // namespace

LogisticRegression::LogisticRegression(const HyperParams& hp) {
    validate_hyperparams(Family::LogReg, hp);
    if (const auto c = detail::hp_get(hp, "C")) {
        c_ = detail::parse_positive_double(*c, "C");
        c_str_ = *c;
    }
    if (const auto s = detail::hp_get(hp, "solver")) solver_ = *s;
}

HyperParams LogisticRegression::hyperparams() const {
    return {{"C", c_str_}, {"solver", solver_}};
}

double LogisticRegression::objective(const Dataset& d, double c,
                                     const std::array<double, 3>& params) {
    double loss = 0.5 * (params[0] * params[0] + params[1] * params[1]);
    for (const Observation& o : d.rows) {
        const double y = o.output == 1 ? 1.0 : -1.0;
        const double m = y * (params[0] * o.arcv + params[1] * o.w + params[2]);
        loss += c * log1p_exp_neg(m);
    }
    return loss;
}

std::array<double, 3> LogisticRegression::gradient(const Dataset& d, double c,
                                                   const std::array<double, 3>& params) {
    std::array<double, 3> g = {params[0], params[1], 0.0};  // intercept unpenalized
    for (const Observation& o : d.rows) {
        const double y = o.output == 1 ? 1.0 : -1.0;
        const double m = y * (params[0] * o.arcv + params[1] * o.w + params[2]);
        const double s = sigma_neg(m);
        g[0] -= c * y * o.arcv * s;
        g[1] -= c * y * o.w * s;
        g[2] -= c * y * s;
    }
    return g;
}

void LogisticRegression::fit(const Dataset& d) {
    if (d.empty()) throw EmptyInputError("cannot fit on an empty dataset");
    bool has0 = false, has1 = false;
    for (const Observation& o : d.rows) (o.output == 1 ? has1 : has0) = true;
    if (!has0 || !has1) throw InputError("training requires both classes present");

    std::array<double, 3> p = {0.0, 0.0, 0.0};
    double f = objective(d, c_, p);
    const int max_iters = 10000;
    double gnorm = 0.0;

    for (int iter = 0; iter < max_iters; ++iter) {
        const std::array<double, 3> g = gradient(d, c_, p);
        gnorm = std::max({std::fabs(g[0]), std::fabs(g[1]), std::fabs(g[2])});
        if (gnorm < 1e-6) {
            w_[0] = p[0];
            w_[1] = p[1];
            b_ = p[2];
            return;
        }

        // Newton direction from the exact Hessian (penalty block + weighted
        // outer products of (arcv, w, 1)).
        double h[3][3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1e-12}};
        for (const Observation& o : d.rows) {
            const double y = o.output == 1 ? 1.0 : -1.0;
            const double m = y * (p[0] * o.arcv + p[1] * o.w + p[2]);
            const double s = sigma_neg(m);
            const double wgt = c_ * s * (1.0 - s);
            const double z[3] = {o.arcv, o.w, 1.0};
            for (int r = 0; r < 3; ++r)
                for (int col = 0; col < 3; ++col) h[r][col] += wgt * z[r] * z[col];
        }
        double rhs[3] = {-g[0], -g[1], -g[2]};
        double step[3];
        if (!solve3(h, rhs, step)) {
            step[0] = -g[0];
            step[1] = -g[1];
            step[2] = -g[2];
        }

        // Backtracking keeps each iteration a strict descent.
        const double slope = g[0] * step[0] + g[1] * step[1] + g[2] * step[2];
        double t = 1.0;
        std::array<double, 3> next = p;
        double f_next = f;
        for (int bt = 0; bt < 60; ++bt) {
            next = {p[0] + t * step[0], p[1] + t * step[1], p[2] + t * step[2]};
            f_next = objective(d, c_, next);
            if (f_next <= f + 1e-4 * t * slope) break;
            t *= 0.5;
        }
        p = next;
        f = f_next;
    }
    throw ConvergenceError("logistic regression did not reach gradient tolerance",
                           gnorm);
}

double LogisticRegression::decision(double arcv, double w) const {
    return w_[0] * arcv + w_[1] * w + b_;
}

double LogisticRegression::probability(double arcv, double w) const {
    const double m = decision(arcv, w);
    if (m >= 0.0) return 1.0 / (1.0 + std::exp(-m));
    const double e = std::exp(m);
    return e / (1.0 + e);
}

int LogisticRegression::predict_one(double arcv, double w) const {
    return probability(arcv, w) >= 0.5 ? 1 : 0;
}

void LogisticRegression::set_params(const std::array<double, 3>& p) {
    w_[0] = p[0];
    w_[1] = p[1];
    b_ = p[2];
}

}  // namespace manazel
