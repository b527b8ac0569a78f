// Copyright 2026 The qutil Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qutil/profiler/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <Eigen/Dense>

#include "qutil/error.hpp"

namespace qutil::prof {

namespace {

struct Line {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
    double ss_res = 0.0;
};

// Least-squares y = a + b x with R^2 = 1 - SS_res / SS_tot (SS_tot > 0).
Line fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double m = double(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    Line l;
    l.slope = sxy / sxx;
    l.intercept = my - l.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (l.intercept + l.slope * x[i]);
        ss_res += r * r;
    }
    l.r_squared = syy > 0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
    l.ss_res = ss_res;
    return l;
}

// 1 - RMSE of the ln(count) residuals with k fitted coefficients. Log
// residuals are relative errors, so the margin reads as a relative-error gap.
double score_of(double ss_res, std::size_t m, std::size_t k) {
    return 1.0 - std::sqrt(ss_res / double(m - k));
}

// Highest polynomial degree tried by the ladder fits.
constexpr int kMaxDegree = 8;

struct PolyFit {
    bool feasible = false;
    double score = std::numeric_limits<double>::quiet_NaN();
    double ss_res = 0.0;  // over ln(count)
    Eigen::VectorXd coef;
};

// Least squares in linear space on the columns n^p, p in `powers`
// (ascending); the last coefficient leads. Infeasible when the leading
// coefficient is negative, a prediction is non-positive, or no degree of
// freedom is left. Scored on ln(count) residuals.
PolyFit fit_poly(const std::vector<double>& n, const std::vector<double>& y, const std::vector<int>& powers) {
    const std::size_t m = n.size();
    const auto k = Eigen::Index(powers.size());
    PolyFit f;
    if (std::size_t(k) >= m) return f;
    Eigen::MatrixXd x{Eigen::Index(m), k};
    Eigen::VectorXd rhs{Eigen::Index(m)};
    for (std::size_t i = 0; i < m; ++i) {
        for (Eigen::Index c = 0; c < k; ++c) x(Eigen::Index(i), c) = std::pow(n[i], powers[std::size_t(c)]);
        rhs(Eigen::Index(i)) = y[i];
    }
    // Unit-norm columns keep high powers well conditioned.
    const Eigen::VectorXd norms = x.colwise().norm();
    f.coef = (x * norms.cwiseInverse().asDiagonal()).colPivHouseholderQr().solve(rhs).cwiseQuotient(norms);
    const Eigen::VectorXd pred = x * f.coef;
    f.feasible = f.coef(k - 1) >= 0 || powers.back() == 0;
    for (std::size_t i = 0; i < m && f.feasible; ++i) {
        f.feasible = pred(Eigen::Index(i)) > 0;
        if (f.feasible) f.ss_res += std::pow(std::log(y[i]) - std::log(pred(Eigen::Index(i))), 2);
    }
    if (f.feasible) f.score = score_of(f.ss_res, m, std::size_t(k));
    return f;
}

// c + a n^d.
PolyFit fit_offset_power(const std::vector<double>& n, const std::vector<double>& y, int d) {
    return fit_poly(n, y, d == 0 ? std::vector<int>{0} : std::vector<int>{0, d});
}

// Degree-d ladder model: c, c + a n, then c + b n + a n^d for d >= 2.
PolyFit fit_ladder(const std::vector<double>& n, const std::vector<double>& y, int d) {
    return d <= 1 ? fit_offset_power(n, y, d) : fit_poly(n, y, {0, 1, d});
}

}  // namespace

ScalingFit fit_scaling(std::vector<Sample> samples, std::string variable) {
    std::set<double> sizes;
    for (const auto& s : samples) {
        if (!(s.size > 0) || !std::isfinite(s.size)) throw InvalidInput("sizes must be positive");
        if (!(s.count > 0) || !std::isfinite(s.count)) throw InvalidInput("counts must be positive");
        sizes.insert(s.size);
    }
    if (sizes.size() < 4) throw InvalidInput("scaling fits need at least 4 distinct sizes");
    std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.size < b.size; });

    ScalingFit fit;
    fit.variable = std::move(variable);
    fit.samples = samples;
    const std::size_t m = samples.size();
    std::vector<double> n(m), ln_n(m), ln_y(m);
    double lo = samples[0].count, hi = lo, mean_ln_y = 0;
    for (std::size_t i = 0; i < m; ++i) {
        n[i] = samples[i].size;
        ln_n[i] = std::log(samples[i].size);
        ln_y[i] = std::log(samples[i].count);
        mean_ln_y += ln_y[i] / double(m);
        lo = std::min(lo, samples[i].count);
        hi = std::max(hi, samples[i].count);
    }

    const bool flat = hi - lo <= 1e-9 * hi;
    double ss_const = 0;
    for (double v : ln_y) ss_const += (v - mean_ln_y) * (v - mean_ln_y);
    fit.candidates.push_back({"constant", flat ? 1.0 : 0.0, score_of(ss_const, m, 1), {mean_ln_y}});
    if (flat) {
        fit.best_class = arl::Growth::constant();
        fit.best_r_squared = 1.0;
        return fit;
    }
    const Line power = fit_line(ln_n, ln_y);
    const Line expo = fit_line(n, ln_y);
    const FitCandidate pc{"power", power.r_squared, score_of(power.ss_res, m, 2), {power.intercept, power.slope}};
    const FitCandidate ec{"exponential", expo.r_squared, score_of(expo.ss_res, m, 2), {expo.intercept, expo.slope}};
    fit.candidates.push_back(pc);
    fit.candidates.push_back(ec);

    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = samples[i].count;

    // The exponential is compared with two-parameter polynomial models: the
    // power law, and c + a n^d, which additive terms do not bend.
    FitCandidate oc{"offset_power", 0.0, -std::numeric_limits<double>::infinity(), {}};
    for (int d = 1; d <= kMaxDegree; ++d) {
        const PolyFit f = fit_offset_power(n, y, d);
        if (f.feasible && f.score > oc.score) {
            oc.score = f.score;
            oc.r_squared = ss_const > 0 ? std::max(0.0, 1.0 - f.ss_res / ss_const) : 1.0;
            oc.coefficients = {f.coef(0), f.coef(1), double(d)};
        }
    }
    if (!oc.coefficients.empty()) fit.candidates.push_back(oc);
    if (ec.score > std::max(pc.score, oc.score) + kFitMargin && expo.slope > 0) {
        fit.best_class = arl::Growth::exponential();
        fit.best_r_squared = ec.r_squared;
        return fit;
    }

    // Start at degree 0; a higher degree must beat the current choice by
    // the margin.
    for (int d = 0; d <= kMaxDegree; ++d) fit.degree_scores.push_back(fit_ladder(n, y, d).score);
    int degree = 0;
    for (int d = 1; d <= kMaxDegree; ++d) {
        const double sc = fit.degree_scores[std::size_t(d)];
        if (!std::isnan(sc) && sc > fit.degree_scores[std::size_t(degree)] + kFitMargin) degree = d;
    }
    fit.best_class = arl::Growth::polynomial(degree);
    fit.best_r_squared = pc.r_squared;
    return fit;
}

namespace {

nlohmann::json degree_json(const std::vector<double>& scores) {
    nlohmann::json out = nlohmann::json::array();
    for (double v : scores) out.push_back(std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v));
    return out;
}

}  // namespace

nlohmann::json to_json(const ScalingFit& fit) {
    nlohmann::json samples = nlohmann::json::array(), candidates = nlohmann::json::array();
    for (const auto& s : fit.samples) samples.push_back({s.size, s.count});
    for (const auto& c : fit.candidates) {
        candidates.push_back(
            {{"model", c.model}, {"r_squared", c.r_squared}, {"score", c.score}, {"coefficients", c.coefficients}});
    }
    return {{"variable", fit.variable},
            {"samples", samples},
            {"best_class", arl::to_string(fit.best_class)},
            {"best_r_squared", fit.best_r_squared},
            {"degree_scores", degree_json(fit.degree_scores)},
            {"candidates", candidates}};
}

}  // namespace qutil::prof
