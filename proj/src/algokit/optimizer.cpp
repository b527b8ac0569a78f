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

#include "qutil/algokit/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::algo {

namespace {

constexpr double kPi = std::numbers::pi;

double norm(std::span<const double> x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double wrap(double a) {
    a = std::remainder(a, 2 * kPi);
    return a <= -kPi ? a + 2 * kPi : a;
}

class Tracker {
  public:
    Tracker(TrainingTrace& trace, std::vector<double> x, double fx) : trace_(trace), best_x_(std::move(x)), best_f_(fx) {
        push();
    }
    void offer(const std::vector<double>& x, double fx) {
        if (fx < best_f_) {
            best_f_ = fx;
            best_x_ = x;
        }
    }
    void push() { trace_.entries.push_back({best_f_, norm(best_x_)}); }
    double best() const { return best_f_; }
    const std::vector<double>& best_x() const { return best_x_; }

  private:
    TrainingTrace& trace_;
    std::vector<double> best_x_;
    double best_f_;
};

void check_finite(double v) {
    if (!std::isfinite(v)) throw NumericalError("objective returned a non-finite value");
}

TrainingTrace coordinate_descent(const Objective& f, std::vector<double> x, const OptimizerConfig& cfg,
                                 bool sinusoidal) {
    TrainingTrace trace;
    double fx = f(x);
    check_finite(fx);
    Tracker tracker(trace, x, fx);
    std::vector<double> step(x.size(), cfg.step);
    for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
        const double sweep_start = tracker.best();
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double xi = x[i];
            x[i] = xi + kPi / 2;
            const double fp = f(x);
            x[i] = xi - kPi / 2;
            const double fm = f(x);
            check_finite(fp);
            check_finite(fm);
            double candidate;
            if (sinusoidal) {
                candidate = wrap(xi - kPi / 2 - std::atan2(2 * fx - fp - fm, fp - fm));
            } else {
                const double g = (fp - fm) / 2;
                candidate = xi - step[i] * g;
            }
            x[i] = candidate;
            const double fc = f(x);
            check_finite(fc);
            if (fc <= fx) {
                fx = fc;
                if (!sinusoidal) step[i] = std::min(step[i] * 1.5, 2.0);
            } else {
                x[i] = xi;
                if (!sinusoidal) step[i] *= 0.5;
            }
            tracker.offer(x, fx);
        }
        tracker.push();
        if (sweep_start - tracker.best() < cfg.tolerance) {
            trace.converged = true;
            break;
        }
    }
    trace.final_params = tracker.best_x();
    return trace;
}

TrainingTrace spsa(const Objective& f, std::vector<double> x, const OptimizerConfig& cfg, std::uint64_t seed) {
    TrainingTrace trace;
    const double f0 = f(x);
    check_finite(f0);
    Tracker tracker(trace, x, f0);
    sim::Rng rng(seed);
    std::vector<double> delta(x.size()), xp(x.size()), xm(x.size());
    for (std::size_t k = 0; k < cfg.max_iterations; ++k) {
        const double ak = cfg.spsa_a / std::pow(double(k) + 1 + cfg.spsa_A, cfg.spsa_alpha);
        const double ck = cfg.spsa_c / std::pow(double(k) + 1, cfg.spsa_gamma);
        for (std::size_t i = 0; i < x.size(); ++i) {
            delta[i] = (rng.next() >> 63) ? 1.0 : -1.0;
            xp[i] = x[i] + ck * delta[i];
            xm[i] = x[i] - ck * delta[i];
        }
        const double fp = f(xp), fm = f(xm);
        check_finite(fp);
        check_finite(fm);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= ak * (fp - fm) / (2 * ck) * delta[i];
        const double fx = f(x);
        check_finite(fx);
        tracker.offer(x, fx);
        tracker.push();
    }
    trace.converged = true;
    trace.final_params = tracker.best_x();
    return trace;
}

}  // namespace

std::string_view to_string(OptimizerKind kind) {
    return kind == OptimizerKind::Spsa ? "spsa" : "coordinate_descent";
}

OptimizerKind parse_optimizer_kind(std::string_view name) {
    if (name == "spsa") return OptimizerKind::Spsa;
    if (name == "coordinate_descent" || name == "cd") return OptimizerKind::CoordinateDescent;
    throw InvalidInput("unknown optimizer '" + std::string(name) + "'");
}

std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed) {
    sim::Rng rng(seed);
    std::vector<double> x(count);
    for (auto& v : x) v = rng.uniform(-kPi, kPi);
    return x;
}

TrainingTrace minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& config,
                       std::uint64_t seed, bool sinusoidal) {
    if (config.kind == OptimizerKind::Spsa) return spsa(f, std::move(x0), config, seed);
    return coordinate_descent(f, std::move(x0), config, sinusoidal);
}

std::vector<double> parameter_shift_gradient(const Objective& f, std::span<const double> x) {
    std::vector<double> y(x.begin(), x.end()), g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] + kPi / 2;
        const double fp = f(y);
        y[i] = x[i] - kPi / 2;
        const double fm = f(y);
        y[i] = x[i];
        g[i] = (fp - fm) / 2;
    }
    return g;
}

}  // namespace qutil::algo
