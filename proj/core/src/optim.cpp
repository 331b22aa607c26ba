#include "hotcold/optim.hpp"

#include <cmath>

#include "hotcold/error.hpp"

namespace hotcold {
namespace {

void check_sizes(std::span<const double> grad, std::span<double> params) {
    if (grad.size() != params.size())
        throw TrainingError("optimizer: gradient/parameter dimension mismatch (" +
                            std::to_string(grad.size()) + " vs " +
                            std::to_string(params.size()) + ")");
    for (std::size_t i = 0; i < grad.size(); ++i) {
        if (!std::isfinite(grad[i]))
            throw TrainingError("optimizer: non-finite gradient at coordinate " +
                                std::to_string(i));
    }
}

inline double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

} // namespace

FtrlOptimizer::FtrlOptimizer(FtrlParams p) : params_(p) {
    if (!(p.alpha > 0.0)) throw ValidationError("ftrl: alpha must be > 0");
    if (p.beta < 0.0 || p.lambda1 < 0.0 || p.lambda2 < 0.0)
        throw ValidationError("ftrl: beta, lambda1, lambda2 must be >= 0");
}

void FtrlOptimizer::step(std::span<const double> grad, std::span<double> params) {
    check_sizes(grad, params);
    if (z_.empty()) {
        z_.assign(params.size(), 0.0);
        n_.assign(params.size(), 0.0);
    } else if (z_.size() != params.size()) {
        throw TrainingError("ftrl: parameter dimension changed mid-run");
    }
    const double alpha = params_.alpha;
    const double beta = params_.beta;
    const double l1 = params_.lambda1;
    const double l2 = params_.lambda2;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grad[i];
        const double n_new = n_[i] + g * g;
        const double sigma = (std::sqrt(n_new) - std::sqrt(n_[i])) / alpha;
        z_[i] += g - sigma * params[i];
        n_[i] = n_new;
        if (std::fabs(z_[i]) <= l1) {
            params[i] = 0.0;
        } else {
            params[i] = -(z_[i] - sign(z_[i]) * l1) /
                        ((beta + std::sqrt(n_[i])) / alpha + l2);
        }
    }
}

std::unique_ptr<Optimizer> FtrlOptimizer::fresh_clone() const {
    return std::make_unique<FtrlOptimizer>(params_);
}

FobosOptimizer::FobosOptimizer(FobosParams p) : params_(p) {
    if (!(p.learning_rate > 0.0)) throw ValidationError("fobos: learning rate must be > 0");
    if (p.lambda1 < 0.0) throw ValidationError("fobos: lambda1 must be >= 0");
}

void FobosOptimizer::step(std::span<const double> grad, std::span<double> params) {
    check_sizes(grad, params);
    const double eta = params_.learning_rate;
    const double shrink = eta * params_.lambda1;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double w = params[i] - eta * grad[i];
        const double mag = std::fabs(w) - shrink;
        params[i] = mag > 0.0 ? sign(w) * mag : 0.0;
    }
}

std::unique_ptr<Optimizer> FobosOptimizer::fresh_clone() const {
    return std::make_unique<FobosOptimizer>(params_);
}

AdamOptimizer::AdamOptimizer(AdamParams p) : params_(p) {
    if (!(p.learning_rate > 0.0)) throw ValidationError("adam: learning rate must be > 0");
}

void AdamOptimizer::step(std::span<const double> grad, std::span<double> params) {
    check_sizes(grad, params);
    if (m_.empty()) {
        m_.assign(params.size(), 0.0);
        v_.assign(params.size(), 0.0);
    } else if (m_.size() != params.size()) {
        throw TrainingError("adam: parameter dimension changed mid-run");
    }
    ++t_;
    const double b1 = params_.beta1;
    const double b2 = params_.beta2;
    const double bc1 = 1.0 - std::pow(b1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(b2, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grad[i];
        m_[i] = b1 * m_[i] + (1.0 - b1) * g;
        v_[i] = b2 * v_[i] + (1.0 - b2) * g * g;
        const double m_hat = m_[i] / bc1;
        const double v_hat = v_[i] / bc2;
        params[i] -= params_.learning_rate * m_hat / (std::sqrt(v_hat) + params_.epsilon);
    }
}

std::unique_ptr<Optimizer> AdamOptimizer::fresh_clone() const {
    return std::make_unique<AdamOptimizer>(params_);
}

RmspropOptimizer::RmspropOptimizer(RmspropParams p) : params_(p) {
    if (!(p.learning_rate > 0.0)) throw ValidationError("rmsprop: learning rate must be > 0");
    if (!(p.decay > 0.0 && p.decay < 1.0)) throw ValidationError("rmsprop: decay must be in (0,1)");
}

void RmspropOptimizer::step(std::span<const double> grad, std::span<double> params) {
    check_sizes(grad, params);
    if (v_.empty()) {
        v_.assign(params.size(), 0.0);
    } else if (v_.size() != params.size()) {
        throw TrainingError("rmsprop: parameter dimension changed mid-run");
    }
    const double d = params_.decay;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grad[i];
        v_[i] = d * v_[i] + (1.0 - d) * g * g;
        params[i] -= params_.learning_rate * g / (std::sqrt(v_[i]) + params_.epsilon);
    }
}

std::unique_ptr<Optimizer> RmspropOptimizer::fresh_clone() const {
    return std::make_unique<RmspropOptimizer>(params_);
}

std::unique_ptr<Optimizer> make_optimizer(const OptimizerSettings& settings) {
    if (settings.name == "ftrl") return std::make_unique<FtrlOptimizer>(settings.ftrl);
    if (settings.name == "adam") return std::make_unique<AdamOptimizer>(settings.adam);
    if (settings.name == "rmsprop") return std::make_unique<RmspropOptimizer>(settings.rmsprop);
    if (settings.name == "fobos") return std::make_unique<FobosOptimizer>(settings.fobos);
    throw ValidationError("unknown optimizer '" + settings.name +
                          "' (expected ftrl, adam, rmsprop or fobos)");
}

} // namespace hotcold
