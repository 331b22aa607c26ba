#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hotcold {

/// Batch optimizer contract: `step` consumes the mean gradient over the
/// current batch and updates the parameter vector in place. Implementations
/// are pure state machines; identical (state, gradient) gives identical
/// output. A non-finite gradient coordinate aborts with TrainingError.
class Optimizer {
public:
    virtual ~Optimizer() = default;
    virtual void step(std::span<const double> grad, std::span<double> params) = 0;
    virtual const char* name() const = 0;
    virtual std::unique_ptr<Optimizer> fresh_clone() const = 0;
};

struct FtrlParams {
    double alpha = 0.1;   // > 0
    double beta = 1.0;    // >= 0
    double lambda1 = 0.0; // L1 strength, >= 0
    double lambda2 = 0.0; // optional L2, >= 0; 0 keeps the exact proximal form
};

/// FTRL-Proximal with per-coordinate adaptive rates, solved in closed form.
/// Accumulators: z (shifted gradient sum) and n (sum of squared gradients).
class FtrlOptimizer final : public Optimizer {
public:
    explicit FtrlOptimizer(FtrlParams p);

    void step(std::span<const double> grad, std::span<double> params) override;
    const char* name() const override { return "ftrl"; }
    std::unique_ptr<Optimizer> fresh_clone() const override;

    const std::vector<double>& z() const { return z_; }
    const std::vector<double>& n() const { return n_; }
    const FtrlParams& params() const { return params_; }

private:
    FtrlParams params_;
    std::vector<double> z_;
    std::vector<double> n_;
};

struct FobosParams {
    double learning_rate = 0.01;  // > 0
    double lambda1 = 0.0;         // L1 strength for the shrinkage step
};

/// Forward-backward splitting: gradient step, then L1 soft-threshold.
class FobosOptimizer final : public Optimizer {
public:
    explicit FobosOptimizer(FobosParams p);

    void step(std::span<const double> grad, std::span<double> params) override;
    const char* name() const override { return "fobos"; }
    std::unique_ptr<Optimizer> fresh_clone() const override;

private:
    FobosParams params_;
};

struct AdamParams {
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

class AdamOptimizer final : public Optimizer {
public:
    explicit AdamOptimizer(AdamParams p);

    void step(std::span<const double> grad, std::span<double> params) override;
    const char* name() const override { return "adam"; }
    std::unique_ptr<Optimizer> fresh_clone() const override;

private:
    AdamParams params_;
    std::vector<double> m_;
    std::vector<double> v_;
    std::int64_t t_ = 0;
};

struct RmspropParams {
    double learning_rate = 0.001;
    double decay = 0.9;
    double epsilon = 1e-8;
};

class RmspropOptimizer final : public Optimizer {
public:
    explicit RmspropOptimizer(RmspropParams p);

    void step(std::span<const double> grad, std::span<double> params) override;
    const char* name() const override { return "rmsprop"; }
    std::unique_ptr<Optimizer> fresh_clone() const override;

private:
    RmspropParams params_;
    std::vector<double> v_;
};

/// Named construction used by configs and the optimizer-comparison harness.
/// `name` is one of: ftrl, adam, rmsprop, fobos.
struct OptimizerSettings {
    std::string name = "ftrl";
    FtrlParams ftrl;
    AdamParams adam;
    RmspropParams rmsprop;
    FobosParams fobos;
};

std::unique_ptr<Optimizer> make_optimizer(const OptimizerSettings& settings);

} // namespace hotcold
