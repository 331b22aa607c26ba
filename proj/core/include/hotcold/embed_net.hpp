#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hotcold/featurize.hpp"
#include "hotcold/optim.hpp"

namespace hotcold {

double hard_sigmoid(double x);
double sigmoid(double x);

/// Binary cross-entropy with the probability clamped to [1e-7, 1 - 1e-7].
double bce_loss(double p, int label);

struct NetConfig {
    std::size_t embed_dim = 30;
    std::size_t text_dim = 30;
    std::size_t hidden1 = 128;
    std::size_t hidden2 = 64;
    std::size_t text_buckets = kTextBuckets;
    /// false switches to the ablation wiring: one-hot categorical inputs fed
    /// straight into the first dense layer, no embedding tables.
    bool use_embeddings = true;
};

/// Feed-forward classifier over mixed categorical / text / numeric inputs.
/// Categorical variables go through per-variable embedding tables (row 0 is
/// the OOV row), text goes through a linear projection of the normalized
/// bag-of-words, and everything is concatenated with the numerics before two
/// hard-sigmoid dense layers and a sigmoid output unit.
class EmbeddingNet {
public:
    struct Segment {
        std::string name;
        std::vector<std::size_t> shape;
        std::size_t offset = 0;
        std::size_t size = 0;
    };

    /// Activation snapshot used by backward and by gradient diagnostics.
    struct ForwardTrace {
        std::vector<double> input;
        std::vector<double> pre1, act1;
        std::vector<double> pre2, act2;
        double pre_out = 0.0;
        double prob = 0.0;
    };

    EmbeddingNet(std::vector<std::size_t> cat_table_sizes, NetConfig config, std::uint64_t seed);
    EmbeddingNet(const VocabularySet& vocab, NetConfig config, std::uint64_t seed);

    double forward(const FeatureVector& fv) const;
    void forward_trace(const FeatureVector& fv, ForwardTrace& trace) const;

    /// Accumulates d(bce_loss)/d(params) for one example into `grad_accum`
    /// (same layout as params()) and returns the example loss. Only embedding
    /// and text-projection rows touched by the example receive gradient.
    double backward(const FeatureVector& fv, int label, std::span<double> grad_accum) const;

    std::span<double> params() { return params_; }
    std::span<const double> params() const { return params_; }
    std::span<double> segment_span(const std::string& name);

    const std::vector<Segment>& segments() const { return segments_; }
    const NetConfig& config() const { return config_; }
    const std::vector<std::size_t>& cat_table_sizes() const { return cat_sizes_; }
    std::size_t input_dim() const { return input_dim_; }

private:
    void build_layout();
    void init_params(std::uint64_t seed);
    void assemble_input(const FeatureVector& fv, std::vector<double>& x) const;

    NetConfig config_;
    std::vector<std::size_t> cat_sizes_;
    std::size_t input_dim_ = 0;
    std::vector<Segment> segments_;
    std::vector<std::size_t> embed_offsets_;  // per categorical variable
    std::size_t text_offset_ = 0;
    std::size_t w1_ = 0, b1_ = 0, w2_ = 0, b2_ = 0, w3_ = 0, b3_ = 0;
    std::vector<double> params_;
};

struct TrainOptions {
    std::size_t batch_size = 64;
    std::size_t epochs = 50;
    double min_delta = 1e-5;   // minimum epoch-loss improvement
    std::size_t patience = 10; // epochs without improvement before stopping
    bool early_stop = true;
    std::uint64_t seed = 0;
};

struct TrainTrace {
    /// epoch_loss[0] is the pre-training full-data loss; entry k >= 1 is the
    /// mean batch loss of epoch k.
    std::vector<double> epoch_loss;
    std::size_t epochs_run = 0;
    bool stopped_early = false;
};

/// Seeded-shuffle mini-batch training with mean-gradient steps.
/// Requires both classes present.
TrainTrace train_nn(EmbeddingNet& net, const std::vector<FeatureVector>& rows,
                    const std::vector<int>& labels, Optimizer& optimizer,
                    const TrainOptions& options);

} // namespace hotcold
