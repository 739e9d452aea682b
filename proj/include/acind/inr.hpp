#pragma once

#include <Eigen/Dense>
#include <vector>

#include "acind/grid.hpp"
#include "acind/rng.hpp"

namespace acind {

/// Frozen random Fourier feature map r(z) = [sin(Ez); cos(Ez)].
/// E is m x 2 with i.i.d. Normal(0, variance) entries and is never updated
/// by training; ||r(z)||^2 = m for every z.
struct FourierEmbedding {
    Eigen::MatrixXd frequencies;  // m x 2
    double variance = 16.0;

    int num_frequencies() const { return static_cast<int>(frequencies.rows()); }
    int embedded_dim() const { return 2 * num_frequencies(); }

    static FourierEmbedding create(int num_frequencies, double variance, Rng& rng);
};

/// r(z) for a single coordinate in [0,1)^2.
Eigen::VectorXd embed(const Eigen::Vector2d& z, const FourierEmbedding& emb);

/// r(z) for a batch of coordinates (2 x P) -> (2m x P).
Eigen::MatrixXd embed_batch(const Eigen::Matrix2Xd& coords, const FourierEmbedding& emb);

/// Coordinate batch for a full H x W traversal: pixel (i,j) -> (i/H, j/W),
/// ordered row-major to match ImageGrid.
Eigen::Matrix2Xd grid_coordinates(int height, int width);

enum class HeadMode { kScalar, kDistribution };

/// Sine MLP: u_{i+1} = sin(W_i u_i + b_i) for layers 1..L-1, then a plain
/// affine head. In distribution mode the head has K outputs which are pushed
/// through the modulated softmax; in scalar mode one output, used directly.
struct MlpParams {
    std::vector<Eigen::MatrixXd> weights;  // W_i: l_{i+1} x l_i
    std::vector<Eigen::VectorXd> biases;   // b_i: l_{i+1}
    HeadMode head_mode = HeadMode::kDistribution;
    double temperature = 0.06;  // T in (0,1), distribution mode only

    int num_layers() const { return static_cast<int>(weights.size()); }
    int input_dim() const { return static_cast<int>(weights.front().cols()); }
    int output_dim() const { return static_cast<int>(weights.back().rows()); }
    long num_parameters() const;
    void validate() const;
};

/// Weight init from the sine-network scheme: uniform on
/// (-sqrt(6/fan_in), sqrt(6/fan_in)); biases are zero.
Eigen::MatrixXd siren_init(int rows, int cols, Rng& rng);

/// Builds a full network: input_dim -> hidden widths -> output (K or 1).
MlpParams make_mlp(int input_dim, const std::vector<int>& hidden_widths, int output_dim,
                   HeadMode mode, double temperature, Rng& rng);

/// Per-pixel activations kept for the backward pass.
struct ForwardCache {
    std::vector<Eigen::MatrixXd> inputs;    // u_i for i = 1..L (inputs[0] = r batch)
    std::vector<Eigen::MatrixXd> cosines;   // cos(W_i u_i + b_i) for the sine layers
    Eigen::MatrixXd logits;                 // l_L x P
    Eigen::MatrixXd distribution;           // K x P (distribution mode only)
};

/// Forward through all layers; returns pre-softmax logits and fills the cache.
Eigen::MatrixXd mlp_forward(const Eigen::MatrixXd& batch, const MlpParams& params,
                            ForwardCache* cache = nullptr);

/// Numerically stable softmax(v/T) via max subtraction. T must be in (0,1).
Eigen::VectorXd modulated_softmax(const Eigen::VectorXd& logits, double temperature);

/// Column-wise modulated softmax for a logits batch.
Eigen::MatrixXd modulated_softmax_batch(const Eigen::MatrixXd& logits, double temperature);

/// g(z) = sum_k D_z(k) * phi_k (distribution head only).
double g_value(const Eigen::Vector2d& z, const FourierEmbedding& emb, const MlpParams& params,
               const AcVector& phi);

/// Evaluates the field over the full pixel grid. In distribution mode the
/// pixel value is phi . D_z; in scalar mode it is the head output itself.
/// `embedded` may pass a precomputed embed_batch(grid_coordinates(H,W)).
ImageGrid render_image(const FourierEmbedding& emb, const MlpParams& params, const AcVector& phi,
                       int height, int width, ForwardCache* cache = nullptr,
                       const Eigen::MatrixXd* embedded = nullptr);

struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    Eigen::VectorXd phi;  // empty in scalar mode

    void set_zero();
};

/// Exact reverse-mode gradients of the rendered image w.r.t. all parameters,
/// given dLoss/dImage. Uses the cache of the matching forward render.
Gradients backward(const ImageGrid& image_grad, const ForwardCache& cache,
                   const MlpParams& params, const AcVector& phi);

/// Adam accumulators; the MLP group and the phi group carry separate
/// learning rates.
struct AdamState {
    std::vector<Eigen::MatrixXd> m_weights, v_weights;
    std::vector<Eigen::VectorXd> m_biases, v_biases;
    Eigen::VectorXd m_phi, v_phi;
    long step = 0;
    double beta1 = 0.9, beta2 = 0.999, epsilon = 1e-8;
    double lr_mlp = 1e-4, lr_phi = 1e-4;

    static AdamState create(const MlpParams& params, int phi_size, double lr_mlp, double lr_phi);
};

/// Standard bias-corrected Adam update, applied in place.
void adam_step(MlpParams& params, AcVector& phi, const Gradients& grads, AdamState& state);

}  // namespace acind
