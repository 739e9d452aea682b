#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "acind/classical.hpp"
#include "acind/geometry.hpp"
#include "acind/grid.hpp"
#include "acind/inr.hpp"
#include "acind/segmentation.hpp"

namespace acind {

enum class Method { kInr, kAcInd, kAcIndPlus };
enum class LossMode { kL2Norm, kMse };
enum class InitReconstructor { kFbp, kAcInd };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

/// Network shape; the training default is four 256-wide sine layers over 128
/// Fourier frequencies, shrunk in tests for speed.
struct NetArch {
    int num_frequencies = 128;
    std::vector<int> hidden_widths = {256, 256, 256, 256};
    double fourier_variance = 16.0;
};

struct TrainConfig {
    Method method = Method::kAcInd;
    int num_materials = 2;      // K, ignored by the classic INR baseline
    double temperature = 0.06;  // T, ignored by the classic INR baseline
    double lr_mlp = 1e-4;
    double lr_phi = 1e-4;
    int epochs = 5000;
    uint64_t seed = 0;
    LossMode loss_mode = LossMode::kL2Norm;
    int eval_every = 100;
    ScanGeometry geometry;
    NetArch arch;
    SirtConfig sirt;       // settings for an (optional) SIRT initializer run
    int inner_epochs = 0;  // AC-IND+ inner run budget; 0 = same as epochs

    void validate() const;
};

struct TraceRow {
    int epoch = 0;
    double loss = 0.0;
    double psnr_db = std::numeric_limits<double>::quiet_NaN();
    double ssim_value = std::numeric_limits<double>::quiet_NaN();
    double acv_distance = std::numeric_limits<double>::quiet_NaN();
    double seg_accuracy = std::numeric_limits<double>::quiet_NaN();
    AcVector phi;  // snapshot; empty for the scalar baseline
};

/// Per-eval-epoch records; epochs strictly increasing.
struct TrainTrace {
    std::vector<TraceRow> rows;
};

/// Everything needed to restore and audit a run.
struct Checkpoint {
    FourierEmbedding embedding;
    MlpParams params;
    AcVector phi;
    AdamState adam;
    TrainConfig config;
};

struct ReconResult {
    ImageGrid image;
    std::optional<LabelMap> labels;  // distribution methods only
    AcVector acv;                    // final phi (empty for the scalar baseline)
    AcVector init_acv;               // phi at initialization
    AcVector fbp_stage_acv;          // AC-IND+ only: the inner run's own init
    double initial_loss = 0.0;
    TrainTrace trace;
    Checkpoint checkpoint;

    /// Best logged PSNR (the reporting protocol for the classic INR baseline).
    double best_psnr() const;
};

/// Thrown when the training loss turns non-finite.
struct TrainingNumericError : std::runtime_error {
    int epoch;
    double last_finite_loss;
    TrainingNumericError(int ep, double last);
};

struct InitAcResult {
    AcVector acv;  // region means sorted ascending
    MaskSet masks;
    std::vector<bool> degenerate;
    AcVector fbp_stage_acv;  // f_t = ac-ind only: the inner run's init
};

/// Rough reconstruction (FBP, or a full inner AC-IND run), multi-Otsu
/// segmentation into K regions, nonzero region means, sorted ascending.
/// K must be >= 2. For f_t = ac-ind, inner_config drives the inner run
/// (defaults derive from geometry when omitted).
InitAcResult init_ac_vector(const Sinogram& sino, const ScanGeometry& geom, int num_materials,
                            InitReconstructor f_t, const TrainConfig* inner_config = nullptr);

/// Mutable training state, exposed so callers can inspect the epoch-0 model.
struct TrainState {
    FourierEmbedding embedding;
    MlpParams params;
    AcVector phi;
    AdamState adam;
    AcVector init_acv;
    AcVector fbp_stage_acv;
    Eigen::MatrixXd embedded_grid;  // precomputed r(z) for the full traversal
};

TrainState init_training(const TrainConfig& config, const Sinogram& sino);

/// Joint optimization of the network (and AC estimator in distribution mode)
/// against the measured sinogram. Optional ground truth enables PSNR/SSIM
/// logging; optional true ACV / label map enable the distance and accuracy
/// traces.
ReconResult train(const TrainConfig& config, const Sinogram& sino,
                  const ImageGrid* ground_truth = nullptr, const AcVector* true_acv = nullptr,
                  const LabelMap* true_labels = nullptr);

/// Continues from an initialized state (used by train and by tests that probe
/// the epoch-0 model).
ReconResult run_training(TrainState state, const TrainConfig& config, const Sinogram& sino,
                         const ImageGrid* ground_truth = nullptr,
                         const AcVector* true_acv = nullptr,
                         const LabelMap* true_labels = nullptr);

/// Per-pixel argmax of the material distribution; ties break toward the
/// lowest material index. Errors on a scalar head.
LabelMap extract_segmentation(const MlpParams& params, const FourierEmbedding& emb, int height,
                              int width);

/// Fraction of matching labels, excluding pixels within a 1-pixel band of a
/// material boundary in the reference map (8-neighborhood).
double segmentation_accuracy(const LabelMap& predicted, const LabelMap& reference,
                             bool exclude_boundary_band = true);

/// Loss of a stored model against a sinogram, recomputed from scratch.
double recompute_loss(const Checkpoint& ckpt, const Sinogram& sino);

struct DynamicsRow {
    int epoch;
    double psnr_db;
    double acv_distance;
    double seg_accuracy;
    AcVector phi;
};

/// CSV-ready view of a trace: (epoch, psnr, acv_distance, seg_accuracy) plus
/// the phi snapshot for trajectory plots.
std::vector<DynamicsRow> dynamics_report(const TrainTrace& trace);

}  // namespace acind
