#include "acind/inr.hpp"

#include <cmath>
#include <stdexcept>

#include "acind/threading.hpp"

namespace acind {

namespace {

// Fixed column-panel width for parallel batch math. Work is partitioned by
// panel index, never by thread count, so results are bitwise reproducible
// under any ACIND_THREADS setting.
constexpr int kPanel = 1024;

int panel_count(int cols) { return (cols + kPanel - 1) / kPanel; }

// out = A * B, column panels in parallel.
void gemm_cols(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Eigen::MatrixXd& out) {
    out.resize(a.rows(), b.cols());
    const int np = panel_count(static_cast<int>(b.cols()));
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int p = 0; p < np; ++p) {
        const int c0 = p * kPanel;
        const int cn = std::min<int>(kPanel, static_cast<int>(b.cols()) - c0);
        out.middleCols(c0, cn).noalias() = a * b.middleCols(c0, cn);
    }
}

// A * B^T accumulated over column panels in fixed panel order.
Eigen::MatrixXd gemm_outer_reduce(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const int np = panel_count(static_cast<int>(a.cols()));
    std::vector<Eigen::MatrixXd> partial(np);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int p = 0; p < np; ++p) {
        const int c0 = p * kPanel;
        const int cn = std::min<int>(kPanel, static_cast<int>(a.cols()) - c0);
        partial[p].noalias() = a.middleCols(c0, cn) * b.middleCols(c0, cn).transpose();
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), b.rows());
    for (int p = 0; p < np; ++p) out += partial[p];
    return out;
}

}  // namespace

FourierEmbedding FourierEmbedding::create(int num_frequencies, double variance, Rng& rng) {
    if (num_frequencies < 1) throw std::invalid_argument("FourierEmbedding: need >= 1 frequency");
    if (!(variance > 0.0)) throw std::invalid_argument("FourierEmbedding: variance must be positive");
    FourierEmbedding emb;
    emb.variance = variance;
    emb.frequencies.resize(num_frequencies, 2);
    const double sigma = std::sqrt(variance);
    for (int i = 0; i < num_frequencies; ++i)
        for (int j = 0; j < 2; ++j) emb.frequencies(i, j) = rng.normal(0.0, sigma);
    return emb;
}

Eigen::VectorXd embed(const Eigen::Vector2d& z, const FourierEmbedding& emb) {
    const int m = emb.num_frequencies();
    const Eigen::VectorXd ez = emb.frequencies * z;
    Eigen::VectorXd r(2 * m);
    r.head(m) = ez.array().sin();
    r.tail(m) = ez.array().cos();
    return r;
}

Eigen::MatrixXd embed_batch(const Eigen::Matrix2Xd& coords, const FourierEmbedding& emb) {
    const int m = emb.num_frequencies();
    Eigen::MatrixXd ez;
    gemm_cols(emb.frequencies, coords, ez);
    Eigen::MatrixXd r(2 * m, coords.cols());
    r.topRows(m) = ez.array().sin();
    r.bottomRows(m) = ez.array().cos();
    return r;
}

Eigen::Matrix2Xd grid_coordinates(int height, int width) {
    Eigen::Matrix2Xd coords(2, static_cast<long>(height) * width);
    long p = 0;
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j, ++p) {
            coords(0, p) = static_cast<double>(i) / height;
            coords(1, p) = static_cast<double>(j) / width;
        }
    return coords;
}

long MlpParams::num_parameters() const {
    long n = 0;
    for (size_t i = 0; i < weights.size(); ++i) n += weights[i].size() + biases[i].size();
    return n;
}

void MlpParams::validate() const {
    if (weights.empty() || weights.size() != biases.size())
        throw std::invalid_argument("MlpParams: empty or mismatched layer lists");
    for (size_t i = 0; i < weights.size(); ++i) {
        if (biases[i].size() != weights[i].rows())
            throw std::invalid_argument("MlpParams: bias size does not match layer rows");
        if (i + 1 < weights.size() && weights[i + 1].cols() != weights[i].rows())
            throw std::invalid_argument("MlpParams: layer shapes do not chain");
    }
    if (head_mode == HeadMode::kScalar) {
        if (output_dim() != 1) throw std::invalid_argument("MlpParams: scalar head must have width 1");
    } else {
        if (!(temperature > 0.0 && temperature < 1.0))
            throw std::invalid_argument("MlpParams: temperature must lie in (0,1)");
    }
}

Eigen::MatrixXd siren_init(int rows, int cols, Rng& rng) {
    const double bound = std::sqrt(6.0 / cols);
    Eigen::MatrixXd w(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) w(i, j) = rng.uniform(-bound, bound);
    return w;
}

MlpParams make_mlp(int input_dim, const std::vector<int>& hidden_widths, int output_dim,
                   HeadMode mode, double temperature, Rng& rng) {
    MlpParams params;
    params.head_mode = mode;
    params.temperature = temperature;
    std::vector<int> dims;
    dims.push_back(input_dim);
    dims.insert(dims.end(), hidden_widths.begin(), hidden_widths.end());
    dims.push_back(output_dim);
    for (size_t i = 0; i + 1 < dims.size(); ++i) {
        params.weights.push_back(siren_init(dims[i + 1], dims[i], rng));
        params.biases.push_back(Eigen::VectorXd::Zero(dims[i + 1]));
    }
    params.validate();
    return params;
}

Eigen::MatrixXd mlp_forward(const Eigen::MatrixXd& batch, const MlpParams& params,
                            ForwardCache* cache) {
    if (batch.rows() != params.input_dim())
        throw std::invalid_argument("mlp_forward: input dimension mismatch");
    if (cache) {
        cache->inputs.clear();
        cache->cosines.clear();
        cache->inputs.push_back(batch);
    }
    Eigen::MatrixXd cur = batch;
    const int L = params.num_layers();
    Eigen::MatrixXd z;
    for (int l = 0; l < L; ++l) {
        gemm_cols(params.weights[l], cur, z);
        z.colwise() += params.biases[l];
        if (l + 1 < L) {
            if (cache) cache->cosines.push_back(z.array().cos());
            cur = z.array().sin();
            if (cache) cache->inputs.push_back(cur);
        }
    }
    if (cache) cache->logits = z;
    return z;
}

Eigen::VectorXd modulated_softmax(const Eigen::VectorXd& logits, double temperature) {
    if (!(temperature > 0.0 && temperature < 1.0))
        throw std::invalid_argument("modulated_softmax: temperature must lie in (0,1)");
    const double mx = logits.maxCoeff();
    Eigen::VectorXd e = ((logits.array() - mx) / temperature).exp();
    return e / e.sum();
}

Eigen::MatrixXd modulated_softmax_batch(const Eigen::MatrixXd& logits, double temperature) {
    if (!(temperature > 0.0 && temperature < 1.0))
        throw std::invalid_argument("modulated_softmax: temperature must lie in (0,1)");
    Eigen::MatrixXd d(logits.rows(), logits.cols());
    const int np = panel_count(static_cast<int>(logits.cols()));
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int p = 0; p < np; ++p) {
        const int c0 = p * kPanel;
        const int cn = std::min<int>(kPanel, static_cast<int>(logits.cols()) - c0);
        for (int c = c0; c < c0 + cn; ++c) {
            const double mx = logits.col(c).maxCoeff();
            Eigen::VectorXd e = ((logits.col(c).array() - mx) / temperature).exp();
            d.col(c) = e / e.sum();
        }
    }
    return d;
}

double g_value(const Eigen::Vector2d& z, const FourierEmbedding& emb, const MlpParams& params,
               const AcVector& phi) {
    if (params.head_mode != HeadMode::kDistribution)
        throw std::invalid_argument("g_value: requires a distribution head");
    if (static_cast<int>(phi.size()) != params.output_dim())
        throw std::invalid_argument("g_value: phi size does not match head width");
    const Eigen::VectorXd r = embed(z, emb);
    const Eigen::VectorXd logits = mlp_forward(r, params);
    const Eigen::VectorXd d = modulated_softmax(logits, params.temperature);
    double g = 0.0;
    for (int k = 0; k < d.size(); ++k) g += d(k) * phi[k];
    return g;
}

ImageGrid render_image(const FourierEmbedding& emb, const MlpParams& params, const AcVector& phi,
                       int height, int width, ForwardCache* cache,
                       const Eigen::MatrixXd* embedded) {
    Eigen::MatrixXd local;
    if (!embedded) {
        local = embed_batch(grid_coordinates(height, width), emb);
        embedded = &local;
    }
    ForwardCache tmp;
    ForwardCache* fc = cache ? cache : &tmp;
    const Eigen::MatrixXd logits = mlp_forward(*embedded, params, fc);

    ImageGrid image(height, width);
    const long pixels = static_cast<long>(height) * width;
    if (params.head_mode == HeadMode::kScalar) {
        for (long p = 0; p < pixels; ++p) image.data[p] = logits(0, p);
    } else {
        if (static_cast<int>(phi.size()) != params.output_dim())
            throw std::invalid_argument("render_image: phi size does not match head width");
        fc->distribution = modulated_softmax_batch(logits, params.temperature);
        Eigen::Map<const Eigen::VectorXd> phi_vec(phi.data(), phi.size());
        for (long p = 0; p < pixels; ++p) image.data[p] = phi_vec.dot(fc->distribution.col(p));
    }
    return image;
}

void Gradients::set_zero() {
    for (auto& w : weights) w.setZero();
    for (auto& b : biases) b.setZero();
    phi.setZero();
}

Gradients backward(const ImageGrid& image_grad, const ForwardCache& cache,
                   const MlpParams& params, const AcVector& phi) {
    const int L = params.num_layers();
    const long pixels = static_cast<long>(image_grad.height) * image_grad.width;
    if (static_cast<long>(cache.inputs.size()) != L ||
        static_cast<long>(cache.cosines.size()) != L - 1)
        throw std::invalid_argument("backward: cache does not match the network depth");
    if (cache.logits.cols() != pixels)
        throw std::invalid_argument("backward: cache batch size does not match image_grad");

    Eigen::Map<const Eigen::VectorXd> g(image_grad.data.data(), pixels);

    Gradients grads;
    grads.weights.resize(L);
    grads.biases.resize(L);

    Eigen::MatrixXd dz;
    if (params.head_mode == HeadMode::kScalar) {
        dz = g.transpose();
    } else {
        if (cache.distribution.cols() != pixels)
            throw std::invalid_argument("backward: cache lacks the distribution batch");
        const Eigen::MatrixXd& d = cache.distribution;
        Eigen::Map<const Eigen::VectorXd> phi_vec(phi.data(), phi.size());
        grads.phi.noalias() = d * g;
        // dZ_L = D .* (phi - X)_kp .* G_p / T  via the softmax Jacobian
        const Eigen::RowVectorXd x = phi_vec.transpose() * d;
        dz.resize(d.rows(), pixels);
        const int np = panel_count(static_cast<int>(pixels));
#pragma omp parallel for schedule(static) num_threads(max_threads())
        for (int p = 0; p < np; ++p) {
            const int c0 = p * kPanel;
            const int cn = std::min<int>(kPanel, static_cast<int>(pixels) - c0);
            for (int c = c0; c < c0 + cn; ++c) {
                dz.col(c) = d.col(c).array() * (phi_vec.array() - x(c)) *
                            (g(c) / params.temperature);
            }
        }
    }

    for (int l = L - 1; l >= 0; --l) {
        grads.weights[l] = gemm_outer_reduce(dz, cache.inputs[l]);
        grads.biases[l] = dz.rowwise().sum();
        if (l > 0) {
            Eigen::MatrixXd du;
            gemm_cols(params.weights[l].transpose(), dz, du);
            dz = du.array() * cache.cosines[l - 1].array();
        }
    }
    return grads;
}

AdamState AdamState::create(const MlpParams& params, int phi_size, double lr_mlp, double lr_phi) {
    AdamState s;
    s.lr_mlp = lr_mlp;
    s.lr_phi = lr_phi;
    for (int l = 0; l < params.num_layers(); ++l) {
        s.m_weights.push_back(Eigen::MatrixXd::Zero(params.weights[l].rows(), params.weights[l].cols()));
        s.v_weights.push_back(Eigen::MatrixXd::Zero(params.weights[l].rows(), params.weights[l].cols()));
        s.m_biases.push_back(Eigen::VectorXd::Zero(params.biases[l].size()));
        s.v_biases.push_back(Eigen::VectorXd::Zero(params.biases[l].size()));
    }
    s.m_phi = Eigen::VectorXd::Zero(phi_size);
    s.v_phi = Eigen::VectorXd::Zero(phi_size);
    return s;
}

namespace {

template <typename T>
void adam_update(T& param, const T& grad, T& m, T& v, double lr, double b1, double b2, double eps,
                 double bc1, double bc2) {
    m = b1 * m + (1.0 - b1) * grad;
    v = b2 * v.array().matrix() + (1.0 - b2) * grad.array().square().matrix();
    param.array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + eps);
}

}  // namespace

void adam_step(MlpParams& params, AcVector& phi, const Gradients& grads, AdamState& state) {
    if (static_cast<int>(grads.weights.size()) != params.num_layers())
        throw std::invalid_argument("adam_step: gradient layer count mismatch");
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (int l = 0; l < params.num_layers(); ++l) {
        adam_update(params.weights[l], grads.weights[l], state.m_weights[l], state.v_weights[l],
                    state.lr_mlp, state.beta1, state.beta2, state.epsilon, bc1, bc2);
        adam_update(params.biases[l], grads.biases[l], state.m_biases[l], state.v_biases[l],
                    state.lr_mlp, state.beta1, state.beta2, state.epsilon, bc1, bc2);
    }
    if (params.head_mode == HeadMode::kDistribution && !phi.empty()) {
        if (grads.phi.size() != static_cast<long>(phi.size()))
            throw std::invalid_argument("adam_step: phi gradient size mismatch");
        Eigen::Map<Eigen::VectorXd> phi_vec(phi.data(), phi.size());
        Eigen::VectorXd tmp = phi_vec;
        adam_update(tmp, grads.phi, state.m_phi, state.v_phi, state.lr_phi, state.beta1,
                    state.beta2, state.epsilon, bc1, bc2);
        phi_vec = tmp;
    }
}

}  // namespace acind
