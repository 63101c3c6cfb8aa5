#include "sentmark/nn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sentmark::nn {

TensorView ParamBlock::alloc(std::size_t rows, std::size_t cols) {
    TensorView v{total_, rows, cols};
    total_ += rows * cols;
    return v;
}

void ParamBlock::finalize() {
    values_.assign(total_, 0.0);
    grads_.assign(total_, 0.0);
}

void ParamBlock::zero_grads() {
    std::fill(grads_.begin(), grads_.end(), 0.0);
}

void affine(const double* W, const double* b, std::span<const double> x, std::span<double> y,
            std::size_t out, std::size_t in) {
    for (std::size_t r = 0; r < out; ++r) {
        double acc = b ? b[r] : 0.0;
        const double* wr = W + r * in;
        for (std::size_t c = 0; c < in; ++c) acc += wr[c] * x[c];
        y[r] = acc;
    }
}

void affine_backward(const double* W, std::span<const double> x, std::span<const double> dy,
                     double* dW, double* db, double* dx, std::size_t out, std::size_t in) {
    if (dx) std::fill(dx, dx + in, 0.0);
    for (std::size_t r = 0; r < out; ++r) {
        double g = dy[r];
        if (db) db[r] += g;
        double* dwr = dW + r * in;
        const double* wr = W + r * in;
        for (std::size_t c = 0; c < in; ++c) {
            dwr[c] += g * x[c];
            if (dx) dx[c] += g * wr[c];
        }
    }
}

void tanh_inplace(std::span<double> x) {
    for (double& v : x) v = std::tanh(v);
}

void tanh_backward(std::span<const double> y, std::span<double> dy) {
    for (std::size_t i = 0; i < y.size(); ++i) dy[i] *= 1.0 - y[i] * y[i];
}

std::vector<double> softmax(std::span<const double> logits, double temperature) {
    if (temperature <= 0.0) throw std::invalid_argument("softmax temperature must be positive");
    std::vector<double> p(logits.begin(), logits.end());
    double mx = *std::max_element(p.begin(), p.end());
    double sum = 0.0;
    for (double& v : p) {
        v = std::exp((v - mx) / temperature);
        sum += v;
    }
    for (double& v : p) v /= sum;
    return p;
}

std::vector<double> softmax_backward(std::span<const double> probs, std::span<const double> g) {
    double dot = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) dot += probs[i] * g[i];
    std::vector<double> dlogits(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) dlogits[i] = probs[i] * (g[i] - dot);
    return dlogits;
}

double sigmoid(double x) {
    if (x >= 0.0) {
        double z = std::exp(-x);
        return 1.0 / (1.0 + z);
    }
    double z = std::exp(x);
    return z / (1.0 + z);
}

void init_gaussian(std::vector<double>& values, double stddev, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, stddev);
    for (double& v : values) v = dist(rng);
}

void AdamState::ensure(std::size_t n) {
    if (m.size() != n) {
        m.assign(n, 0.0);
        v.assign(n, 0.0);
        step = 0;
    }
}

void AdamState::update(std::vector<double>& params, const std::vector<double>& grads, double lr) {
    if (params.size() != grads.size()) throw std::invalid_argument("adam: size mismatch");
    ensure(params.size());
    ++step;
    double bc1 = 1.0 - std::pow(beta1, static_cast<double>(step));
    double bc2 = 1.0 - std::pow(beta2, static_cast<double>(step));
    for (std::size_t i = 0; i < params.size(); ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * grads[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * grads[i] * grads[i];
        double mhat = m[i] / bc1;
        double vhat = v[i] / bc2;
        params[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
} // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = root ^ 0x6C62272E07BB0142ULL;
    for (char c : tag) h = splitmix64(h ^ static_cast<unsigned char>(c));
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    return h;
}

} // namespace sentmark::nn
