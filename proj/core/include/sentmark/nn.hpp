#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sentmark::nn {

// View of one weight tensor inside a model's flat parameter vector.
// Row-major: element (r, c) sits at offset + r * cols + c.
struct TensorView {
    std::size_t offset = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t size() const { return rows * cols; }
};

// Flat parameter + gradient storage. Keeping everything in one vector makes
// finite-difference checks, Adam and (de)serialization one loop each.
class ParamBlock {
public:
    TensorView alloc(std::size_t rows, std::size_t cols);
    void finalize(); // sizes values/grads to the allocated extent

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& grads() { return grads_; }
    const std::vector<double>& grads() const { return grads_; }

    double* data(const TensorView& v) { return values_.data() + v.offset; }
    const double* data(const TensorView& v) const { return values_.data() + v.offset; }
    double* grad(const TensorView& v) { return grads_.data() + v.offset; }

    void zero_grads();
    std::size_t size() const { return total_; }

private:
    std::vector<double> values_;
    std::vector<double> grads_;
    std::size_t total_ = 0;
};

// y = W x + b. W is (out x in), x has in entries, y out entries.
void affine(const double* W, const double* b, std::span<const double> x, std::span<double> y,
            std::size_t out, std::size_t in);

// Backward of affine: accumulates dW, db and writes dx (dx may be null).
void affine_backward(const double* W, std::span<const double> x, std::span<const double> dy,
                     double* dW, double* db, double* dx, std::size_t out, std::size_t in);

void tanh_inplace(std::span<double> x);
// dx = dy * (1 - y^2), with y the forward output.
void tanh_backward(std::span<const double> y, std::span<double> dy);

// Numerically stable softmax; temperature 1 when not given.
std::vector<double> softmax(std::span<const double> logits, double temperature = 1.0);

// Chain rule through softmax: given g = dL/dp, returns dL/dlogits.
std::vector<double> softmax_backward(std::span<const double> probs, std::span<const double> g);

double sigmoid(double x);

// Gaussian init, deterministic in seed.
void init_gaussian(std::vector<double>& values, double stddev, std::uint64_t seed);

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    std::uint64_t step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    void ensure(std::size_t n);
    void update(std::vector<double>& params, const std::vector<double>& grads, double lr);
};

// Deterministic stream derivation: one root seed fans out into independent
// 64-bit seeds keyed by (tag, a, b). Counter-based, so training runs can be
// resumed mid-stream bit-exactly.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t a = 0,
                          std::uint64_t b = 0);

} // namespace sentmark::nn
