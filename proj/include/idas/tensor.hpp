#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "idas/common.hpp"
#include "idas/rng.hpp"

namespace idas {

// Dense row-major float32 array. Value semantics throughout; big activations
// live inside the autodiff tape, so copies here are cheap bookkeeping.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape);

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int> shape, float v);
    static Tensor from(std::vector<int> shape, std::vector<float> data);
    static Tensor scalar(float v) { return from({1}, {v}); }
    static Tensor randn(std::vector<int> shape, Rng& rng);

    const std::vector<int>& shape() const { return shape_; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    float& at(std::initializer_list<int> idx);
    float at(std::initializer_list<int> idx) const;

    Tensor reshaped(std::vector<int> shape) const;

    void fill(float v);
    void zero() { fill(0.0f); }

    // elementwise helpers (used by the plain, non-autodiff operations)
    Tensor& add_(const Tensor& o);
    Tensor& sub_(const Tensor& o);
    Tensor& mul_(float s);
    Tensor& add_scaled_(const Tensor& o, float s);  // this += s * o
    Tensor& clamp_(float lo, float hi);

    double sum() const;
    double mean() const;
    float min() const;
    float max() const;
    bool all_finite() const;

    std::string shape_str() const;

    static bool same_shape(const Tensor& a, const Tensor& b);
    static int64_t shape_numel(const std::vector<int>& shape);

private:
    std::vector<int> shape_;
    std::vector<float> data_;
};

// population standard deviation over every element (double accumulation)
double tensor_std(const Tensor& t);

}  // namespace idas
