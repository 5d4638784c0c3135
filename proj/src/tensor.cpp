#include "idas/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace idas {

int64_t Tensor::shape_numel(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int d : shape) {
        check(d >= 0, "negative tensor dimension");
        n *= d;
    }
    return n;
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(shape_numel(shape_)), 0.0f);
}

Tensor Tensor::full(std::vector<int> shape, float v) {
    Tensor t(std::move(shape));
    t.fill(v);
    return t;
}

Tensor Tensor::from(std::vector<int> shape, std::vector<float> data) {
    check(shape_numel(shape) == static_cast<int64_t>(data.size()),
          "Tensor::from: data size does not match shape");
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = std::move(data);
    return t;
}

Tensor Tensor::randn(std::vector<int> shape, Rng& rng) {
    Tensor t(std::move(shape));
    for (int64_t i = 0; i < t.numel(); ++i) t[i] = static_cast<float>(rng.normal());
    return t;
}

static int64_t flat_index(const std::vector<int>& shape, std::initializer_list<int> idx) {
    check(idx.size() == shape.size(), "index rank mismatch");
    int64_t flat = 0;
    size_t k = 0;
    for (int i : idx) {
        check(i >= 0 && i < shape[k], "index out of range");
        flat = flat * shape[k] + i;
        ++k;
    }
    return flat;
}

float& Tensor::at(std::initializer_list<int> idx) { return data_[static_cast<size_t>(flat_index(shape_, idx))]; }
float Tensor::at(std::initializer_list<int> idx) const { return data_[static_cast<size_t>(flat_index(shape_, idx))]; }

Tensor Tensor::reshaped(std::vector<int> shape) const {
    check(shape_numel(shape) == numel(), "reshape changes element count");
    Tensor t = *this;
    t.shape_ = std::move(shape);
    return t;
}

void Tensor::fill(float v) { std::fill(data_.begin(), data_.end(), v); }

Tensor& Tensor::add_(const Tensor& o) {
    check(same_shape(*this, o), "add_: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Tensor& Tensor::sub_(const Tensor& o) {
    check(same_shape(*this, o), "sub_: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Tensor& Tensor::mul_(float s) {
    for (float& v : data_) v *= s;
    return *this;
}

Tensor& Tensor::add_scaled_(const Tensor& o, float s) {
    check(same_shape(*this, o), "add_scaled_: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
    return *this;
}

Tensor& Tensor::clamp_(float lo, float hi) {
    for (float& v : data_) v = std::min(hi, std::max(lo, v));
    return *this;
}

double Tensor::sum() const {
    double s = 0.0;
    for (float v : data_) s += v;
    return s;
}

double Tensor::mean() const { return data_.empty() ? 0.0 : sum() / static_cast<double>(data_.size()); }

float Tensor::min() const {
    float m = data_.empty() ? 0.0f : data_[0];
    for (float v : data_) m = std::min(m, v);
    return m;
}

float Tensor::max() const {
    float m = data_.empty() ? 0.0f : data_[0];
    for (float v : data_) m = std::max(m, v);
    return m;
}

bool Tensor::all_finite() const {
    for (float v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
    os << "]";
    return os.str();
}

bool Tensor::same_shape(const Tensor& a, const Tensor& b) { return a.shape_ == b.shape_; }

double tensor_std(const Tensor& t) {
    check(t.numel() >= 2, "tensor_std: need at least 2 elements");
    double mu = t.mean();
    double acc = 0.0;
    for (int64_t i = 0; i < t.numel(); ++i) {
        double d = t[i] - mu;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(t.numel()));
}

}  // namespace idas
