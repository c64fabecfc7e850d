#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "glat/errors.h"

namespace glat::num {

using Shape = std::vector<int>;

std::int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

struct TensorNode {
    Shape shape;
    std::vector<float> data;
    std::vector<float> grad;  // empty until first touched
    bool requires_grad = false;
    bool has_precise = false;
    double precise = 0.0;  // double-accumulated value kept by scalar reductions
};

// Cheap shared handle to an f32 array on the current tape. Copying a Tensor
// aliases the same storage.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor constant(Shape shape, float value);
    static Tensor from_data(Shape shape, std::vector<float> data, bool requires_grad = false);

    bool defined() const { return static_cast<bool>(n_); }
    const Shape& shape() const { return n_->shape; }
    int ndim() const { return static_cast<int>(n_->shape.size()); }
    int dim(int i) const { return n_->shape[static_cast<std::size_t>(i)]; }
    std::int64_t numel() const { return static_cast<std::int64_t>(n_->data.size()); }

    std::span<float> data() { return n_->data; }
    std::span<const float> data() const { return n_->data; }

    bool requires_grad() const { return n_->requires_grad; }
    void set_requires_grad(bool on) { n_->requires_grad = on; }

    bool has_grad() const { return !n_->grad.empty(); }
    // Allocates a zero grad array on first access.
    std::span<float> grad();
    std::span<const float> grad_view() const;
    void zero_grad();

    float scalar() const;
    // Exact double value for scalar reductions; falls back to the f32 value.
    double scalar_precise() const;

    TensorNode* node() const { return n_.get(); }
    bool same_storage(const Tensor& other) const { return n_ == other.n_; }

private:
    explicit Tensor(std::shared_ptr<TensorNode> n) : n_(std::move(n)) {}
    std::shared_ptr<TensorNode> n_;
};

// Reverse-mode tape. One tape per training step, confined to one thread;
// ops record onto the innermost live tape.
class Tape {
public:
    Tape();
    ~Tape();
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    static Tape* current();

    void record(std::function<void()> backward_op);
    std::size_t size() const { return ops_.size(); }
    bool consumed() const { return consumed_; }

    // Seeds d(loss)=1 and replays the tape in reverse; the tape is consumed.
    void backward(const Tensor& loss);

private:
    std::vector<std::function<void()>> ops_;
    Tape* prev_ = nullptr;
    bool consumed_ = false;
};

// RAII: disables recording in scope (first-pass decode, inference inside a
// training step).
class NoGradGuard {
public:
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
};

bool grad_enabled();

// True when an op over these inputs must be recorded.
bool should_record(std::initializer_list<const Tensor*> inputs);

// Global toggle for the NaN/Inf scan after every op (on by default).
void set_finite_checks(bool on);
bool finite_checks();
void check_finite(const char* op, std::span<const float> values);

}  // namespace glat::num
