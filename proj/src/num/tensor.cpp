#include "glat/num/tensor.h"

#include <atomic>
#include <cmath>
#include <sstream>

namespace glat::num {

std::int64_t shape_numel(const Shape& s) {
    std::int64_t n = 1;
    for (int d : s) n *= d;
    return n;
}

std::string shape_str(const Shape& s) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "]";
    return out.str();
}

static std::shared_ptr<TensorNode> make_node(Shape shape) {
    for (int d : shape)
        if (d <= 0) throw DimensionError("tensor dims must be positive, got " + shape_str(shape));
    auto n = std::make_shared<TensorNode>();
    n->shape = std::move(shape);
    return n;
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
    auto n = make_node(std::move(shape));
    n->data.assign(static_cast<std::size_t>(shape_numel(n->shape)), 0.0f);
    n->requires_grad = requires_grad;
    return Tensor(std::move(n));
}

Tensor Tensor::constant(Shape shape, float value) {
    auto n = make_node(std::move(shape));
    n->data.assign(static_cast<std::size_t>(shape_numel(n->shape)), value);
    return Tensor(std::move(n));
}

Tensor Tensor::from_data(Shape shape, std::vector<float> data, bool requires_grad) {
    auto n = make_node(std::move(shape));
    if (static_cast<std::int64_t>(data.size()) != shape_numel(n->shape))
        throw DimensionError("data size " + std::to_string(data.size()) + " does not match shape " +
                             shape_str(n->shape));
    n->data = std::move(data);
    n->requires_grad = requires_grad;
    return Tensor(std::move(n));
}

std::span<float> Tensor::grad() {
    if (n_->grad.empty()) n_->grad.assign(n_->data.size(), 0.0f);
    return n_->grad;
}

std::span<const float> Tensor::grad_view() const {
    return n_->grad;
}

void Tensor::zero_grad() {
    if (!n_->grad.empty()) n_->grad.assign(n_->data.size(), 0.0f);
}

float Tensor::scalar() const {
    if (numel() != 1) throw ContractError("scalar() on tensor of shape " + shape_str(shape()));
    return n_->data[0];
}

double Tensor::scalar_precise() const {
    if (numel() != 1) throw ContractError("scalar_precise() on tensor of shape " + shape_str(shape()));
    return n_->has_precise ? n_->precise : static_cast<double>(n_->data[0]);
}

namespace {
thread_local Tape* t_current_tape = nullptr;
thread_local int t_no_grad_depth = 0;
std::atomic<bool> g_finite_checks{true};
}  // namespace

Tape::Tape() {
    prev_ = t_current_tape;
    t_current_tape = this;
}

Tape::~Tape() {
    t_current_tape = prev_;
}

Tape* Tape::current() { return t_current_tape; }

void Tape::record(std::function<void()> backward_op) {
    ops_.push_back(std::move(backward_op));
}

void Tape::backward(const Tensor& loss) {
    if (consumed_) throw ContractError("tape already consumed by backward()");
    if (!loss.defined() || loss.numel() != 1)
        throw ContractError("backward() needs a scalar loss");
    if (!loss.requires_grad())
        throw ContractError("backward() loss is not on the tape");
    const_cast<Tensor&>(loss).grad()[0] = 1.0f;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) (*it)();
    ops_.clear();
    consumed_ = true;
}

NoGradGuard::NoGradGuard() { ++t_no_grad_depth; }
NoGradGuard::~NoGradGuard() { --t_no_grad_depth; }

bool grad_enabled() { return t_no_grad_depth == 0; }

bool should_record(std::initializer_list<const Tensor*> inputs) {
    if (t_current_tape == nullptr || t_no_grad_depth > 0) return false;
    for (const Tensor* t : inputs)
        if (t->defined() && t->requires_grad()) return true;
    return false;
}

void set_finite_checks(bool on) { g_finite_checks.store(on, std::memory_order_relaxed); }
bool finite_checks() { return g_finite_checks.load(std::memory_order_relaxed); }

void check_finite(const char* op, std::span<const float> values) {
    if (!g_finite_checks.load(std::memory_order_relaxed)) return;
    for (float v : values) {
        if (!std::isfinite(v))
            throw NumericError(std::string(op) + " produced a non-finite value");
    }
}

}  // namespace glat::num
