#include "casm/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace casm {

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

std::size_t shape_numel(const Shape& s) {
  std::size_t n = 1;
  for (int d : s) {
    if (d <= 0) throw std::invalid_argument("non-positive extent in shape " + shape_str(s));
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

void throw_shape_error(const std::string& where, const Shape& got,
                       const std::string& expected) {
  throw std::invalid_argument(where + ": got shape " + shape_str(got) +
                              ", expected " + expected);
}

Tensor Tensor::zeros(Shape shape) {
  const std::size_t n = shape_numel(shape);
  auto impl = std::make_shared<Impl>();
  impl->shape = std::move(shape);
  impl->storage = std::make_shared<Storage>();
  impl->storage->data.assign(n, 0.0);
  return Tensor(std::move(impl));
}

Tensor Tensor::full(Shape shape, double value) {
  Tensor t = zeros(std::move(shape));
  for (double& v : t.impl_->storage->data) v = value;
  return t;
}

Tensor Tensor::scalar(double value) { return full({1}, value); }

Tensor Tensor::from_data(Shape shape, std::vector<double> data) {
  if (shape_numel(shape) != data.size())
    throw std::invalid_argument("from_data: shape " + shape_str(shape) +
                                " does not match buffer of " +
                                std::to_string(data.size()) + " values");
  auto impl = std::make_shared<Impl>();
  impl->shape = std::move(shape);
  impl->storage = std::make_shared<Storage>();
  impl->storage->data = std::move(data);
  return Tensor(std::move(impl));
}

const Shape& Tensor::shape() const { return impl_->shape; }

std::size_t Tensor::size() const { return impl_->storage->data.size(); }

int Tensor::dim(int i) const { return impl_->shape.at(static_cast<std::size_t>(i)); }

int Tensor::ndim() const { return static_cast<int>(impl_->shape.size()); }

std::span<double> Tensor::data() { return impl_->storage->data; }

std::span<const double> Tensor::data() const { return impl_->storage->data; }

double Tensor::value() const {
  if (size() != 1) throw std::logic_error("value(): tensor is not scalar, shape " + shape_str(shape()));
  return impl_->storage->data[0];
}

bool Tensor::requires_grad() const { return impl_->requires_grad; }

Tensor& Tensor::set_requires_grad(bool v) {
  impl_->requires_grad = v;
  return *this;
}

bool Tensor::has_grad() const { return !impl_->storage->grad.empty(); }

std::span<double> Tensor::grad() {
  auto& g = impl_->storage->grad;
  if (g.empty()) g.assign(impl_->storage->data.size(), 0.0);
  return g;
}

std::span<const double> Tensor::grad() const {
  if (!has_grad()) throw std::logic_error("grad(): no gradient populated");
  return impl_->storage->grad;
}

void Tensor::zero_grad() { impl_->storage->grad.clear(); }

Tensor Tensor::clone() const {
  Tensor t = from_data(impl_->shape, impl_->storage->data);
  t.impl_->requires_grad = impl_->requires_grad;
  return t;
}

Tensor Tensor::reshaped(Shape shape) const {
  if (shape_numel(shape) != size())
    throw std::invalid_argument("reshaped: " + shape_str(shape) +
                                " does not match numel of " + shape_str(impl_->shape));
  auto impl = std::make_shared<Impl>();
  impl->shape = std::move(shape);
  impl->storage = impl_->storage;
  impl->requires_grad = impl_->requires_grad;
  return Tensor(std::move(impl));
}

const void* Tensor::storage_id() const { return impl_->storage.get(); }

}  // namespace casm
