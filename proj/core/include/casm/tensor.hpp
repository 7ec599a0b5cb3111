#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace casm {

using Shape = std::vector<int>;

std::string shape_str(const Shape& s);
std::size_t shape_numel(const Shape& s);

[[noreturn]] void throw_shape_error(const std::string& where, const Shape& got,
                                    const std::string& expected);

// Dense n-d float64 buffer with an optional gradient slot. Tensor is a cheap
// handle: copies and reshaped views share storage (data and grad), so
// parameter aliasing (shared encoder) and optimizer updates through a
// ParamSet all observe the same buffers.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  static Tensor scalar(double value);
  static Tensor from_data(Shape shape, std::vector<double> data);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const;
  std::size_t size() const;
  int dim(int i) const;
  int ndim() const;

  std::span<double> data();
  std::span<const double> data() const;
  double value() const;  // scalar tensors only

  bool requires_grad() const;
  Tensor& set_requires_grad(bool v);

  bool has_grad() const;
  std::span<double> grad();              // allocates zero-filled on first use
  std::span<const double> grad() const;  // requires has_grad()
  void zero_grad();                      // drops the grad buffer

  // Deep copy of values; grad not copied; requires_grad preserved.
  Tensor clone() const;
  // Same storage viewed under a different shape of equal numel.
  Tensor reshaped(Shape shape) const;

  // Identity of the underlying storage, for aliasing checks.
  const void* storage_id() const;

  struct Storage {
    std::vector<double> data;
    std::vector<double> grad;  // empty until first accumulation
  };

  struct Impl {
    Shape shape;
    std::shared_ptr<Storage> storage;
    bool requires_grad = false;
  };

  const std::shared_ptr<Impl>& impl() const { return impl_; }

 private:
  explicit Tensor(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

}  // namespace casm
