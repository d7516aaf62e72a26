#include "pancake/grid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "pancake/errors.hpp"

namespace pancake {

void validate_grid_size(std::size_t size) {
  if (size < 16 || size % 4 != 0) {
    throw DomainError("grid size must be >= 16 and divisible by 4, got " + std::to_string(size));
  }
}

AngleGrid::AngleGrid(std::size_t size)
    : size_(size), spacing_(0.0), cos_(size, 0.0), sin_(size, 0.0) {
  validate_grid_size(size);
  spacing_ = 2.0 * std::numbers::pi / static_cast<double>(size);
  const std::size_t q = size / 4;

  // First quadrant, each value from whichever of cos/sin has the small argument.
  for (std::size_t i = 0; i <= q; ++i) {
    const double c = (2 * i <= q) ? std::cos(spacing_ * static_cast<double>(i))
                                  : std::sin(spacing_ * static_cast<double>(q - i));
    cos_[i] = c;
    sin_[q - i] = c;
  }
  cos_[q] = 0.0;
  sin_[0] = 0.0;

  for (std::size_t i = 0; i <= q; ++i) {
    cos_[2 * q - i] = -cos_[i];
    sin_[2 * q - i] = sin_[i];
    if (i > 0) {
      cos_[(2 * q + i) % size] = -cos_[i];
      sin_[(2 * q + i) % size] = -sin_[i];
      cos_[size - i] = cos_[i];
      sin_[size - i] = -sin_[i];
    }
  }
  cos_[q] = 0.0;
  cos_[3 * q] = 0.0;
  sin_[2 * q] = 0.0;
}

std::shared_ptr<const AngleGrid> AngleGrid::shared(std::size_t size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const AngleGrid>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  auto grid = std::make_shared<const AngleGrid>(size);
  cache.emplace(size, grid);
  return grid;
}

double AngleGrid::theta(std::size_t i) const noexcept {
  return spacing_ * static_cast<double>(i);
}

std::size_t AngleGrid::wrap(std::ptrdiff_t i) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(size_);
  return static_cast<std::size_t>(((i % n) + n) % n);
}

void symmetrize(std::span<double> values) {
  const std::size_t n = values.size();
  validate_grid_size(n);
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i <= n / 4; ++i) {
    const std::size_t a = i;
    const std::size_t b = half - i;
    const std::size_t c = (half + i) % n;
    const std::size_t d = (n - i) % n;
    const double v = ((values[a] + values[b]) + (values[c] + values[d])) / 4.0;
    values[a] = v;
    values[b] = v;
    values[c] = v;
    values[d] = v;
  }
}

bool is_symmetric(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 16 || n % 4 != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] != values[(n - i) % n]) return false;
    if (values[i] != values[(n + n / 2 - i) % n]) return false;
  }
  return true;
}

}  // namespace pancake
