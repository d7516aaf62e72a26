#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace pancake {

// Uniform turning-angle grid theta_i = 2*pi*i/N with N divisible by 4, so
// that 0, pi/2, pi and 3pi/2 are nodes. The cosine and sine tables are built
// to satisfy the reflection identities bit for bit.
class AngleGrid {
 public:
  explicit AngleGrid(std::size_t size);

  // Shared immutable grid for a given size; thread safe.
  static std::shared_ptr<const AngleGrid> shared(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  double spacing() const noexcept { return spacing_; }
  double theta(std::size_t i) const noexcept;
  double cos(std::size_t i) const noexcept { return cos_[i]; }
  double sin(std::size_t i) const noexcept { return sin_[i]; }
  std::span<const double> cosines() const noexcept { return cos_; }
  std::span<const double> sines() const noexcept { return sin_; }

  std::size_t north_pole() const noexcept { return size_ / 4; }  // theta = pi/2
  std::size_t tip() const noexcept { return size_ / 2; }         // theta = pi
  std::size_t south_pole() const noexcept { return 3 * size_ / 4; }

  std::size_t wrap(std::ptrdiff_t i) const noexcept;

 private:
  std::size_t size_;
  double spacing_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

// Throws DomainError unless size >= 16 and size % 4 == 0.
void validate_grid_size(std::size_t size);

// Average over the orbit {i, N/2-i, N/2+i, N-i}. Idempotent on symmetric data.
void symmetrize(std::span<double> values);

bool is_symmetric(std::span<const double> values);

}  // namespace pancake
