#pragma once

#include <span>
#include <vector>

#include "dircyc/poly.hpp"

namespace dircyc {

/// Unnormalized DFT, X_k = sum_j x_j exp(-2 pi i jk/n) (inverse flips the sign).
std::vector<Complex> dft(std::span<const Complex> x, bool inverse = false);

/// Unnormalized 2-D DFT of a row-major rows x cols array.
std::vector<Complex> dft2(std::span<const Complex> x, int rows, int cols, bool inverse = false);

}  // namespace dircyc
