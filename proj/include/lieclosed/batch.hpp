#pragma once

// Batch evaluation of group elements and exponentials over many inputs.
// Execution::parallel distributes items with OpenMP when it is enabled;
// Execution::serial is the plain loop used as the reference.

#include <span>
#include <vector>

#include "lieclosed/groups.hpp"
#include "lieclosed/types.hpp"

namespace lieclosed {

enum class Execution { serial, parallel };

// Threads available to the parallel path (1 without OpenMP).
int batch_threads();

std::vector<Mat4> lorentz_exp_batch(std::span<const LorentzParams> params,
                                    Execution exec = Execution::parallel);
std::vector<Mat5> poincare_exp_batch(std::span<const PoincareParams> params,
                                     Execution exec = Execution::parallel);
std::vector<Mat5> galilei_exp_batch(std::span<const GalileiParams> params,
                                    Execution exec = Execution::parallel);
std::vector<Matrix> matrix_exp_batch(std::span<const Matrix> mats,
                                     Execution exec = Execution::parallel);
std::vector<Matrix> series_exp_batch(std::span<const Matrix> mats, double tol = 1e-13,
                                     Execution exec = Execution::parallel);

}  // namespace lieclosed
