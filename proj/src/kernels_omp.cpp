#include <algorithm>
#include <utility>
#include <vector>

#include "cslce/kernels.hpp"

namespace {
#include "kernels_row.inc"
}  // namespace

namespace cslce::kernels::omp {

void laplacian_apply(const CsrView& a, LaplacianAction action, std::span<const double> x,
                     std::span<double> y) {
  const Index n = a.rows();
#pragma omp parallel for schedule(static) if (n > 4096)
  for (Index i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = laplacian_row(a, action, x.data(), i);
}

void random_walk_step(const CsrView& a, std::span<const double> x, std::span<double> y) {
  const Index n = a.rows();
#pragma omp parallel for schedule(static) if (n > 4096)
  for (Index i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = random_walk_row(a, x.data(), i);
}

void knn_search(const PointView& pts, Index k, std::span<Index> nbr, std::span<double> dist2) {
#pragma omp parallel
  {
    std::vector<std::pair<double, Index>> scratch;
    scratch.reserve(static_cast<std::size_t>(pts.n));
#pragma omp for schedule(dynamic, 16)
    for (Index i = 0; i < pts.n; ++i) {
      knn_row(pts, k, i, scratch, nbr.data() + i * k, dist2.data() + i * k);
    }
  }
}

}  // namespace cslce::kernels::omp
