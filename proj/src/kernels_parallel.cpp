#include <cmath>
#include <cstdint>
#include <vector>

#include "keylift/kernels.hpp"
#include "kernels_common.hpp"

namespace keylift::kernels {

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

// Upper-triangle pair index -> (i, j) with i <= j.
inline void unflatten(std::size_t t, std::size_t k, std::size_t& i, std::size_t& j) {
  i = 0;
  std::size_t row_len = k;
  while (t >= row_len) {
    t -= row_len;
    --row_len;
    ++i;
  }
  j = i + t;
}

}  // namespace

std::vector<double> pmi_matrix_parallel(const CorpusIndex& index, std::span<const Phrase> phrases,
                                        double floor) {
  const std::size_t k = phrases.size();
  std::vector<std::vector<std::uint32_t>> docs(k);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(k); ++i)
    docs[static_cast<std::size_t>(i)] = index.matching_docs(phrases[static_cast<std::size_t>(i)]);

  std::vector<double> matrix(k * k, 0.0);
  const std::size_t pairs = k * (k + 1) / 2;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(pairs); ++t) {
    std::size_t i = 0;
    std::size_t j = 0;
    unflatten(static_cast<std::size_t>(t), k, i, j);
    const double value = detail::pmi_entry(docs[i], docs[j], index.doc_count(), floor, i == j);
    matrix[i * k + j] = value;
    matrix[j * k + i] = value;
  }
  return matrix;
}

std::vector<double> cosine_matrix_parallel(const std::vector<double>& features, std::size_t k) {
  std::vector<double> norms(k, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(k); ++i) {
    const std::span<const double> row{features.data() + static_cast<std::size_t>(i) * k, k};
    norms[static_cast<std::size_t>(i)] = std::sqrt(detail::dot(row, row));
  }
  std::vector<double> matrix(k * k, 0.0);
  const std::size_t pairs = k * (k + 1) / 2;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(pairs); ++t) {
    std::size_t i = 0;
    std::size_t j = 0;
    unflatten(static_cast<std::size_t>(t), k, i, j);
    const std::span<const double> row_i{features.data() + i * k, k};
    const std::span<const double> row_j{features.data() + j * k, k};
    const double value = detail::cosine_entry(row_i, row_j, norms[i], norms[j], i == j);
    matrix[i * k + j] = value;
    matrix[j * k + i] = value;
  }
  return matrix;
}

}  // namespace keylift::kernels
