#include <cmath>
#include <vector>

#include "keylift/kernels.hpp"
#include "kernels_common.hpp"

namespace keylift::kernels {

// Reference implementations. Kept deliberately plain; the OpenMP variants in
// kernels_parallel.cpp must match these bit for bit.

std::vector<double> pmi_matrix_serial(const CorpusIndex& index, std::span<const Phrase> phrases,
                                      double floor) {
  const std::size_t k = phrases.size();
  std::vector<std::vector<std::uint32_t>> docs(k);
  for (std::size_t i = 0; i < k; ++i) docs[i] = index.matching_docs(phrases[i]);

  std::vector<double> matrix(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double value = detail::pmi_entry(docs[i], docs[j], index.doc_count(), floor, i == j);
      matrix[i * k + j] = value;
      matrix[j * k + i] = value;
    }
  }
  return matrix;
}

std::vector<double> cosine_matrix_serial(const std::vector<double>& features, std::size_t k) {
  std::vector<double> norms(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::span<const double> row{features.data() + i * k, k};
    norms[i] = std::sqrt(detail::dot(row, row));
  }
  std::vector<double> matrix(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const std::span<const double> row_i{features.data() + i * k, k};
      const std::span<const double> row_j{features.data() + j * k, k};
      const double value = detail::cosine_entry(row_i, row_j, norms[i], norms[j], i == j);
      matrix[i * k + j] = value;
      matrix[j * k + i] = value;
    }
  }
  return matrix;
}

}  // namespace keylift::kernels
