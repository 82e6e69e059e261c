#pragma once

// Shared helpers for the serial and OpenMP kernel variants. Both variants
// call the same per-entry functions so their outputs are bit-identical.

#include <cstdint>
#include <span>
#include <vector>

#include "keylift/corpus_index.hpp"
#include "keylift/phrase.hpp"
#include "keylift/similarity.hpp"

namespace keylift::kernels::detail {

inline std::uint64_t intersection_size(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) {
  std::uint64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Floored PMI between phrases i and j given their matching-document sets.
inline double pmi_entry(const std::vector<std::uint32_t>& docs_i,
                        const std::vector<std::uint32_t>& docs_j, std::uint64_t doc_count,
                        double floor, bool diagonal) {
  const std::uint64_t df_i = docs_i.size();
  const std::uint64_t df_j = docs_j.size();
  const std::uint64_t co = diagonal ? df_i : intersection_size(docs_i, docs_j);
  const PmiScore score = pmi_from_counts(df_i, df_j, co, doc_count, floor);
  return score.defined() ? score.value : floor;
}

inline double dot(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

// Cosine entry given precomputed row norms; zero rows pair at -1.
inline double cosine_entry(std::span<const double> row_i, std::span<const double> row_j,
                           double norm_i, double norm_j, bool diagonal) {
  if (norm_i == 0.0 || norm_j == 0.0) return -1.0;
  if (diagonal) return 1.0;
  return dot(row_i, row_j) / (norm_i * norm_j);
}

}  // namespace keylift::kernels::detail
