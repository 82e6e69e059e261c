#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "keylift/corpus_index.hpp"
#include "keylift/phrase.hpp"
#include "keylift/similarity.hpp"

namespace keylift::kernels {

// The two hot inner loops, each in a serial reference version and an OpenMP
// version. Every matrix entry is an independent pure function of its inputs,
// so the two versions produce bit-identical results; tests hold them to that
// and keylift-bench compares their throughput.

// k×k row-major floored PMI matrix over `phrases`. Off-diagonal entries are
// pmi(p_i, p_j) with sentinels replaced by `floor`; the diagonal is the
// self-PMI -log2(df/N), or `floor` when df == 0.
std::vector<double> pmi_matrix_serial(const CorpusIndex& index, std::span<const Phrase> phrases,
                                      double floor = kDefaultPmiFloor);
std::vector<double> pmi_matrix_parallel(const CorpusIndex& index, std::span<const Phrase> phrases,
                                        double floor = kDefaultPmiFloor);

// k×k cosine matrix between the rows of a k×k feature matrix. A zero row has
// undefined cosine and pairs at -1 with everything (including itself).
std::vector<double> cosine_matrix_serial(const std::vector<double>& features, std::size_t k);
std::vector<double> cosine_matrix_parallel(const std::vector<double>& features, std::size_t k);

bool openmp_enabled() noexcept;

}  // namespace keylift::kernels
