#pragma once

// Small test graphs: every double occurrence word up to rotation, reflection
// and renaming, and random 4-regular multigraphs from slot matchings.

#include <cstddef>
#include <random>
#include <vector>

#include "lcgf2/circuits.hpp"

namespace lcgf2::corpus {

/// Number of double occurrence words on n letters with letters introduced in
/// order, (2n-1)!!.
std::size_t normalized_word_count(std::size_t n);

/// Words on letters a, b, ... (n <= 26), one per class under rotation,
/// reflection and renaming; each is the least first-appearance normal form
/// in its class. Sorted.
std::vector<CyclicWord> canonical_words(std::size_t n);

/// canonical_words(1) ... canonical_words(max_n).
std::vector<CyclicWord> words_up_to(std::size_t max_n);

/// Uniform random perfect matching on 4n slots; vertices named v0, v1, ...
/// The graph may be disconnected and may carry loops and parallel edges.
GraphPtr random_graph(std::size_t n, std::mt19937_64& rng);

}  // namespace lcgf2::corpus
