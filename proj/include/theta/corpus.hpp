#pragma once

#include <functional>
#include <vector>

#include "theta/block.hpp"

namespace theta {

// Enumeration bounds: all multisets of at most max_segments non-empty
// segments with both endpoints between -max_end and max_end in the class
// alpha + Z.
struct CorpusBounds {
  int max_segments = 4;
  HalfInt max_end = 3;
  HalfInt alpha = 0;
};

// Exact number of blocks the bounds generate.
unsigned long long corpus_count(const CorpusBounds& bounds);

// Deterministic stream: sizes ascending, then lexicographic in the segment
// order; each block arrives sorted. Throws invalid_parameter_error with the
// estimated count when it exceeds `cap`.
void for_each_block(const CorpusBounds& bounds,
                    const std::function<void(const AlphaBlock&)>& fn,
                    unsigned long long cap = 5'000'000);

std::vector<AlphaBlock> enumerate_corpus(const CorpusBounds& bounds,
                                         unsigned long long cap = 5'000'000);

}  // namespace theta
