#include "theta/corpus.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::vector<Segment> base_segments(const CorpusBounds& b) {
  std::vector<Segment> out;
  HalfInt lo = -b.max_end;
  // smallest value of the class alpha + Z that is >= lo
  HalfInt start = lo;
  if (!same_class(start, b.alpha)) start = start + HalfInt::halves(1);
  for (HalfInt a = start; a <= b.max_end; a = a + 1)
    for (HalfInt bb = a; bb <= b.max_end; bb = bb + 1)
      out.push_back(Segment(a, bb));
  // ascending in the segment order, so multiset tuples are canonical
  std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
    return compare_lex(x, y) == std::strong_ordering::less;
  });
  return out;
}

unsigned long long multiset_count(unsigned long long s, int m) {
  // C(s + m - 1, m), saturating
  unsigned long long out = 1;
  for (int i = 1; i <= m; ++i) {
    out = out * (s + static_cast<unsigned long long>(m - i));
    out /= static_cast<unsigned long long>(i);
    if (out > (1ull << 62)) return 1ull << 62;
  }
  return out;
}

}  // namespace

unsigned long long corpus_count(const CorpusBounds& bounds) {
  const auto segs = base_segments(bounds);
  unsigned long long total = 0;
  for (int m = 0; m <= bounds.max_segments; ++m)
    total += multiset_count(segs.size(), m);
  return total;
}

void for_each_block(const CorpusBounds& bounds,
                    const std::function<void(const AlphaBlock&)>& fn,
                    unsigned long long cap) {
  if (bounds.max_segments < 0)
    throw invalid_parameter_error("max_segments must be nonnegative");
  if (bounds.alpha != HalfInt(0) && bounds.alpha != HalfInt::halves(1))
    throw invalid_parameter_error("alpha must be 0 or 1/2");
  unsigned long long total = corpus_count(bounds);
  if (total > cap)
    throw invalid_parameter_error(
        "bounds too large: an estimated " + std::to_string(total) +
        " blocks exceed the cap of " + std::to_string(cap));

  const auto segs = base_segments(bounds);
  std::vector<size_t> pick;
  // non-decreasing index tuples = multisets; emit sorted (descending) blocks
  auto emit = [&] {
    std::vector<Segment> block;
    block.reserve(pick.size());
    for (auto it = pick.rbegin(); it != pick.rend(); ++it)
      block.push_back(segs[*it]);
    fn(make_delta_block(bounds.alpha, block));
  };
  std::function<void(size_t, int)> rec = [&](size_t from, int remaining) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (size_t i = from; i < segs.size(); ++i) {
      pick.push_back(i);
      rec(i, remaining - 1);
      pick.pop_back();
    }
  };
  for (int m = 0; m <= bounds.max_segments; ++m) rec(0, m);
}

std::vector<AlphaBlock> enumerate_corpus(const CorpusBounds& bounds,
                                         unsigned long long cap) {
  std::vector<AlphaBlock> out;
  for_each_block(bounds, [&](const AlphaBlock& b) { out.push_back(b); }, cap);
  return out;
}

}  // namespace theta
