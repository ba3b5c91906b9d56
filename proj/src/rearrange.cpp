#include "theta/rearrange.hpp"

#include <algorithm>
#include <map>

#include "theta/errors.hpp"

namespace theta {

std::vector<GLFactor> Rearranged::factors() const {
  std::vector<GLFactor> out;
  out.reserve(prefix.size() + suffix.size() + 1);
  for (const auto& s : prefix) out.push_back(GLFactor::delta(s));
  if (!zeta.empty()) out.push_back(GLFactor::zeta(zeta));
  for (const auto& s : suffix) out.push_back(GLFactor::delta(s));
  return out;
}

// Rung candidates below the top obey line 10's exceptional clause: a start
// plus end of 1 is skipped unless the rung is the singleton [1/2,1/2].
static bool excluded_rung(const Segment& s) {
  if ((s.a + s.b).doubled() != 2) return false;
  return !(s.a == HalfInt::halves(1) && s.b == HalfInt::halves(1));
}

static void require_sorted(const std::vector<Segment>& segs) {
  if (!is_sorted_run(segs))
    throw precondition_error("block is not sorted per the segment order");
}

static void require_class(const AlphaBlock& block, HalfInt k) {
  if (!same_class(k, block.alpha))
    throw precondition_error("k = " + k.str() + " is not in class alpha = " +
                             block.alpha.str());
}

// Index of the shortest segment ending in k, or npos.
static size_t shortest_ending(const std::vector<Segment>& segs, HalfInt k) {
  size_t best = segs.size();
  for (size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].empty() || segs[i].b != k) continue;
    if (best == segs.size() || segs[i].a > segs[best].a) best = i;
  }
  return best;
}

static Rearranged zero_iterations(const AlphaBlock& block, HalfInt k) {
  Rearranged r;
  r.alpha = block.alpha;
  r.prefix = delta_segments(block);
  r.zeta = Segment::empty_at(k + 1);
  r.k = k;
  r.iterations = 0;
  return r;
}

Rearranged run_algorithm(const AlphaBlock& block, HalfInt k, bool want_trace,
                         AlgTrace* trace_out) {
  validate_block(block);
  require_class(block, k);
  std::vector<Segment> segs = delta_segments(block);
  require_sorted(segs);

  AlgTrace trace;
  if (want_trace) {
    trace.input = block.factors;
    trace.k = k;
  }

  size_t start = shortest_ending(segs, k);
  if (start == segs.size()) {
    Rearranged r = zero_iterations(block, k);
    if (want_trace && trace_out) {
      trace.output = r.factors();
      *trace_out = trace;
    }
    return r;
  }

  std::vector<GLFactor> w;
  w.reserve(segs.size() + 1);
  for (const auto& s : segs) w.push_back(GLFactor::delta(s));

  HalfInt b = segs[start].a;
  HalfInt e = k;
  if (want_trace) trace.initial = segs[start];

  // Form the first L in place of the chosen segment (zeta part empty).
  size_t pos = start;
  w[pos] = GLFactor::lq(Segment::empty_at(e + 1), Segment(b, e));

  for (;;) {
    AlgIteration it;
    it.l_factor = w[pos];
    if (want_trace) it.after6 = w;

    // line 7: move L right past segments [a,e] with a <= b
    while (pos + 1 < w.size() && w[pos + 1].kind == GLFactor::Kind::Delta &&
           w[pos + 1].seg.b == e && w[pos + 1].seg.a <= b) {
      std::swap(w[pos], w[pos + 1]);
      ++pos;
    }
    if (want_trace) it.after7 = w;

    // line 8: move L right past segments [c,e-1] with c >= b
    while (pos + 1 < w.size() && w[pos + 1].kind == GLFactor::Kind::Delta &&
           w[pos + 1].seg.b == e - 1 && w[pos + 1].seg.a >= b) {
      std::swap(w[pos], w[pos + 1]);
      ++pos;
    }
    if (want_trace) it.after8 = w;

    // line 9: L -> delta(b, e-1) x zeta(e, k)
    {
      std::vector<GLFactor> repl;
      Segment shortened(b, e - 1);
      if (!shortened.empty()) repl.push_back(GLFactor::delta(shortened));
      repl.push_back(GLFactor::zeta(Segment(e, k)));
      w.erase(w.begin() + static_cast<long>(pos));
      w.insert(w.begin() + static_cast<long>(pos), repl.begin(), repl.end());
    }
    if (want_trace) it.after9 = w;

    // line 10
    std::optional<HalfInt> a;
    for (const auto& f : w) {
      if (f.kind != GLFactor::Kind::Delta || f.seg.empty()) continue;
      if (f.seg.b != e - 1 || !(f.seg.a < b)) continue;
      if (e != HalfInt::halves(3) && f.seg.a == HalfInt(2) - e) continue;
      if (!a || f.seg.a > *a) a = f.seg.a;
    }
    if (a) it.next_aeb = {{*a, e - 1, *a}};
    if (want_trace) trace.iterations.push_back(it);
    if (!a) break;

    e = e - 1;
    b = *a;

    // lines 5/6 of the next iteration: consume zeta and the chosen delta
    size_t zpos = 0;
    while (w[zpos].kind != GLFactor::Kind::Zeta) ++zpos;
    size_t dpos = zpos + 1;
    while (!(w[dpos].kind == GLFactor::Kind::Delta &&
             w[dpos].seg == Segment(b, e)))
      ++dpos;
    Segment zseg = w[zpos].seg;
    w.erase(w.begin() + static_cast<long>(dpos));
    w[zpos] = GLFactor::lq(zseg, Segment(b, e));
    pos = zpos;
  }

  // Split the final state at the zeta.
  Rearranged r;
  r.alpha = block.alpha;
  r.k = k;
  size_t zpos = 0;
  while (w[zpos].kind != GLFactor::Kind::Zeta) ++zpos;
  r.zeta = w[zpos].seg;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i == zpos) continue;
    (i < zpos ? r.prefix : r.suffix).push_back(w[i].seg);
  }
  r.iterations = (k - (r.zeta.a - 1)).whole();
  if (want_trace && trace_out) {
    trace.output = r.factors();
    *trace_out = trace;
  }
  return r;
}

Ladder longest_ladder(const AlphaBlock& block, HalfInt k) {
  validate_block(block);
  require_class(block, k);
  std::vector<Segment> segs = delta_segments(block);
  require_sorted(segs);

  size_t top = shortest_ending(segs, k);
  if (top == segs.size()) return {};

  // Greedy downward extension: the narrowest admissible segment at each end
  // maximizes ladder length and minimizes the width vector top-first.
  std::vector<Segment> rungs{segs[top]};
  for (;;) {
    const Segment& cur = rungs.back();
    HalfInt d = cur.b - 1;
    std::optional<Segment> best;
    for (const auto& s : segs) {
      if (s.empty() || s.b != d || !(s.a < cur.a)) continue;
      if (excluded_rung(s)) continue;
      if (!best || s.a > best->a) best = s;
    }
    if (!best) break;
    rungs.push_back(*best);
  }
  std::reverse(rungs.begin(), rungs.end());
  return {rungs};
}

Rearranged ladder_transform(const AlphaBlock& block, HalfInt k) {
  Ladder lad = longest_ladder(block, k);
  if (lad.rungs.empty()) return zero_iterations(block, k);

  std::vector<Segment> rest = delta_segments(block);
  for (const auto& rung : lad.rungs) {
    auto it = std::find(rest.begin(), rest.end(), rung);
    rest.erase(it);
  }
  std::vector<Segment> shortened;
  for (const auto& rung : lad.rungs) {
    Segment s(rung.a, rung.b - 1);
    if (!s.empty()) shortened.push_back(s);
  }
  rest.insert(rest.end(), shortened.begin(), shortened.end());
  rest = sort_segments(rest);

  // zeta(d_1, k) goes immediately right of every copy of the shortened
  // bottom rung; with an empty bottom its conventional sort key is used.
  const Segment& bottom = lad.rungs.front();
  Segment bottom_key(bottom.a, bottom.b - 1);

  Rearranged r;
  r.alpha = block.alpha;
  r.k = k;
  r.zeta = Segment(bottom.b, k);
  r.iterations = lad.length();
  for (const auto& s : rest) {
    if (compare_lex(s, bottom_key) != std::strong_ordering::less)
      r.prefix.push_back(s);
    else
      r.suffix.push_back(s);
  }
  return r;
}

int len_k(const AlphaBlock& block, HalfInt k) {
  return longest_ladder(block, k).length();
}

static void validate_rearranged(const Rearranged& r) {
  std::vector<Segment> all = r.prefix;
  all.insert(all.end(), r.suffix.begin(), r.suffix.end());
  if (!is_sorted_run(all))
    throw validation_error("prefix ++ suffix is not non-increasing");
  for (const auto& s : all)
    if (s.empty())
      throw validation_error("explicit empty segment in a rearranged block");
  if (r.iterations < 0)
    throw validation_error("negative iteration count");
  if (r.iterations == 0) {
    if (!r.zeta.empty())
      throw validation_error("zero iterations with a non-empty zeta");
    return;
  }
  if (r.zeta.empty() || r.zeta.b != r.k)
    throw validation_error("zeta must be [b_j+1, k]");
  if ((r.k - (r.zeta.a - 1)).whole() != r.iterations)
    throw validation_error("iteration count does not match the zeta");
}

// The last altered segment [a_j, b_j]: the prefix entry next to the zeta
// when it ends in b_j, otherwise the empty segment [b_j+1, b_j].
static Segment bottom_of(const Rearranged& r) {
  HalfInt b_j = r.zeta.a - 1;
  if (!r.prefix.empty() && r.prefix.back().b == b_j) return r.prefix.back();
  return Segment::empty_at(b_j + 1);
}

Ladder inverse_ladder(const Rearranged& r) {
  validate_rearranged(r);
  if (r.iterations == 0) return {};
  HalfInt b_j = r.zeta.a - 1;
  int t = r.iterations;

  std::vector<Segment> rungs{bottom_of(r)};
  bool padding = rungs.front().empty();
  for (int i = 1; i < t; ++i) {
    HalfInt d = b_j + i;
    std::optional<Segment> best;
    if (!padding) {
      // widest prefix segment ending in d with start above the previous rung
      for (const auto& s : r.prefix) {
        if (s.b != d || !(s.a > rungs.back().a)) continue;
        if (!best || s.a < best->a) best = s;
      }
    }
    if (!best) {
      padding = true;
      best = Segment::empty_at(d + 1);
    }
    rungs.push_back(*best);
  }
  return {rungs};
}

std::optional<AlphaBlock> invert(const Rearranged& r) {
  validate_rearranged(r);
  if (r.iterations == 0)
    return make_delta_block(r.alpha, r.prefix);

  Segment bottom = bottom_of(r);
  // Recognizability, first test: the factor just right of the zeta may not
  // equal the last altered one (line 8 would have moved it left).
  if (!r.suffix.empty() && !bottom.empty() && bottom == r.suffix.front())
    return std::nullopt;

  Ladder lad = inverse_ladder(r);
  std::vector<Segment> rest = r.prefix;
  for (const auto& rung : lad.rungs) {
    if (rung.empty()) continue;
    rest.erase(std::find(rest.begin(), rest.end(), rung));
  }
  std::vector<Segment> rebuilt = rest;
  rebuilt.insert(rebuilt.end(), r.suffix.begin(), r.suffix.end());
  for (const auto& rung : lad.rungs)
    rebuilt.push_back(Segment(rung.a, rung.b + 1));

  // Second test: the lengthened top rung must be the shortest segment
  // ending in k.
  Segment top(lad.rungs.back().a, lad.rungs.back().b + 1);
  for (const auto& s : rebuilt)
    if (!s.empty() && s.b == r.k && s.a > top.a) return std::nullopt;

  return make_delta_block(r.alpha, sort_segments(rebuilt));
}

std::vector<GLFactor> transform_T(const Rearranged& r, int shorten,
                                  int shift) {
  validate_rearranged(r);
  if (shorten == 0 && shift == 0) return r.factors();
  if (shorten < 0 || shift < 0 || shorten > r.iterations)
    throw invalid_parameter_error("T(" + std::to_string(shorten) + "," +
                                  std::to_string(shift) +
                                  ") is out of range for this output");

  HalfInt b_j = r.zeta.a - 1;
  HalfInt b_prime = r.k - shorten;
  Ladder lad = inverse_ladder(r);
  const Segment& altered = lad.rungs[static_cast<size_t>(
      (b_prime - b_j).whole())];
  if (altered.empty())
    throw invalid_parameter_error("no altered segment ends in " +
                                  b_prime.str());

  std::vector<Segment> deltas = r.prefix;
  deltas.insert(deltas.end(), r.suffix.begin(), r.suffix.end());
  const size_t total = deltas.size();

  // rightmost prefix occurrence of the altered segment
  size_t ppos = r.prefix.size();
  for (size_t i = 0; i < r.prefix.size(); ++i)
    if (r.prefix[i] == altered) ppos = i;
  // 1-based index counted from the right end of the delta list
  int p = static_cast<int>(total - ppos);
  int j_prime = p - shift;
  if (j_prime < 0)
    throw invalid_parameter_error("shift exceeds the index of the altered "
                                  "segment");

  size_t insert_at =
      j_prime == 0 ? total : total - static_cast<size_t>(j_prime) + 1;
  std::vector<GLFactor> out;
  out.reserve(total + 1);
  for (size_t i = 0; i < total; ++i) {
    if (i == insert_at)
      out.push_back(GLFactor::zeta(Segment(b_prime + 1, r.k)));
    out.push_back(GLFactor::delta(deltas[i]));
  }
  if (insert_at >= total)
    out.push_back(GLFactor::zeta(Segment(b_prime + 1, r.k)));
  return out;
}

ReduceStep reduce_step(const std::vector<GLFactor>& factors, HalfInt alpha) {
  // Split at the zeta; reject shapes the algorithm cannot emit.
  std::vector<Segment> prefix, suffix;
  std::optional<Segment> zeta;
  for (const auto& f : factors) {
    switch (f.kind) {
      case GLFactor::Kind::Delta:
        if (f.seg.empty()) return {ReduceCase::NotAnOutput, {}, {}};
        (zeta ? suffix : prefix).push_back(f.seg);
        break;
      case GLFactor::Kind::Zeta:
        if (zeta) return {ReduceCase::NotAnOutput, {}, {}};
        if (!f.seg.empty()) zeta = f.seg;
        break;
      case GLFactor::Kind::LQ:
        return {ReduceCase::NotAnOutput, {}, {}};
    }
  }

  if (!zeta) {
    std::vector<Segment> all = prefix;
    all.insert(all.end(), suffix.begin(), suffix.end());
    if (!is_sorted_run(all)) return {ReduceCase::NotAnOutput, {}, {}};
    return {ReduceCase::Base, {}, factors};
  }

  Rearranged r;
  r.alpha = alpha;
  r.prefix = prefix;
  r.suffix = suffix;
  r.zeta = *zeta;
  r.k = zeta->b;
  r.iterations = (r.k - (zeta->a - 1)).whole();
  if (r.iterations < 1) return {ReduceCase::NotAnOutput, {}, {}};

  try {
    if (!invert(r)) return {ReduceCase::NotAnOutput, {}, {}};
  } catch (const error&) {
    return {ReduceCase::NotAnOutput, {}, {}};
  }

  HalfInt k = r.k;
  auto rebuild = [](const std::vector<Segment>& pre, Segment z,
                    const std::vector<Segment>& suf) {
    std::vector<GLFactor> out;
    for (const auto& s : pre) out.push_back(GLFactor::delta(s));
    if (!z.empty()) out.push_back(GLFactor::zeta(z));
    for (const auto& s : suf) out.push_back(GLFactor::delta(s));
    return out;
  };

  // Case 1: the leading factor does not end in k.
  if (!prefix.empty() && prefix.front().b != k) {
    Segment lead = prefix.front();
    size_t m = 0;
    while (m < prefix.size() && prefix[m] == lead) ++m;
    ReduceStep step;
    step.kind = ReduceCase::Case1;
    step.delta.assign(m, lead);
    std::vector<Segment> rest(prefix.begin() + static_cast<long>(m),
                              prefix.end());
    step.residual = rebuild(rest, *zeta, suffix);
    return step;
  }

  // Case 2: k = b_r (or the zeta itself leads). The subcase is read off the
  // top of the inverse ladder: [c_t, k] with c_t = k means the initial
  // iteration consumed [k, k].
  Ladder lad = inverse_ladder(r);
  HalfInt c_t = lad.rungs.back().a;

  if (c_t == k) {
    // Case 2.2: extract the [k,k] copies (the consumed one plus any leading
    // ones) and shorten the zeta.
    size_t lead_kk = 0;
    while (lead_kk < prefix.size() && prefix[lead_kk] == Segment(k, k))
      ++lead_kk;
    ReduceStep step;
    step.kind = ReduceCase::Case22;
    step.delta.assign(lead_kk + 1, Segment(k, k));
    std::vector<Segment> rest(prefix.begin() + static_cast<long>(lead_kk),
                              prefix.end());
    step.residual = rebuild(rest, Segment(zeta->a, k - 1), suffix);
    return step;
  }

  // Case 2.1: [c, k-1] the shortest segment ending in k-1; remove its copies
  // and the copies of [c, k], re-adding one [k,k] per removed [c,k].
  std::optional<HalfInt> c;
  for (const auto& s : prefix)
    if (s.b == k - 1 && (!c || s.a > *c)) c = s.a;
  for (const auto& s : suffix)
    if (s.b == k - 1 && (!c || s.a > *c)) c = s.a;
  if (!c) return {ReduceCase::NotAnOutput, {}, {}};

  Segment short_seg(*c, k - 1), long_seg(*c, k);
  size_t m1 = 0, m2 = 0;
  std::vector<Segment> new_prefix, new_suffix;
  for (const auto& s : prefix) {
    if (s == long_seg) {
      ++m1;
    } else if (s == short_seg) {
      ++m2;
    } else {
      new_prefix.push_back(s);
    }
  }
  for (const auto& s : suffix) {
    if (s == short_seg) {
      ++m2;
    } else {
      new_suffix.push_back(s);
    }
  }
  new_prefix.insert(new_prefix.begin(), m1, Segment(k, k));

  ReduceStep step;
  step.kind = ReduceCase::Case21;
  step.delta.assign(m1 + m2, short_seg);
  step.residual = rebuild(new_prefix, *zeta, new_suffix);
  return step;
}

}  // namespace theta
