#include <fstream>
#include <sstream>

#include "doctest.h"
#include "theta/checks.hpp"
#include "theta/corpus.hpp"
#include "theta/errors.hpp"
#include "theta/rearrange.hpp"
#include "theta/render.hpp"

using namespace theta;

namespace {

Segment seg(int a, int b) { return Segment(HalfInt(a), HalfInt(b)); }

AlphaBlock block(std::initializer_list<Segment> segs) {
  return make_delta_block(0, std::vector<Segment>(segs));
}

const AlphaBlock& example_32() {
  static AlphaBlock b =
      block({seg(3, 6), seg(5, 5), seg(4, 5), seg(3, 4), seg(2, 4), seg(3, 3),
             seg(1, 3), seg(1, 1)});
  return b;
}

const AlphaBlock& example_38() {
  static AlphaBlock b =
      block({seg(5, 6), seg(4, 5), seg(1, 5), seg(3, 4), seg(2, 4)});
  return b;
}

}  // namespace

TEST_CASE("algorithm reproduces the first worked example") {
  Rearranged r = run_algorithm(example_32(), 5);
  CHECK(r.prefix == std::vector<Segment>{seg(3, 6), seg(4, 5), seg(2, 4),
                                         seg(3, 3), seg(3, 3), seg(1, 2)});
  CHECK(r.zeta == seg(3, 5));
  CHECK(r.suffix == std::vector<Segment>{seg(1, 1)});
  CHECK(r.iterations == 3);
}

TEST_CASE("no segment ending in k means zero iterations") {
  AlphaBlock b = block({seg(1, 1)});
  Rearranged r = run_algorithm(b, 2);
  CHECK(r.iterations == 0);
  CHECK(r.prefix == std::vector<Segment>{seg(1, 1)});
  CHECK(r.zeta.empty());
}

TEST_CASE("algorithm reproduces the ladder example") {
  Rearranged r = run_algorithm(example_38(), 6);
  CHECK(r.prefix == std::vector<Segment>{seg(5, 5), seg(1, 5), seg(4, 4),
                                         seg(2, 4), seg(3, 3)});
  CHECK(r.zeta == seg(4, 6));
  CHECK(r.suffix.empty());
  CHECK(r.iterations == 3);
}

TEST_CASE("algorithm preconditions") {
  AlphaBlock unsorted = block({seg(2, 4), seg(3, 6)});
  CHECK_THROWS_AS(run_algorithm(unsorted, 4), precondition_error);
  CHECK_THROWS_AS(run_algorithm(example_32(), HalfInt::halves(3)),
                  precondition_error);
}

TEST_CASE("trace replay reproduces the output") {
  AlgTrace trace;
  Rearranged r = run_algorithm(example_32(), 5, true, &trace);
  REQUIRE(trace.iterations.size() == 3);
  CHECK(trace.initial == seg(5, 5));
  CHECK(trace.iterations.back().after9 == r.factors());
  CHECK(!trace.iterations.back().next_aeb.has_value());
  // line 10 values of the first two iterations, as in the worked example
  REQUIRE(trace.iterations[0].next_aeb.has_value());
  CHECK((*trace.iterations[0].next_aeb)[0] == HalfInt(3));
  CHECK((*trace.iterations[1].next_aeb)[0] == HalfInt(1));
}

TEST_CASE("longest ladder matches the exhaustive oracle on the examples") {
  // frozen from the exhaustive enumeration oracle
  Ladder l38 = longest_ladder(example_38(), 6);
  CHECK(l38.rungs == std::vector<Segment>{seg(3, 4), seg(4, 5), seg(5, 6)});
  CHECK(l38.rungs == ladder_oracle(delta_segments(example_38()), 6));

  AlphaBlock single = block({seg(2, 4)});
  CHECK(longest_ladder(single, 4).length() == 1);

  AlphaBlock sec6 = block({seg(4, 5), seg(3, 4), seg(2, 3), seg(1, 2)});
  Ladder l6 = longest_ladder(sec6, 5);
  CHECK(l6.rungs ==
        std::vector<Segment>{seg(1, 2), seg(2, 3), seg(3, 4), seg(4, 5)});
  CHECK(l6.rungs == ladder_oracle(delta_segments(sec6), 5));

  CHECK(longest_ladder(block({seg(1, 1)}), 2).length() == 0);
}

TEST_CASE("ladder transform agrees with the algorithm") {
  CHECK(ladder_transform(example_32(), 5) == run_algorithm(example_32(), 5));
  CHECK(ladder_transform(example_38(), 6) == run_algorithm(example_38(), 6));
  // zero-iteration case
  AlphaBlock b = block({seg(1, 1)});
  CHECK(ladder_transform(b, 2) == run_algorithm(b, 2));
}

TEST_CASE("ladder transform equals the algorithm on a corpus") {
  CorpusBounds bounds{3, 2, 0};
  for_each_block(bounds, [&](const AlphaBlock& b) {
    if (!block_positive(b)) return;
    for (const auto& f : b.factors) {
      if (f.seg.empty()) continue;
      HalfInt k = f.seg.b;
      CHECK(run_algorithm(b, k) == ladder_transform(b, k));
      CHECK(len_k(b, k) == run_algorithm(b, k).iterations);
    }
  });
}

TEST_CASE("len_k on the worked examples") {
  CHECK(len_k(example_38(), 6) == 3);
  AlphaBlock pi2 =
      block({seg(5, 6), seg(2, 5), seg(1, 5), seg(4, 4), seg(3, 3)});
  CHECK(len_k(pi2, 6) == 2);
  CHECK(len_k(block({}), 5) == 0);
}

TEST_CASE("line 10's exceptional clause mirrors the ladder constraint") {
  // [0,1] tops a ladder (line 3 has no exclusion) ...
  AlphaBlock st = block({seg(0, 1)});
  Rearranged r = run_algorithm(st, 1);
  CHECK(r.iterations == 1);
  CHECK(ladder_transform(st, 1) == r);
  // ... but [0,1] never continues one: with k=2 the rung [0,1] is skipped
  AlphaBlock two = block({seg(1, 2), seg(0, 1)});
  Ladder lad = longest_ladder(two, 2);
  CHECK(lad.rungs == std::vector<Segment>{seg(1, 2)});
  CHECK(run_algorithm(two, 2).iterations == 1);
  CHECK(run_algorithm(two, 2) == ladder_transform(two, 2));
  // the singleton [1/2,1/2] is the lone exception
  AlphaBlock half = make_delta_block(
      HalfInt::halves(1),
      {Segment(HalfInt::halves(3), HalfInt::halves(3)),
       Segment(HalfInt::halves(1), HalfInt::halves(1))});
  Ladder hl = longest_ladder(half, HalfInt::halves(3));
  CHECK(hl.length() == 2);
  CHECK(run_algorithm(half, HalfInt::halves(3)) ==
        ladder_transform(half, HalfInt::halves(3)));
}

TEST_CASE("invert undoes the algorithm") {
  Rearranged r = run_algorithm(example_32(), 5);
  auto inv = invert(r);
  REQUIRE(inv.has_value());
  CHECK(*inv == example_32());

  // zero-iteration inversion is the identity
  Rearranged r0 = run_algorithm(block({seg(1, 1)}), 2);
  CHECK(*invert(r0) == block({seg(1, 1)}));

  // a fully consumed singleton block needs empty-segment padding
  AlphaBlock single = block({seg(5, 5)});
  Rearranged r1 = run_algorithm(single, 5);
  CHECK(r1.prefix.empty());
  CHECK(*invert(r1) == single);
}

TEST_CASE("recognizability tests reject non-outputs") {
  // (a_j, b_j) = (a_{j-1}, b_{j-1})
  Rearranged bad;
  bad.alpha = 0;
  bad.prefix = {seg(2, 2)};
  bad.zeta = seg(3, 5);
  bad.suffix = {seg(2, 2)};
  bad.k = 5;
  bad.iterations = 3;
  CHECK(!invert(bad).has_value());

  // reconstructed [c_t, k] not the shortest segment ending in k: the block
  // already holds a strictly shorter one
  Rearranged bad2;
  bad2.alpha = 0;
  bad2.prefix = {seg(3, 3), seg(1, 2)};
  bad2.zeta = seg(3, 3);
  bad2.suffix = {};
  bad2.k = 3;
  bad2.iterations = 1;
  CHECK(!invert(bad2).has_value());

  // malformed structure is a hard error
  Rearranged malformed;
  malformed.alpha = 0;
  malformed.prefix = {seg(1, 2), seg(3, 4)};  // increasing: not sorted
  malformed.zeta = seg(5, 5);
  malformed.k = 5;
  malformed.iterations = 1;
  CHECK_THROWS_AS(invert(malformed), validation_error);
}

TEST_CASE("invert(run_algorithm) round-trips on a corpus") {
  CorpusBounds bounds{3, 2, 0};
  for_each_block(bounds, [&](const AlphaBlock& b) {
    if (!block_positive(b)) return;
    for (const auto& f : b.factors) {
      if (f.seg.empty()) continue;
      Rearranged r = run_algorithm(b, f.seg.b);
      if (r.iterations < 1) continue;
      auto inv = invert(r);
      REQUIRE(inv.has_value());
      CHECK(*inv == b);
    }
  });
}

TEST_CASE("T-transformation reproduces the displayed example") {
  Rearranged r = run_algorithm(example_38(), 6);
  std::vector<GLFactor> t21 = transform_T(r, 2, 1);
  std::vector<GLFactor> expected{
      GLFactor::delta(seg(5, 5)), GLFactor::delta(seg(1, 5)),
      GLFactor::delta(seg(4, 4)), GLFactor::delta(seg(2, 4)),
      GLFactor::zeta(seg(5, 6)),  GLFactor::delta(seg(3, 3))};
  CHECK(t21 == expected);

  CHECK(transform_T(r, 0, 0) == r.factors());
  CHECK(transform_T(r, r.iterations, 0) == r.factors());

  // shift past the left end of the sequence, and shortening past the
  // iteration count, are rejected
  CHECK_THROWS_AS(transform_T(r, 1, 6), invalid_parameter_error);
  CHECK_THROWS_AS(transform_T(r, 5, 0), invalid_parameter_error);
}

TEST_CASE("reduction chain of the induction example") {
  // delta[4,5] x delta[2,4] x |.|^3 x zeta(4,5)
  std::vector<GLFactor> seq{
      GLFactor::delta(seg(4, 5)), GLFactor::delta(seg(2, 4)),
      GLFactor::delta(seg(3, 3)), GLFactor::zeta(seg(4, 5))};

  ReduceStep s1 = reduce_step(seq, 0);
  CHECK(s1.kind == ReduceCase::Case22);
  CHECK(s1.delta == std::vector<Segment>{seg(5, 5)});
  CHECK(s1.residual ==
        std::vector<GLFactor>{GLFactor::delta(seg(4, 5)),
                              GLFactor::delta(seg(2, 4)),
                              GLFactor::delta(seg(3, 3)),
                              GLFactor::zeta(seg(4, 4))});

  ReduceStep s2 = reduce_step(s1.residual, 0);
  CHECK(s2.kind == ReduceCase::Case1);
  CHECK(s2.delta == std::vector<Segment>{seg(4, 5)});

  ReduceStep s3 = reduce_step(s2.residual, 0);
  CHECK(s3.kind == ReduceCase::Case21);
  CHECK(s3.delta == std::vector<Segment>{seg(3, 3)});

  ReduceStep s4 = reduce_step(s3.residual, 0);
  CHECK(s4.kind == ReduceCase::Case22);
  CHECK(s4.delta == std::vector<Segment>{seg(4, 4)});

  ReduceStep s5 = reduce_step(s4.residual, 0);
  CHECK(s5.kind == ReduceCase::Base);
  CHECK(s5.residual == std::vector<GLFactor>{GLFactor::delta(seg(2, 4))});
}

#ifdef THETA_GOLDEN_DIR
TEST_CASE("reduction chain matches its golden file") {
  std::vector<GLFactor> seq{
      GLFactor::delta(seg(4, 5)), GLFactor::delta(seg(2, 4)),
      GLFactor::delta(seg(3, 3)), GLFactor::zeta(seg(4, 5))};
  TemperedToken tau = TemperedToken::atom("tau", -1, {}, Side::W);
  std::ostringstream os;
  os << "input: " << render_factors_pretty(seq) << " ; "
     << render_token_pretty(tau) << "\n";
  for (int guard = 0; guard < 16; ++guard) {
    ReduceStep step = reduce_step(seq, HalfInt(0));
    if (step.kind == ReduceCase::Base) {
      os << "Base: " << render_factors_pretty(step.residual) << " ; "
         << render_token_pretty(tau) << "\n";
      break;
    }
    REQUIRE(step.kind != ReduceCase::NotAnOutput);
    const char* name = step.kind == ReduceCase::Case1
                           ? "Case 1"
                           : step.kind == ReduceCase::Case21 ? "Case 2.1"
                                                             : "Case 2.2";
    std::vector<GLFactor> delta;
    for (const auto& d : step.delta) delta.push_back(GLFactor::delta(d));
    os << name << ": delta = " << render_factors_pretty(delta)
       << "; residual: " << render_factors_pretty(step.residual) << " ; "
       << render_token_pretty(tau) << "\n";
    seq = step.residual;
  }
  std::ifstream golden(std::string(THETA_GOLDEN_DIR) + "/example37_chain.txt",
                       std::ios::binary);
  REQUIRE(golden.good());
  std::ostringstream want;
  want << golden.rdbuf();
  CHECK(os.str() == want.str());
}

TEST_CASE("ladder-example trace matches its golden file") {
  AlgTrace trace;
  run_algorithm(example_38(), 6, true, &trace);
  TemperedToken tau = TemperedToken::atom("tau", -1, {}, Side::W);
  std::ifstream golden(std::string(THETA_GOLDEN_DIR) + "/example38_trace.txt",
                       std::ios::binary);
  REQUIRE(golden.good());
  std::ostringstream want;
  want << golden.rdbuf();
  CHECK(render_trace(trace, tau) == want.str());
}
#endif

TEST_CASE("reduce_step terminates with decreasing factor mass") {
  CorpusBounds bounds{3, 2, 0};
  auto mass = [](const std::vector<GLFactor>& fs) {
    std::pair<int, int> out{0, 0};
    for (const auto& f : fs) {
      ++out.first;
      out.second += f.seg.length();
    }
    return out;
  };
  for_each_block(bounds, [&](const AlphaBlock& b) {
    if (!block_positive(b)) return;
    for (const auto& f : b.factors) {
      if (f.seg.empty()) continue;
      Rearranged r = run_algorithm(b, f.seg.b);
      std::vector<GLFactor> seq = r.factors();
      for (int guard = 0; guard < 64; ++guard) {
        ReduceStep step = reduce_step(seq, b.alpha);
        REQUIRE(step.kind != ReduceCase::NotAnOutput);
        if (step.kind == ReduceCase::Base) break;
        auto before = mass(seq), after = mass(step.residual);
        CHECK(after < before);
        seq = step.residual;
      }
    }
  });
}
