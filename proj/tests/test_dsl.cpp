#include "doctest.h"
#include "theta/corpus.hpp"
#include "theta/dsl.hpp"
#include "theta/errors.hpp"
#include "theta/render.hpp"

using namespace theta;

namespace {
Segment seg(int a, int b) { return Segment(HalfInt(a), HalfInt(b)); }
}

TEST_CASE("parsing the section-6 module") {
  StandardModule m =
      parse_module("pair=SpO; D[4,5] x D[3,4] x D[2,3] x D[1,2] ; tau(l=3)");
  CHECK(m.pair == DualPair::SpOeven);
  CHECK(m.side == Side::W);
  CHECK(delta_segments(m.block) ==
        std::vector<Segment>{seg(4, 5), seg(3, 4), seg(2, 3), seg(1, 2)});
  CHECK(m.tempered.atom_l_down() == 3);
  CHECK(!m.n.has_value());
  CHECK(m.epsilon == 1);
}

TEST_CASE("empty block and negative l") {
  StandardModule m = parse_module("pair=SpO; ; tau(l=-1)");
  CHECK(m.block.factors.empty());
  CHECK(m.tempered.atom_l_down() == -1);
}

TEST_CASE("half-integer block selects the metaplectic pair") {
  StandardModule m = parse_module("pair=MpO; D[1/2,3/2] ; tau(l=0)");
  CHECK(m.kappa() == 2);
  CHECK(m.block.alpha == HalfInt::halves(1));
  CHECK(delta_segments(m.block) ==
        std::vector<Segment>{Segment(HalfInt::halves(1), HalfInt::halves(3))});
}

TEST_CASE("multiplicities, rank datum, xi and side") {
  StandardModule m = parse_module(
      "pair=SpO; side=V; Xi1 x Xi2; D[2,3] x D[1,2]; "
      "tau(l=1, m={1:1, 3:2}, n=7)");
  CHECK(m.side == Side::V);
  CHECK(m.xi == std::vector<std::string>{"Xi1", "Xi2"});
  CHECK(m.tempered.mult() == std::map<int, int>{{1, 1}, {3, 2}});
  CHECK(m.n == 7);
  CHECK(m.epsilon == -1);
}

TEST_CASE("parse renders back to itself") {
  for (const std::string source : {
           "pair=SpO; D[4,5] x D[3,4] x D[2,3] x D[1,2] ; tau(l=3)",
           "pair=SpO; ; tau(l=-1)",
           "pair=MpO; D[1/2,3/2] ; tau(l=0)",
           "pair=SpO; side=V; Xi1 x Xi2; D[2,3] x D[1,2]; "
           "tau(l=1, m={1:1}, n=7)",
           "pair=SpO; D[1,2] x Z[3,4] ; tau(l=1, m={1:1})",
       }) {
    StandardModule m = parse_module(source);
    std::string canonical = render_module_dsl(m);
    StandardModule again = parse_module(canonical);
    CHECK(modules_equal(m, again));
    CHECK(render_module_dsl(again) == canonical);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_module("pair=SpO;\n D[1,2 ; tau(l=1)");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_module("pair=XxX; ; tau(l=1)"), parse_error);
  CHECK_THROWS_AS(parse_module("pair=SpO; ; tau()"), parse_error);
  CHECK_THROWS_AS(parse_module("pair=SpO; ; tau(l=1) rest"), parse_error);
  CHECK_THROWS_AS(parse_module("pair=SpO; ; ; ; tau(l=1)"), parse_error);
}

TEST_CASE("validation failures name the invariant") {
  // alpha/kappa mismatch: integral exponents under the metaplectic pair
  CHECK_THROWS_AS(parse_module("pair=MpO; D[1,2] ; tau(l=0)"),
                  validation_error);
  // multiplicity key with the wrong parity
  CHECK_THROWS_AS(parse_module("pair=SpO; ; tau(l=3, m={2:1})"),
                  validation_error);
  // tempered parity against kappa
  CHECK_THROWS_AS(parse_module("pair=SpO; ; tau(l=2)"), validation_error);
  // non-positive exponents
  CHECK_THROWS_AS(parse_module("pair=SpO; D[-2,1] ; tau(l=1, m={1:1})"),
                  validation_error);
}

TEST_CASE("corpus enumeration is deterministic and duplicate-free") {
  CorpusBounds bounds{1, 1, 0};
  auto blocks = enumerate_corpus(bounds);
  // the empty block plus the six one-segment blocks within the bounds
  REQUIRE(blocks.size() == 7);
  CHECK(blocks[0].factors.empty());
  std::vector<std::vector<Segment>> seen;
  for (const auto& b : blocks) seen.push_back(delta_segments(b));
  for (size_t i = 0; i < seen.size(); ++i)
    for (size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
  // all six singletons are present
  std::vector<Segment> singles;
  for (size_t i = 1; i < blocks.size(); ++i) {
    REQUIRE(blocks[i].factors.size() == 1);
    singles.push_back(blocks[i].factors[0].seg);
  }
  for (const Segment& want :
       {seg(0, 0), seg(1, 1), seg(0, 1), seg(-1, 0), seg(-1, 1), seg(-1, -1)})
    CHECK(std::count(singles.begin(), singles.end(), want) == 1);

  auto again = enumerate_corpus(bounds);
  CHECK(blocks.size() == again.size());
  for (size_t i = 0; i < blocks.size(); ++i) CHECK(blocks[i] == again[i]);
}

TEST_CASE("oversized bounds are refused with an estimate") {
  CorpusBounds huge{6, HalfInt(8), 0};
  CHECK_THROWS_AS(enumerate_corpus(huge, 1000), invalid_parameter_error);
}
