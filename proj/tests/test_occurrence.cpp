#include "doctest.h"
#include "theta/checks.hpp"
#include "theta/corpus.hpp"
#include "theta/errors.hpp"
#include "theta/occurrence.hpp"

using namespace theta;

namespace {

Segment seg(int a, int b) { return Segment(HalfInt(a), HalfInt(b)); }

StandardModule sp_module(std::initializer_list<Segment> segs, int l,
                         std::map<int, int> mult = {},
                         std::optional<int> n = std::nullopt) {
  StandardModule m;
  m.pair = DualPair::SpOeven;
  m.block = make_delta_block(0, std::vector<Segment>(segs));
  m.tempered = TemperedToken::atom("tau", l, std::move(mult), Side::W);
  m.n = n;
  return m;
}

}  // namespace

TEST_CASE("first occurrence of the section-6 example") {
  StandardModule m =
      sp_module({seg(4, 5), seg(3, 4), seg(2, 3), seg(1, 2)}, 3, {{3, 1}});
  OccurrenceReport rep = first_occurrence(m);
  CHECK(rep.f == 4);
  CHECK(rep.l_down == 11);
  CHECK(rep.l_up == -13);
  CHECK(rep.witness ==
        std::vector<Segment>{seg(1, 2), seg(2, 3), seg(3, 4), seg(4, 5)});
}

TEST_CASE("character-chain paradigm: a single rung above l(tau)") {
  // L(chi|.|^1; tau) with l(tau) = 1 has l(pi) = 3
  StandardModule m = sp_module({seg(1, 1)}, 1, {{1, 1}});
  OccurrenceReport rep = first_occurrence(m);
  CHECK(rep.f == 1);
  CHECK(rep.l_down == 3);
}

TEST_CASE("even multiplicity blocks the Steinberg bottom rung") {
  // block of copies of St_{l+1} nu^{1/2} with m_phi(chi_V S_l) even
  StandardModule m = sp_module({seg(-1, 2), seg(-1, 2)}, 3, {{3, 2}});
  OccurrenceReport rep = first_occurrence(m);
  CHECK(rep.f == 0);
  CHECK(rep.l_down == 3);
  // with odd multiplicity the same block contributes
  StandardModule modd = sp_module({seg(-1, 2), seg(-1, 2)}, 3, {{3, 1}});
  CHECK(first_occurrence(modd).f == 1);
}

TEST_CASE("empty block gives f = 0") {
  CHECK(first_occurrence(sp_module({}, 3, {{3, 1}})).l_down == 3);
  OccurrenceReport rep = first_occurrence(sp_module({}, -1));
  CHECK(rep.f == 0);
  CHECK(rep.l_down == -1);
  CHECK(rep.l_up == -1);
}

TEST_CASE("missing multiplicity entry is an error when it matters") {
  StandardModule m = sp_module({seg(0, 1)}, 1);
  CHECK_THROWS_AS(first_occurrence(m), attributes_required_error);
  // ... but irrelevant entries are not consulted
  StandardModule ok = sp_module({seg(1, 1)}, 1);
  CHECK(first_occurrence(ok).l_down == 3);
}

TEST_CASE("nonzero levels on both towers") {
  StandardModule m =
      sp_module({seg(4, 5), seg(3, 4), seg(2, 3), seg(1, 2)}, 3, {{3, 1}});
  LevelSet down = nonzero_levels(m, Tower::Down);
  CHECK(down.contains(11));
  CHECK(down.contains(9));
  CHECK(down.contains(-1));
  CHECK(!down.contains(13));
  CHECK(!down.contains(10));  // wrong parity
  LevelSet up = nonzero_levels(m, Tower::Up);
  CHECK(up.contains(-13));
  CHECK(up.contains(-15));
  CHECK(!up.contains(-11));
}

TEST_CASE("l(tau) = -1 forces both towers to start at -1") {
  LevelSet down = nonzero_levels(sp_module({seg(1, 2)}, -1), Tower::Down);
  LevelSet up = nonzero_levels(sp_module({seg(1, 2)}, -1), Tower::Up);
  CHECK(down.max_level == -1);
  CHECK(up.max_level == -1);
}

TEST_CASE("conservation identity with dimensions") {
  StandardModule m = sp_module({seg(2, 3), seg(1, 2)}, 1, {{1, 1}}, 8);
  OccurrenceReport rep = first_occurrence(m);
  CHECK(rep.l_up + rep.l_down == -2);
  REQUIRE(rep.m_down.has_value());
  CHECK(*rep.m_down + *rep.m_up == 2 * 8 + 2 * m.epsilon + 2);
  CHECK(*rep.m_down == 8 + 1 - rep.l_down);
}

TEST_CASE("dynamic program equals the exhaustive oracle on a corpus") {
  for (HalfInt alpha : {HalfInt(0), HalfInt::halves(1)}) {
    CorpusBounds bounds{3, 2, alpha};
    std::vector<int> ls =
        alpha == HalfInt(0) ? std::vector<int>{-1, 1, 3} : std::vector<int>{0, 2};
    for_each_block(bounds, [&](const AlphaBlock& b) {
      if (!block_positive(b)) return;
      for (int l : ls) {
        for (int count : {1, 2}) {
          if (l <= 0 && count == 2) continue;
          std::map<int, int> mult;
          if (l > 0) mult[l] = count;
          StandardModule m;
          m.pair = alpha == HalfInt(0) ? DualPair::SpOeven : DualPair::MpOodd;
          m.block = b;
          m.tempered = TemperedToken::atom("tau", l, mult, Side::W);
          int f = first_occurrence(m).f;
          int oracle = occurrence_oracle_f(delta_segments(b), l,
                                           l > 0 && count % 2 == 0);
          CHECK(f == oracle);
        }
      }
    });
  }
}

TEST_CASE("adding a segment never decreases f") {
  CorpusBounds bounds{2, 2, 0};
  std::vector<Segment> extras{seg(1, 1), seg(2, 2), seg(1, 2), seg(2, 3)};
  for_each_block(bounds, [&](const AlphaBlock& b) {
    if (!block_positive(b)) return;
    StandardModule m = sp_module({}, 1, {{1, 1}});
    m.block = b;
    int f0 = first_occurrence(m).f;
    for (const auto& extra : extras) {
      std::vector<Segment> segs = delta_segments(b);
      segs.push_back(extra);
      StandardModule m2 = sp_module({}, 1, {{1, 1}});
      m2.block = make_delta_block(0, sort_segments(segs));
      CHECK(first_occurrence(m2).f >= f0);
    }
  });
}

TEST_CASE("l(tau) = -1 degenerates the general formula to the special case") {
  // Condition (iii) would pin the bottom end to 0, and no block of a
  // standard module has a segment ending there; the chain count vanishes.
  CorpusBounds bounds{3, 2, 0};
  for_each_block(bounds, [&](const AlphaBlock& b) {
    if (!block_positive(b)) return;
    CHECK(longest_chain(delta_segments(b), HalfInt(0), std::nullopt) == 0);
  });
}

TEST_CASE("witness satisfies the four conditions literally") {
  StandardModule m =
      sp_module({seg(4, 5), seg(2, 4), seg(3, 4), seg(2, 3), seg(1, 2)}, 3,
                {{3, 2}});
  OccurrenceReport rep = first_occurrence(m);
  REQUIRE(!rep.witness.empty());
  CHECK(rep.witness.front().b == HalfInt(2));            // (iii)
  CHECK(rep.witness.front().a != HalfInt(-1));           // (iv), even mult
  for (size_t i = 0; i + 1 < rep.witness.size(); ++i) {
    CHECK(rep.witness[i + 1].b == rep.witness[i].b + 1);  // (i)
    CHECK(rep.witness[i].a < rep.witness[i + 1].a);       // (ii)
  }
}
