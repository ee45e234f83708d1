#include "doctest.h"

#include "prosite/error.hpp"
#include "prosite/frame.hpp"
#include "prosite/kernels.hpp"
#include "random.hpp"
#include "support.hpp"

using namespace prosite;
using fixtures::ids;

TEST_CASE("ideal_closure examples") {
  const Proset c = fixtures::chain2();
  const Site trivial(c);
  CHECK(ideal_closure(trivial, ids(c, {"1"})) == ids(c, {"0", "1"}));
  CHECK(ideal_closure(trivial, ElemSet{}).empty());
  const Site d = fixtures::diamond_cover();
  CHECK(ideal_closure(d, ids(d.proset(), {"a", "b"})) == d.proset().all());
}

TEST_CASE("principal_ideal examples") {
  const Proset c = fixtures::chain2();
  CHECK(principal_ideal(Site(c), 1) == c.down(1));
  const Site d = fixtures::diamond_cover();
  CHECK(principal_ideal(d, d.proset().id_of("t")) == d.proset().all());
  CHECK(principal_ideal(d, d.proset().id_of("a")) == ids(d.proset(), {"z", "a"}));
  CHECK(principal_ideal(Site(fixtures::singleton()), 0) == ElemSet(1));
}

TEST_CASE("frame_of_ideals on the chain is a 3-chain") {
  const Frame f = frame_of_ideals(Site(fixtures::chain2()));
  CHECK(f.elements() == std::vector<ElemSet>{ElemSet(0b00), ElemSet(0b01), ElemSet(0b11)});
  CHECK(f.join(1, 2) == 2);
  CHECK(f.meet(1, 2) == 1);
}

TEST_CASE("frame_of_ideals on a singleton has two elements") {
  CHECK(frame_of_ideals(Site(fixtures::singleton())).size() == 2);
}

TEST_CASE("frame_of_ideals on the diamond cover excludes {z,a,b}") {
  const Site d = fixtures::diamond_cover();
  const Frame f = frame_of_ideals(d);
  CHECK_FALSE(f.index_of(ids(d.proset(), {"z", "a", "b"})).has_value());
  CHECK(f.elements() == oracle::ideals(d));
  // frozen from the oracle: the empty set, z, za, zb and everything
  CHECK(f.size() == 5);
  // the join of za and zb is not their union
  const int za = *f.index_of(ids(d.proset(), {"z", "a"})), zb = *f.index_of(ids(d.proset(), {"z", "b"}));
  CHECK(f.element(f.join(za, zb)) == d.proset().all());
}

TEST_CASE("frame_of_ideals honours the ideal cap") {
  const Proset x = close_relation({"a", "b", "c", "d"}, {});
  CHECK_THROWS_AS((void)frame_of_ideals(Site(x), 8), ResourceError);
  CHECK(frame_of_ideals(Site(x), 16).size() == 16);
}

TEST_CASE("frames of random sites match the subset scan and obey the laws") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Site s = testrng::site(rng, 1 + testrng::below(rng, 6), 3);
    const Frame f = frame_of_ideals(s);
    REQUIRE(f.elements() == oracle::ideals(s));
    CHECK_FALSE(frame_law_violation(f).has_value());
    for (ElemSet a : f.elements())
      for (ElemSet b : f.elements()) CHECK(f.index_of(a & b).has_value());
    CHECK(finite_elements(f).size() == static_cast<std::size_t>(f.size()));
    CHECK(is_coherent(f));
    for (int k = 0; k < 5; ++k) {
      const ElemSet u(rng() & s.proset().all().bits()), v(rng() & s.proset().all().bits());
      const ElemSet cu = ideal_closure(s, u);
      CHECK(u.subset_of(cu));
      CHECK(ideal_closure(s, cu) == cu);
      CHECK(cu.subset_of(ideal_closure(s, u | v)));
      CHECK(is_ideal(s, cu));
    }
  }
}

TEST_CASE("serial and parallel table kernels agree") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Site s = testrng::site(rng, 5 + testrng::below(rng, 3), 2);
    const Frame f = frame_of_ideals(s);
    const auto a = kernels::frame_tables_serial(f), b = kernels::frame_tables_parallel(f);
    CHECK(a.join == b.join);
    CHECK(a.meet == b.meet);
    if (f.has_tables()) CHECK(a.join == f.join_table());
  }
}

TEST_CASE("finite elements and coherence of small frames") {
  const Frame chain = frame_of_ideals(Site(fixtures::chain2()));
  CHECK(finite_elements(chain) == std::vector<int>{0, 1, 2});
  CHECK(is_coherent(chain));
  const Frame two = frame_of_ideals(Site(fixtures::singleton()));
  CHECK(finite_elements(two) == std::vector<int>{0, 1});
  CHECK(is_coherent(two));
}

TEST_CASE("frame_map_of_prosite_map examples") {
  const Site d = fixtures::diamond_cover();
  const FrameMap id = frame_map_of_prosite_map(ProsetMap::identity(d.proset()), d, d);
  for (int i = 0; i < id.source->size(); ++i) CHECK(id(i) == i);
  CHECK(preserves_finite_elements(id));

  const Proset one = fixtures::singleton(), chain = fixtures::chain2();
  const FrameMap top = frame_map_of_prosite_map(ProsetMap(one, chain, {1}), Site(one), Site(chain));
  // {} -> {}, {1} -> {0,1}
  CHECK(top.target->element(top(0)) == ElemSet{});
  CHECK(top.target->element(top(1)) == ElemSet(0b11));
  CHECK_FALSE(frame_map_violation(top).has_value());
  CHECK(preserves_finite_elements(top));

  CHECK_THROWS_AS((void)frame_map_of_prosite_map(ProsetMap(one, chain, {0}), Site(one), Site(chain)), ContractError);
}

TEST_CASE("constant-to-top map preserves finite elements") {
  const auto f = std::make_shared<const Frame>(frame_of_ideals(Site(fixtures::chain2())));
  const FrameMap m{f, f, {f->top(), f->top(), f->top()}};
  CHECK(preserves_finite_elements(m));
  CHECK(frame_map_violation(m).has_value());
}

TEST_CASE("product frames obey the frame laws and are coherent") {
  const Frame a = frame_of_ideals(Site(fixtures::chain2()));
  const Frame b = frame_of_ideals(fixtures::diamond_cover());
  const Frame p = product_frame(a, b);
  CHECK(p.size() == a.size() * b.size());
  CHECK_FALSE(frame_law_violation(p).has_value());
  CHECK(is_coherent(p));
}
