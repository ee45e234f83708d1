#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "prosite/error.hpp"
#include "prosite/stone.hpp"
#include "prosite/ttg.hpp"
#include "support.hpp"

using namespace prosite;

namespace {

ElemSet elems(std::initializer_list<int> xs) {
  ElemSet s;
  for (int x : xs) s.insert(x);
  return s;
}

int object(const SupportModel& m, const std::string& label) { return *m.find(label); }

// Primes of a support model written down from the points: {a : x not in supp a}.
std::vector<ElemSet> point_primes(const SupportModel& m) {
  std::vector<ElemSet> out;
  for (int x = 0; x < m.space().space.size(); ++x) {
    ElemSet p;
    for (int a = 0; a < m.size(); ++a)
      if (!m.supp(a).contains(x)) p.insert(a);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> factor(int n) {
  std::map<int, int> f;
  for (int q = 2; n > 1; ++q)
    while (n % q == 0) {
      ++f[q];
      n /= q;
    }
  return f;
}

int power(int b, int e) {
  int out = 1;
  while (e-- > 0) out *= b;
  return out;
}

SupportModel sierpinski_model() {
  const FiniteSpace x = fixtures::sierpinski();
  return closed_support_model(make_spectral(x, x.opens()));
}

}  // namespace

TEST_CASE("semigroup primality examples") {
  const MulSemigroup z6 = MulSemigroup::of_ring(FiniteCommRing::zmod(6));
  CHECK(is_prime_pullback(z6, elems({0, 2, 4})));
  CHECK(is_prime_direct(z6, elems({0, 2, 4})));
  CHECK_FALSE(is_prime_pullback(z6, elems({0})));
  CHECK_FALSE(is_prime_direct(z6, elems({0})));
  const MulSemigroup f2 = MulSemigroup::of_ring(FiniteCommRing::zmod(2));
  CHECK(is_prime_pullback(f2, elems({0})));
  CHECK(is_prime_direct(f2, elems({0})));
  CHECK_THROWS_AS((void)is_prime_pullback(z6, z6.all()), ContractError);
  CHECK_THROWS_AS((void)is_prime_direct(z6, elems({2})), ContractError);
}

TEST_CASE("semigroup tables are checked") {
  CHECK_THROWS_AS((void)MulSemigroup::from_table({"a", "b"}, {0, 0, 1, 1}), InputError);  // ab != ba
  CHECK_NOTHROW((void)MulSemigroup::from_table({"a", "b"}, {0, 0, 0, 1}));
}

TEST_CASE("pullback and direct primality agree on Z/n") {
  for (int n = 1; n <= 30; ++n) {
    const MulSemigroup s = MulSemigroup::of_ring(FiniteCommRing::zmod(n));
    for (ElemSet i : semigroup_ideals(s)) {
      bool brute = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (i.contains(x * y % n) && !i.contains(x) && !i.contains(y)) brute = false;
      CHECK(is_prime_pullback(s, i) == brute);
      CHECK(is_prime_direct(s, i) == brute);
    }
  }
}

TEST_CASE("semigroup ideals of Z/4") {
  const MulSemigroup s = MulSemigroup::of_ring(FiniteCommRing::zmod(4));
  // nonempty proper absorbing subsets: {0}, {0,2}
  CHECK(semigroup_ideals(s) == std::vector<ElemSet>{elems({0}), elems({0, 2})});
}

TEST_CASE("affine support models") {
  const SupportModel f2 = affine_support_model(FiniteCommRing::zmod(2));
  CHECK(f2.size() == 2);
  CHECK(f2.space().space.size() == 1);
  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  CHECK(z6.size() == 4);
  CHECK(z6.labels() == std::vector<std::string>{"0", "cone(3)", "cone(2)", "1"});
  CHECK(z6.supp(z6.unit()) == z6.space().space.all());
  CHECK(z6.supp(z6.zero()).empty());
  CHECK(affine_support_model(FiniteCommRing::zmod(4)).size() == 2);
  CHECK(z6.tensor(object(z6, "cone(2)"), object(z6, "cone(3)")) == z6.zero());
}

TEST_CASE("support model validation") {
  const FiniteSpace x = FiniteSpace::discrete({"p", "q"});
  const SpectralSpace sx = make_spectral(x, x.opens());
  // {p} missing as a support
  CHECK_THROWS_AS((void)SupportModel::make(sx, {"0", "b", "1"}, {ElemSet{}, elems({1}), elems({0, 1})}, 2, 0),
                  InputError);
  CHECK_THROWS_AS((void)SupportModel::make(sx, {"0", "a", "b", "1"},
                                           {ElemSet{}, elems({0}), elems({1}), elems({0, 1})}, 1, 0),
                  InputError);
  CHECK_NOTHROW((void)SupportModel::make(sx, {"0", "a", "b", "1"}, {ElemSet{}, elems({0}), elems({1}), elems({0, 1})},
                                         3, 0));
  // {s} is closed in the Sierpinski space, {g} is not
  const FiniteSpace s = fixtures::sierpinski();
  CHECK_THROWS_AS((void)SupportModel::make(make_spectral(s, s.opens()), {"0", "g", "1"},
                                           {ElemSet{}, elems({1}), elems({0, 1})}, 2, 0),
                  InputError);
}

TEST_CASE("thick ideals") {
  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  CHECK(thick_ideal_generated(z6, ElemSet::single(z6.zero())) == ElemSet::single(z6.zero()));
  CHECK(thick_ideal_generated(z6, ElemSet::single(z6.unit())) == z6.all());
  const int c2 = object(z6, "cone(2)");
  CHECK(thick_ideal_generated(z6, ElemSet::single(c2)) == (ElemSet::single(c2) | ElemSet::single(z6.zero())));
  CHECK(tensor_ideals(z6).size() == 4);
  for (ElemSet i : tensor_ideals(z6)) CHECK(is_tensor_ideal(z6, i));
}

TEST_CASE("prime tensor ideals") {
  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  // point 1 of the spectrum is (2)
  CHECK(z6.space().space.label(1) == "(2)");
  ElemSet missing2;
  for (int a = 0; a < z6.size(); ++a)
    if (!z6.supp(a).contains(1)) missing2.insert(a);
  CHECK(is_prime_tensor_ideal(z6, missing2));
  CHECK_FALSE(is_prime_tensor_ideal(z6, ElemSet::single(z6.zero())));
  CHECK_THROWS_AS((void)is_prime_tensor_ideal(z6, z6.all()), ContractError);
  const SupportModel f2 = affine_support_model(FiniteCommRing::zmod(2));
  CHECK(is_prime_tensor_ideal(f2, ElemSet::single(f2.zero())));
}

TEST_CASE("primes are the point primes") {
  for (int n = 2; n <= 60; ++n) {
    const SupportModel m = affine_support_model(FiniteCommRing::zmod(n));
    CHECK(prime_tensor_ideals(m) == point_primes(m));
  }
  const SupportModel s = sierpinski_model();
  CHECK(prime_tensor_ideals(s) == point_primes(s));
}

TEST_CASE("balmer spectrum examples") {
  CHECK(balmer_spectrum(affine_support_model(FiniteCommRing::zmod(2))).space.size() == 1);
  const FiniteSpace b6 = balmer_spectrum(affine_support_model(FiniteCommRing::zmod(6))).space;
  CHECK(b6 == FiniteSpace::discrete(b6.labels()));
  CHECK(b6.size() == 2);
  CHECK(balmer_spectrum(affine_support_model(FiniteCommRing::zmod(4))).space.size() == 1);
  CHECK(is_homeomorphic(balmer_spectrum(sierpinski_model()).space, fixtures::sierpinski()));
}

TEST_CASE("kleq proset") {
  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  const Proset k = kleq_proset(z6);
  for (int a = 0; a < z6.size(); ++a) {
    CHECK(k.le(a, z6.zero()));
    CHECK(k.le(z6.unit(), a));
  }
  const int c2 = object(z6, "cone(2)"), c3 = object(z6, "cone(3)");
  CHECK_FALSE(k.le(c2, c3));
  CHECK_FALSE(k.le(c3, c2));
  CHECK(is_finitely_complete(k).complete);
  CHECK(*meet(k, c2, c3) == z6.unit());
}

TEST_CASE("gamma assignment") {
  const SupportModel f2 = affine_support_model(FiniteCommRing::zmod(2));
  const Packeting pf = gamma_packeting(f2);
  CHECK(pf.base().size() == 1);
  CHECK(pf.gamma(0) == ElemSet::single(0));

  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  const GammaAssignment g = gamma_assignment(z6);
  // carrier: every object but the unit
  CHECK(g.objects.size() == 3);
  auto local = [&](const std::string& label) {
    return static_cast<int>(std::find(g.objects.begin(), g.objects.end(), object(z6, label)) - g.objects.begin());
  };
  const auto primes = point_primes(z6);
  const ElemSet all_primes = primes[0] & primes[1];
  ElemSet zero_gamma;
  for (int a : all_primes) zero_gamma.insert(local(z6.label(a)));
  CHECK(g.gamma[static_cast<std::size_t>(local("0"))] == zero_gamma);
  // the only prime containing cone(2) is the one missing (2)
  CHECK(g.gamma[static_cast<std::size_t>(local("cone(2)"))] ==
        (ElemSet::single(local("0")) | ElemSet::single(local("cone(2)"))));
  // cone(2) and cone(3) have no meet among objects lying in a prime
  CHECK_THROWS_AS((void)gamma_packeting(z6), InputError);

  for (ElemSet p : primes) {
    const GammaAssignment gp = gamma_on_prime(z6, p);
    CHECK_NOTHROW((void)validate_packeting(gp.proset, gp.gamma));
  }
  CHECK_NOTHROW((void)gamma_packeting(affine_support_model(FiniteCommRing::zmod(8))));
}

TEST_CASE("reconstruct_space examples") {
  const Reconstruction f2 = reconstruct_space(affine_support_model(FiniteCommRing::zmod(2)));
  CHECK(f2.space.size() == 1);
  CHECK_FALSE(f2.empty);

  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  const Reconstruction r6 = reconstruct_space(z6);
  CHECK(r6.space == FiniteSpace::discrete(r6.space.labels()));
  CHECK(is_homeomorphic(r6.space, balmer_spectrum(z6).space));
  CHECK(r6.maximal_primes.size() == 2);

  // nested primes: both members of the chain come back as filters
  const SupportModel s = sierpinski_model();
  const Reconstruction rs = reconstruct_space(s);
  CHECK(rs.maximal_primes.size() == 1);
  CHECK(rs.points == point_primes(s));
  CHECK(is_homeomorphic(rs.space, fixtures::sierpinski()));

  const FiniteSpace empty = FiniteSpace::from_subbasis({}, {});
  const SupportModel none = SupportModel::make(make_spectral(empty, empty.opens()), {"z"}, {ElemSet{}}, 0, 0);
  const Reconstruction rn = reconstruct_space(none);
  CHECK(rn.empty);
  CHECK(rn.space.size() == 0);
}

TEST_CASE("reconstruction agrees with the Balmer and Zariski spectra") {
  std::vector<FiniteCommRing> rings;
  for (int n = 2; n <= 60; ++n) rings.push_back(FiniteCommRing::zmod(n));
  rings.push_back(FiniteCommRing::product(FiniteCommRing::zmod(2), FiniteCommRing::zmod(2)));
  rings.push_back(FiniteCommRing::product(FiniteCommRing::zmod(4), FiniteCommRing::zmod(3)));
  rings.push_back(FiniteCommRing::product(FiniteCommRing::zmod(6), FiniteCommRing::zmod(5)));
  for (const auto& r : rings) {
    CAPTURE(r.descriptor());
    const SupportModel m = affine_support_model(r);
    const Reconstruction rec = reconstruct_space(m);
    const BalmerSpectrum b = balmer_spectrum(m);
    CHECK(is_homeomorphic(rec.space, b.space));
    CHECK(is_homeomorphic(b.space, spec_ring(r).spectral.space));
    CHECK(rec.points == b.primes);
    for (const Site& site : rec.sites)
      for (ElemSet f : enumerate_prime_filters(site)) CHECK(f.size() >= 1);
    for (ElemSet p : rec.points) CHECK(is_prime_tensor_ideal(m, p));
  }
}

TEST_CASE("chi_c and ideal_of_open") {
  const SupportModel z6 = affine_support_model(FiniteCommRing::zmod(6));
  const Reconstruction rec = reconstruct_space(z6);
  CHECK(chi_c(rec, z6.zero()).empty());
  CHECK(chi_c(rec, z6.unit()) == rec.space.all());
  CHECK(chi_c(rec, object(z6, "cone(2)")).size() == 1);
  CHECK(ideal_of_open(z6, rec, ElemSet{}) == z6.all());
  CHECK(ideal_of_open(z6, rec, rec.space.all()) == (rec.points[0] & rec.points[1]));
  CHECK(ideal_of_open(z6, rec, ElemSet::single(1)) == rec.points[1]);

  const SupportModel s = sierpinski_model();
  const Reconstruction rs = reconstruct_space(s);
  int closed_point = rs.space.is_open(ElemSet::single(0)) ? 1 : 0;
  CHECK_THROWS_AS((void)ideal_of_open(s, rs, ElemSet::single(closed_point)), ContractError);
}

TEST_CASE("ideal_of_open is the intersection of its points and turns unions into intersections") {
  std::vector<SupportModel> models{sierpinski_model()};
  for (int n : {6, 12, 30, 60}) models.push_back(affine_support_model(FiniteCommRing::zmod(n)));
  for (const auto& m : models) {
    const Reconstruction rec = reconstruct_space(m);
    for (ElemSet u : rec.space.opens()) {
      const ElemSet ku = ideal_of_open(m, rec, u);
      CHECK(is_tensor_ideal(m, ku));
      ElemSet meet = m.all();
      for (int i : u) meet &= rec.points[static_cast<std::size_t>(i)];
      CHECK(ku == meet);
      for (ElemSet v : rec.space.opens())
        CHECK(ideal_of_open(m, rec, u | v) == (ku & ideal_of_open(m, rec, v)));
    }
  }
}

TEST_CASE("structure rings of Z/12") {
  const FiniteCommRing r = FiniteCommRing::zmod(12);
  const SupportModel m = affine_support_model(r);
  const Reconstruction rec = reconstruct_space(m);
  const RingSpectrum spec = spec_ring(r);
  const auto where = spec_points(m, rec);
  auto point_of = [&](const std::string& label) {
    for (std::size_t i = 0; i < where.size(); ++i)
      if (spec.spectral.space.label(where[i]) == label) return static_cast<int>(i);
    return -1;
  };
  const Localization at3 = structure_ring(m, rec, ElemSet::single(point_of("(3)")));
  CHECK(at3.ring.size() == 3);
  CHECK(find_ring_isomorphism(at3.ring, FiniteCommRing::zmod(3)).has_value());
  const Localization at2 = structure_ring(m, rec, ElemSet::single(point_of("(2)")));
  CHECK(at2.ring.size() == 4);
  CHECK(find_ring_isomorphism(at2.ring, FiniteCommRing::zmod(4)).has_value());
  const Localization global = structure_ring(m, rec, rec.space.all());
  CHECK(find_ring_isomorphism(global.ring, r).has_value());
  CHECK(structure_ring(m, rec, ElemSet{}).zero_ring);

  const SupportModel s = sierpinski_model();
  CHECK_THROWS_AS((void)structure_ring(s, reconstruct_space(s), ElemSet{}), UnsupportedError);
}

TEST_CASE("structure ring orders follow the prime factorization") {
  for (int n = 2; n <= 60; ++n) {
    const FiniteCommRing r = FiniteCommRing::zmod(n);
    const SupportModel m = affine_support_model(r);
    const Reconstruction rec = reconstruct_space(m);
    const RingSpectrum spec = spec_ring(r);
    const auto where = spec_points(m, rec);
    const auto f = factor(n);
    for (ElemSet u : rec.space.opens()) {
      int expect = 1;
      for (int i : u) {
        // the prime is qZ/n: q is its least nonzero element, or n for a field
        const ElemSet prime = spec.primes[static_cast<std::size_t>(where[static_cast<std::size_t>(i)])];
        const ElemSet nonzero = prime - ElemSet::single(0);
        const int q = nonzero.empty() ? n : nonzero.first();
        expect *= power(q, f.at(q));
      }
      CHECK(structure_ring(m, rec, u).ring.size() == expect);
    }
  }
}

TEST_CASE("structure rings form a presheaf") {
  for (int n : {2, 6, 12, 30, 36, 60}) {
    const SupportModel m = affine_support_model(FiniteCommRing::zmod(n));
    const RingedSpace rs = ringed_space(m, reconstruct_space(m));
    CHECK_FALSE(presheaf_violation(rs).has_value());
    const auto& opens = rs.opens;
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (opens[i].empty()) CHECK(rs.rings[i].zero_ring);
    // restriction from the whole space is the canonical map
    const std::size_t whole = opens.size() - 1;
    const Localization& global = rs.rings[whole];
    for (const auto& res : rs.restrictions) {
      if (res.from != static_cast<int>(whole)) continue;
      const Localization& to = rs.rings[static_cast<std::size_t>(res.to)];
      for (int a = 0; a < n; ++a)
        CHECK(res.map[static_cast<std::size_t>(global.canonical[static_cast<std::size_t>(a)])] ==
              to.canonical[static_cast<std::size_t>(a)]);
    }
  }
}

TEST_CASE("functorial maps") {
  const FiniteCommRing z6 = FiniteCommRing::zmod(6), z2 = FiniteCommRing::zmod(2);
  const SupportModel m6 = affine_support_model(z6), m2 = affine_support_model(z2);
  const Reconstruction r6 = reconstruct_space(m6), r2 = reconstruct_space(m2);

  const ModelMap id = model_map_of_ring_hom(m6, m6, reduction_hom(6, 6));
  const auto idmap = functorial_map(m6, m6, id, r6, r6);
  CHECK(idmap == std::vector<int>{0, 1});

  const ModelMap q = model_map_of_ring_hom(m6, m2, reduction_hom(6, 2));
  const auto qmap = functorial_map(m6, m2, q, r6, r2);
  REQUIRE(qmap.size() == 1);
  // the single point goes to the prime missing (2)
  const auto where = spec_points(m6, r6);
  CHECK(m6.space().space.label(where[static_cast<std::size_t>(qmap[0])]) == "(2)");

  // relabel objects: same map once points are read as label sets
  const std::vector<int> perm{3, 1, 0, 2};
  const SupportModel p6 = permute_objects(m6, perm);
  const Reconstruction rp = reconstruct_space(p6);
  ModelMap relabel;
  relabel.space_map = {0, 1};
  relabel.image.resize(4);
  for (int i = 0; i < 4; ++i) relabel.image[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  const auto pmap = functorial_map(m6, p6, relabel, r6, rp);
  auto names = [](const SupportModel& m, ElemSet s) {
    std::vector<std::string> out;
    for (int a : s) out.push_back(m.label(a));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (std::size_t z = 0; z < pmap.size(); ++z)
    CHECK(names(p6, rp.points[z]) == names(m6, r6.points[static_cast<std::size_t>(pmap[z])]));

  ModelMap bad = id;
  std::swap(bad.image[1], bad.image[2]);
  try {
    (void)functorial_map(m6, m6, bad, r6, r6);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.witness() == m6.label(1));
  }
}

TEST_CASE("functorial maps compose") {
  const std::vector<std::tuple<int, int, int>> chains{{12, 6, 2}, {12, 4, 2}, {30, 6, 3}, {60, 12, 4}, {60, 30, 5},
                                                      {36, 12, 6}, {24, 8, 2}};
  for (const auto& [a, b, c] : chains) {
    const SupportModel ma = affine_support_model(FiniteCommRing::zmod(a));
    const SupportModel mb = affine_support_model(FiniteCommRing::zmod(b));
    const SupportModel mc = affine_support_model(FiniteCommRing::zmod(c));
    const Reconstruction ra = reconstruct_space(ma), rb = reconstruct_space(mb), rc = reconstruct_space(mc);
    const ModelMap f = model_map_of_ring_hom(ma, mb, reduction_hom(a, b));
    const ModelMap g = model_map_of_ring_hom(mb, mc, reduction_hom(b, c));
    const auto fa = functorial_map(ma, mb, f, ra, rb);
    const auto gb = functorial_map(mb, mc, g, rb, rc);
    const auto whole = functorial_map(ma, mc, compose(g, f), ra, rc);
    std::vector<int> composite;
    for (int z : gb) composite.push_back(fa[static_cast<std::size_t>(z)]);
    CHECK(whole == composite);
    CHECK(model_map_of_ring_hom(ma, mc, reduction_hom(a, c)).image == compose(g, f).image);
  }
}
