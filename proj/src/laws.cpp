#include "prosite/laws.hpp"

#include <algorithm>

#include "prosite/error.hpp"
#include "prosite/frame.hpp"
#include "prosite/kernels.hpp"

namespace prosite {

namespace {

Outcome pass() { return {}; }
Outcome skip() { return {false, std::nullopt}; }
Outcome fail(std::string why) { return {true, std::move(why)}; }

bool contains_down_sets(const Packeting& pk) {
  for (int c = 0; c < pk.base().size(); ++c)
    if (!pk.base().down(c).subset_of(pk.gamma(c))) return false;
  return true;
}

Outcome semigroup_pullback(const Instance& inst) {
  const MulSemigroup s = MulSemigroup::of_ring(*inst.ring);
  for (ElemSet i : semigroup_ideals(s))
    if (is_prime_pullback(s, i) != is_prime_direct(s, i))
      return fail("pullback and direct primality disagree on ideal " + i.to_string(s.size()));
  return pass();
}

Outcome filters_are_points(const Instance& inst) {
  const Site& site = inst.site->site;
  const FiniteSpace pts = point_space(site);
  const FramePoints fp = frame_points(frame_of_ideals(site));
  if (!is_homeomorphic(pts, fp.space)) return fail("prime-filter space is not homeomorphic to the frame's points");
  if (pts.opens() != point_space_from_subbasis(site).opens()) return fail("ideal opens differ from sub-basis opens");
  return pass();
}

Outcome stone_round_trip(const Instance& inst) {
  const DistLattice& d = *inst.lattice;
  const LatticeSpectrum s = spec_dlat(d);
  if (!find_order_isomorphism(dlat_of_spectral(s.spectral).order(), d.order()))
    return fail("compact opens of Spec D are not isomorphic to D");
  const LatticeSpectrum again = spec_dlat(dlat_of_spectral(s.spectral));
  if (!is_homeomorphic(again.spectral.space, s.spectral.space))
    return fail("Spec of the compact opens is not homeomorphic to the space");
  return pass();
}

Outcome coherent_products(const Instance& inst) {
  const Frame f = frame_of_ideals(inst.site->site);
  if (!is_coherent(f)) return skip();
  const Frame p = product_frame(f, f);
  if (auto v = frame_law_violation(p)) return fail("product frame: " + *v);
  if (!is_coherent(p)) return fail("product of coherent frames is not coherent");
  const auto fin = finite_elements(f);
  std::vector<ElemSet> pairs;
  for (int a : fin)
    for (int b : fin) pairs.push_back(f.element(a) | ElemSet(f.element(b).bits() << f.width()));
  std::sort(pairs.begin(), pairs.end());
  std::vector<ElemSet> got;
  for (int x : finite_elements(p)) got.push_back(p.element(x));
  std::sort(got.begin(), got.end());
  if (got != pairs) return fail("finite elements of the product are not the pairs of finite elements");
  return pass();
}

Outcome spec_preserves_limits(const Instance& inst) {
  const Cospan& c = *inst.cospan;
  const LatticePushout po = lattice_pushout(c.d0, c.d1, c.d2, c.f1, c.f2);
  const LatticeSpectrum s0 = spec_dlat(c.d0), s1 = spec_dlat(c.d1), s2 = spec_dlat(c.d2);
  const auto g1 = spec_dlat_map(s0, s1, c.d0, c.f1);
  const auto g2 = spec_dlat_map(s0, s2, c.d0, c.f2);
  const SpacePullback pb = pullback_space(s1.spectral.space, s2.spectral.space, s0.spectral.space, g1, g2);
  if (!is_homeomorphic(spec_dlat(po.lattice).spectral.space, pb.space))
    return fail("Spec of the pushout is not the pullback of the spectra");
  return pass();
}

Outcome packeting_topology(const Instance& inst) {
  const Packeting& pk = *inst.site->packeting;
  if (auto v = stability_violation(pk)) {
    const auto [a, c, d] = *v;
    const Proset& p = pk.base();
    return fail("stability fails at a=" + p.label(a) + " c=" + p.label(c) + " d=" + p.label(d));
  }
  if (auto v = topology_violation(inst.site->site)) return fail("generated topology: " + *v);
  return pass();
}

Outcome down_sets_give_retro(const Instance& inst) {
  const Packeting& pk = *inst.site->packeting;
  if (!contains_down_sets(pk)) return skip();
  if (!is_retro_packeted(inst.site->site, pk).retro) return fail("packeting contains down-sets but is not retro-packeted");
  return pass();
}

Outcome packeted_spatial_sober(const Instance& inst) {
  const Site& site = inst.site->site;
  const Frame f = frame_of_ideals(site);
  if (!is_spatial(f).spatial) return fail("frame of a packeted site is not spatial");
  if (!is_sober(point_space(site))) return fail("point space of a packeted site is not sober");
  return pass();
}

Outcome retro_coherent(const Instance& inst) {
  const Site& site = inst.site->site;
  if (!is_retro_packeted(site, *inst.site->packeting).retro) return skip();
  const Frame f = frame_of_ideals(site);
  if (!is_coherent(f)) return fail("retro-packeted site has an incoherent frame");
  for (ElemSet u : f.elements())
    for (ElemSet v : f.elements())
      if (!f.index_of(u | v)) return fail("union of two ideals is not an ideal");
  return pass();
}

// Source site: the instance times the up-set packeting on 0 <= 1; maps: the
// identity and both projections.
Outcome maps_preserve_finite(const Instance& inst) {
  const Site& site = inst.site->site;
  const Packeting& pk = *inst.site->packeting;
  if (!is_retro_packeted(site, pk).retro) return skip();
  const Proset two = close_relation({"0", "1"}, {{"0", "1"}});
  const Packeting up = validate_packeting(two, {two.all(), ElemSet::single(1)});
  const ProductPacketing prod = product_packeting(pk, up);
  const Site prod_site = saturate(prod.proset, packeting_coverage(prod.packeting));
  const Site two_site = saturate(two, packeting_coverage(up));
  std::vector<std::tuple<ProsetMap, const Site*, const Site*>> maps;
  maps.emplace_back(ProsetMap::identity(pk.base()), &site, &site);
  maps.emplace_back(ProsetMap(prod.proset, pk.base(), prod.first), &prod_site, &site);
  maps.emplace_back(ProsetMap(prod.proset, two, prod.second), &prod_site, &two_site);
  for (const auto& [m, src, tgt] : maps) {
    if (!is_prosite_map(m, *src, *tgt).ok) return fail("expected prosite map is not one");
    if (!is_retro_packeted(*src, src == &site ? pk : prod.packeting).retro) continue;
    const FrameMap fm = frame_map_of_prosite_map(m, *src, *tgt);
    if (auto v = frame_map_violation(fm)) return fail("induced frame map: " + *v);
    if (!preserves_finite_elements(fm)) return fail("induced frame map does not preserve finite elements");
  }
  return pass();
}

Outcome reconstruction_matches(const Instance& inst) {
  const SupportModel& m = *inst.model;
  const Reconstruction rec = reconstruct_space(m);
  const BalmerSpectrum b = balmer_spectrum(m);
  if (!is_homeomorphic(rec.space, b.space)) return fail("reconstructed space differs from the Balmer spectrum");
  for (ElemSet p : rec.points)
    if (!is_prime_tensor_ideal(m, p)) return fail("filter " + p.to_string(m.size()) + " is not a prime tensor ideal");
  if (m.ring() && !is_homeomorphic(b.space, spec_ring(*m.ring()).spectral.space))
    return fail("Balmer spectrum differs from the Zariski spectrum");
  if (!is_homeomorphic(rec.space, m.space().space)) return fail("reconstructed space differs from the model's space");
  return pass();
}

Outcome stone_coincidence(const Instance& inst) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    const Coincidence c = coincidence_on_stone(FiniteSpace::discrete(labels), *inst.ring);
    if (!c.coincide)
      return fail("Hochster and Boolean evaluations differ on " + std::to_string(n) + " points (" +
                  std::to_string(c.hochster) + " vs " + std::to_string(c.boolean) + ")");
  }
  return pass();
}

}  // namespace

const std::vector<Law>& laws() {
  static const std::vector<Law> registry{
      {"prop-0-1-0", "prime iff the pullback of I along multiplication is (I x R) u (R x I)", "ring", semigroup_pullback},
      {"thm-1-1-1", "points of the ideal frame are the J-prime filters", "site", filters_are_points},
      {"thm-1-1-3", "Spec and compact opens are inverse on finite distributive lattices", "dlat", stone_round_trip},
      {"prop-1-1-4", "coherent frames are closed under finite products", "packeted-site", coherent_products},
      {"prop-1-1-5", "Spec sends pushouts of lattices to pullbacks of spaces", "dlat", spec_preserves_limits},
      {"prop-1-3-8", "a packeting generates a stable coverage", "packeted-site", packeting_topology},
      {"prop-1-3-11", "packets containing down-sets are retro-packeted", "packeted-site", down_sets_give_retro},
      {"lem-1-3-12", "packeted sites give spatial frames and sober spaces", "packeted-site", packeted_spatial_sober},
      {"lem-1-3-13", "retro-packeted sites give coherent frames", "packeted-site", retro_coherent},
      {"lem-1-3-14", "prosite maps of retro-packeted sites give coherent frame maps", "packeted-site",
       maps_preserve_finite},
      {"thm-a-1-11", "glued prime-filter spaces recover the Balmer spectrum", "model", reconstruction_matches},
      {"cor-1-3-25", "Hochster and Boolean evaluations coincide on finite Stone spaces", "ring", stone_coincidence},
  };
  return registry;
}

const Law& find_law(const std::string& id) {
  for (const auto& law : laws())
    if (law.id == id) return law;
  std::string known;
  for (const auto& law : laws()) known += (known.empty() ? "" : ", ") + law.id;
  throw InputError("unknown law '" + id + "'; registered: " + known);
}

io::json LawReport::to_json() const {
  io::json fs = io::json::array();
  for (const auto& f : failures) fs.push_back({{"index", f.index}, {"message", f.message}, {"counterexample", f.counterexample}});
  return {{"law", law},           {"anchor", anchor},         {"corpus", corpus},
          {"instances", instances}, {"applicable", applicable}, {"failures", fs}};
}

std::string LawReport::text() const {
  std::string out = law + ": " + std::to_string(instances) + " instances, " + std::to_string(applicable) +
                    " applicable, " + std::to_string(failures.size()) + " failures\n";
  for (const auto& f : failures) {
    out += "failure at " + std::to_string(f.index) + ": " + f.message + "\n";
    out += f.counterexample.value("text", "");
  }
  return out;
}

namespace {

bool has_payload(const std::string& shape, const Instance& inst) {
  if (shape == "proset") return inst.proset.has_value();
  if (shape == "site") return inst.site.has_value();
  if (shape == "packeted-site") return inst.site && inst.site->packeting;
  if (shape == "dlat") return inst.lattice && inst.cospan;
  if (shape == "ring") return inst.ring.has_value();
  if (shape == "model") return inst.model.has_value();
  return false;
}

}  // namespace

LawReport check_law(const Law& law, const std::vector<Instance>& instances, int jobs, std::optional<int> inject_fault,
                    const std::string& corpus) {
  for (const auto& inst : instances)
    if (inst.shape != law.shape || !has_payload(law.shape, inst))
      throw InputError("law " + law.id + " needs " + law.shape + " instances");
  const int n = static_cast<int>(instances.size());
  std::vector<Outcome> outcomes(static_cast<std::size_t>(n));
  kernels::for_each_index_parallel(n, jobs, [&](int i) {
    Outcome& out = outcomes[static_cast<std::size_t>(i)];
    if (inject_fault && *inject_fault == i) {
      out = fail("injected fault");
      return;
    }
    try {
      out = law.check(instances[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
  });
  LawReport report;
  report.law = law.id;
  report.anchor = law.anchor;
  report.corpus = corpus;
  report.instances = n;
  for (int i = 0; i < n; ++i) {
    const Outcome& o = outcomes[static_cast<std::size_t>(i)];
    if (o.applies) ++report.applicable;
    if (o.failure) report.failures.push_back({i, *o.failure, instances[static_cast<std::size_t>(i)].to_json()});
  }
  return report;
}

LawReport check_law(const Law& law, const CorpusSpec& spec, int jobs, std::optional<int> inject_fault) {
  CorpusSpec s = spec;
  if (s.shape.empty()) s.shape = law.shape;
  if (s.shape != law.shape)
    throw InputError("law " + law.id + " needs shape " + law.shape + ", corpus asks for " + s.shape);
  if (inject_fault && (*inject_fault < 0 || *inject_fault >= s.count))
    throw InputError("fault index outside the corpus");
  return check_law(law, generate_corpus(s, jobs), jobs, inject_fault, corpus_spec_text(s));
}

}  // namespace prosite
