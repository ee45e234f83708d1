#include "doctest.h"

#include <set>

#include "prosite/corpus.hpp"
#include "prosite/error.hpp"
#include "prosite/io.hpp"
#include "prosite/laws.hpp"
#include "support.hpp"

using namespace prosite;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("proset files") {
  const Proset p = io::parse_proset("# comment\nelements: a b c\nle: a<=b b<=c\n");
  CHECK(p.le(p.id_of("a"), p.id_of("c")));
  CHECK_FALSE(p.le(p.id_of("c"), p.id_of("a")));
  CHECK(io::parse_proset(io::proset_text(p)) == p);
  CHECK(error_of([] { (void)io::parse_proset("elements: a b\nle: a<=c\n", "f.txt"); }) ==
        "f.txt:2: unknown element 'c'");
  CHECK(error_of([] { (void)io::parse_proset("elements: a\nfoo: a\n", "f.txt"); }) == "f.txt:2: unknown keyword 'foo:'");
  CHECK(error_of([] { (void)io::parse_proset("elements: a\nle: ab\n", "f.txt"); }) == "f.txt:2: expected a<=b 'ab'");
  CHECK(error_of([] { (void)io::parse_proset("elements: a a\n", "f.txt"); }) == "f.txt:1: duplicate element 'a'");
  CHECK_THROWS_AS((void)io::parse_proset("le: a<=b\n"), InputError);
}

TEST_CASE("site files") {
  const io::SiteFile sf = io::parse_site("elements: z a b t\nle: z<=a z<=b a<=t b<=t\ncover t: a b\n");
  CHECK(sf.site == fixtures::diamond_cover());
  CHECK_FALSE(sf.packeting.has_value());
  CHECK(io::parse_site(io::site_text(sf.site)).site == sf.site);

  const io::SiteFile pk = io::parse_site("elements: 0 1 2\nle: 0<=1 1<=2\ngamma 0: 0 1 2\ngamma 1: 1 2\ngamma 2: 2\n");
  REQUIRE(pk.packeting.has_value());
  CHECK(pk.site == saturate(pk.site.proset(), packeting_coverage(*pk.packeting)));
  const io::SiteFile again = io::parse_site(io::site_text(pk.site, pk.packeting));
  CHECK(again.site == pk.site);
  CHECK(again.packeting->gammas() == pk.packeting->gammas());

  CHECK(error_of([] { (void)io::parse_site("elements: a b\ncover a: b\n", "s"); }) ==
        "s:2: cover member is not below its root 'b'");
  CHECK(error_of([] { (void)io::parse_site("elements: a\ncover a b\n", "s"); }) ==
        "s:2: expected a label followed by ':' 'a'");
  CHECK_THROWS_AS((void)io::parse_site("elements: a b\ngamma a: a\n"), InputError);
  // gamma(1) misses 1 itself
  CHECK_THROWS_AS((void)io::parse_site("elements: 0 1\nle: 0<=1\ngamma 0: 0 1\ngamma 1: 0\n"), ValidationError);
}

TEST_CASE("space files and JSON") {
  const FiniteSpace s = io::parse_space("points: s g\nopen: g\n");
  CHECK(s == fixtures::sierpinski());
  CHECK(io::parse_space(io::space_text(s)) == s);
  CHECK(io::parse_space(io::space_to_json(s).dump()) == s);
  const auto j = io::space_to_json(s);
  CHECK(j["flags"]["sober"] == true);
  CHECK(j["points"] == io::json::array({"s", "g"}));
  CHECK(error_of([] { (void)io::parse_space("points: a\nopen: b\n", "x"); }) == "x:2: unknown point 'b'");
  CHECK_THROWS_AS((void)io::parse_space("{\"points\": [\"a\"], \"opens\": [[0]]}"), InputError);  // no empty open
  CHECK_THROWS_AS((void)io::parse_space("{broken"), InputError);
}

TEST_CASE("space JSON round-trips on random point spaces") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Proset p = random_proset(rng, 1 + static_cast<int>(rng() % 5), 30);
    const FiniteSpace x = point_space(Site(p));
    CHECK(io::space_from_json(io::json::parse(io::space_to_json(x).dump())) == x);
  }
}

TEST_CASE("frame JSON") {
  const Frame f = frame_of_ideals(fixtures::diamond_cover());
  const auto j = io::frame_to_json(f);
  CHECK(j["elements"][0] == "0000");
  CHECK(io::frame_from_json(io::json::parse(j.dump())) == f);
  auto bad = j;
  bad["joins"][1][2] = 0;
  CHECK_THROWS_AS((void)io::frame_from_json(bad), InputError);
}

TEST_CASE("ring files and descriptors") {
  CHECK(io::parse_ring("ring zmod 12\n").size() == 12);
  const FiniteCommRing p = io::parse_ring("ring product zmod 2 zmod 3\n");
  CHECK(p.size() == 6);
  CHECK(p.descriptor() == "product zmod 2 zmod 3");
  CHECK(io::ring_from_descriptor("zmod:6").size() == 6);
  CHECK(io::ring_from_descriptor("product:zmod:2:product:zmod:2:zmod:3").size() == 12);
  CHECK_THROWS_AS((void)io::ring_from_descriptor("zmod:0"), InputError);
  CHECK_THROWS_AS((void)io::ring_from_descriptor("zmod 6 7"), InputError);
  CHECK_THROWS_AS((void)io::ring_from_descriptor("field 4"), InputError);
  CHECK_THROWS_AS((void)io::ring_from_descriptor("product zmod 8 zmod 9"), ResourceError);
  for (const auto& r : table_rings()) {
    const FiniteCommRing back = io::parse_ring(io::ring_text(r));
    CHECK(io::same_ring_tables(back, r));
    CHECK(io::same_ring_tables(io::ring_from_json(io::json::parse(io::ring_to_json(r).dump())), r));
  }
  CHECK(io::same_ring_tables(io::parse_ring(io::ring_text(p)), p));
  // x * x = x breaks nothing, but 1 + 1 = 1 breaks the additive group
  CHECK_THROWS_AS((void)io::parse_ring("ring table\nelements: 0 1\nadd:\n0 1\n1 1\nmul:\n0 0\n0 1\n"), InputError);
  CHECK(error_of([] { (void)io::parse_ring("ring table\nelements: 0 1\nadd:\n0 1\n1 q\nmul:\n0 0\n0 1\n", "r"); }) ==
        "r:5: unknown ring element 'q'");
}

TEST_CASE("lattice files") {
  const DistLattice c3 = io::parse_lattice("lattice\nelements: 0 m 1\nle: 0<=m m<=1\n");
  CHECK(c3.size() == 3);
  CHECK(io::parse_lattice(io::lattice_text(c3)).order() == c3.order());
  CHECK_THROWS_AS((void)io::parse_lattice("lattice\nelements: 0 x y z 1\nle: 0<=x 0<=y 0<=z x<=1 y<=1 z<=1\n"),
                  InputError);
}

TEST_CASE("model files") {
  const SupportModel z12 = io::parse_model("model affine zmod 12\n");
  CHECK(z12.size() == 4);
  CHECK(z12.ring().has_value());
  CHECK(io::model_text(z12) == "model affine zmod 12\n");

  const std::string space = "points: s g\nopen: g\n";
  const std::string text = "model explicit\nspace sp.txt\nobject 0 supp:\nobject k supp: s\nobject 1 supp: s g\nunit 1\nzero 0\n";
  const SupportModel m = io::parse_model(text, "m", [&](const std::string& name) {
    CHECK(name == "sp.txt");
    return space;
  });
  CHECK(m.size() == 3);
  CHECK(m.supp(*m.find("k")) == ElemSet::single(0));
  const SupportModel back = io::parse_model(io::model_text(m));
  CHECK(back.labels() == m.labels());
  CHECK(back.supports() == m.supports());
  CHECK(back.space().space == m.space().space);

  const SupportModel table = affine_support_model(table_rings()[0]);
  const SupportModel tb = io::parse_model(io::model_text(table));
  CHECK(tb.supports() == table.supports());

  CHECK(error_of([] { (void)io::parse_model("points: a\nobject z supp: b\nunit z\nzero z\n", "m"); }) ==
        "m:2: unknown point 'b'");
  CHECK_THROWS_AS((void)io::parse_model("points: a\nobject z supp:\nunit z\nzero z\n"), InputError);
  CHECK_THROWS_AS((void)io::parse_model("model affine zmod 1\n"), InputError);
}

TEST_CASE("ringed space JSON") {
  const SupportModel m = affine_support_model(FiniteCommRing::zmod(12));
  const io::RingedSpaceData data = io::ringed_space_data(ringed_space(m, reconstruct_space(m)));
  const auto j = io::ringed_space_to_json(data);
  CHECK(j["rings"].size() == 4);
  const io::RingedSpaceData back = io::ringed_space_from_json(io::json::parse(j.dump()));
  CHECK(back.space == data.space);
  CHECK(back.restrictions == data.restrictions);
  REQUIRE(back.rings.size() == data.rings.size());
  for (const auto& [key, ring] : data.rings) CHECK(io::same_ring_tables(back.rings.at(key), ring));
}

TEST_CASE("DOT output") {
  const std::string z6 = io::space_to_dot(spec_ring(FiniteCommRing::zmod(6)).spectral.space);
  CHECK(z6.find("->") == std::string::npos);
  CHECK(z6.find("\"(2)\";") != std::string::npos);
  CHECK(io::space_to_dot(fixtures::sierpinski()) == "digraph space {\n  \"s\";\n  \"g\";\n  \"s\" -> \"g\";\n}\n");
}

TEST_CASE("corpus specs") {
  const CorpusSpec s = parse_corpus_spec("seed=42,max=6,count=500");
  CHECK(s.seed == 42);
  CHECK(s.max_elements == 6);
  CHECK(s.count == 500);
  CHECK(parse_corpus_spec(corpus_spec_text(s)).count == 500);
  CHECK_THROWS_AS((void)parse_corpus_spec("seed=x"), InputError);
  CHECK_THROWS_AS((void)parse_corpus_spec("size=3"), InputError);
  CHECK_THROWS_AS((void)parse_corpus_spec("max=0"), InputError);
  CHECK_THROWS_AS((void)parse_corpus_spec("shape=graph"), InputError);
}

TEST_CASE("corpus generation") {
  CorpusSpec s;
  s.seed = 5;
  s.max_elements = 1;
  s.count = 30;
  s.shape = "proset";
  for (const auto& inst : generate_corpus(s)) CHECK(inst.proset->size() == 1);

  for (const auto& shape : kShapes) {
    CAPTURE(shape);
    CorpusSpec c{11, 6, 60, shape};
    if (shape == "ring" || shape == "model") c.max_elements = 30;
    const auto a = generate_corpus(c, 1);
    const auto b = generate_corpus(c, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_json().dump() == b[i].to_json().dump());
    for (const auto& inst : a) CHECK_FALSE(inst.text().empty());
  }

  CorpusSpec pk{9, 6, 200, "packeted-site"};
  for (const auto& inst : generate_corpus(pk)) {
    REQUIRE(inst.site->packeting.has_value());
    const io::SiteFile back = io::parse_site(inst.text());
    CHECK(back.site == inst.site->site);
    CHECK_NOTHROW((void)validate_packeting(inst.site->packeting->base(), inst.site->packeting->gammas()));
  }
  CorpusSpec models{13, 6, 60, "model"};
  for (const auto& inst : generate_corpus(models)) {
    const SupportModel back = io::parse_model(inst.text());
    CHECK(back.supports() == inst.model->supports());
  }
}

TEST_CASE("law registry") {
  CHECK(laws().size() == 12);
  std::set<std::string> ids;
  for (const auto& l : laws()) ids.insert(l.id);
  CHECK(ids.size() == 12);
  CHECK(ids.count("thm-a-1-11"));
  try {
    (void)find_law("thm-9");
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("prop-0-1-0") != std::string::npos);
  }
  CHECK_THROWS_AS((void)check_law(find_law("thm-1-1-1"), CorpusSpec{1, 4, 3, "ring"}, 1), InputError);
}

TEST_CASE("every law holds on a small corpus and reports deterministically") {
  for (const auto& law : laws()) {
    CAPTURE(law.id);
    CorpusSpec c{21, 5, 40, ""};
    if (law.shape == "ring" || law.shape == "model") c.max_elements = 24;
    const LawReport one = check_law(law, c, 1);
    const LawReport many = check_law(law, c, 4);
    CHECK(one.ok());
    CHECK(one.instances == 40);
    CHECK(one.to_json().dump() == many.to_json().dump());
  }
}

TEST_CASE("injected fault is reported with its instance") {
  const LawReport r = check_law(find_law("prop-1-3-8"), CorpusSpec{4, 5, 10, ""}, 2, 3);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].index == 3);
  CHECK(r.failures[0].counterexample["shape"] == "packeted-site");
  const io::SiteFile back = io::parse_site(r.failures[0].counterexample["text"].get<std::string>());
  CHECK(back.packeting.has_value());
  CHECK_THROWS_AS((void)check_law(find_law("prop-1-3-8"), CorpusSpec{4, 5, 10, ""}, 2, 10), InputError);
}

TEST_CASE("law harness rejects instances of the wrong shape") {
  Instance bad;
  bad.shape = "model";
  bad.ring = FiniteCommRing::zmod(4);
  CHECK_THROWS_AS((void)check_law(find_law("thm-a-1-11"), std::vector<Instance>{bad}, 1), InputError);
  Instance ring;
  ring.shape = "ring";
  ring.ring = FiniteCommRing::zmod(4);
  CHECK_THROWS_AS((void)check_law(find_law("thm-a-1-11"), std::vector<Instance>{ring}, 1), InputError);
  CHECK(check_law(find_law("prop-0-1-0"), std::vector<Instance>{ring}, 1).ok());
}
