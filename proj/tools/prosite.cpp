#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "prosite/corpus.hpp"
#include "prosite/error.hpp"
#include "prosite/io.hpp"
#include "prosite/laws.hpp"

using namespace prosite;
using io::json;

namespace {

struct Options {
  std::string format = "text";
  int jobs = 0;
  std::optional<std::uint64_t> seed;
  std::size_t max_ideals = kDefaultIdealCap;
};

void emit_space(const Options& opt, const FiniteSpace& x, json extra = json::object()) {
  if (opt.format == "json") {
    json j = io::space_to_json(x);
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump() << "\n";
  } else if (opt.format == "dot") {
    std::cout << io::space_to_dot(x);
  } else {
    std::cout << io::space_text(x);
  }
}

SupportModel load_model(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return io::parse_model(io::read_file(path), path,
                         [&](const std::string& name) { return io::read_file((dir / name).string()); });
}

void reject_dot(const Options& opt, const std::string& verb) {
  if (opt.format == "dot") throw InputError(verb + ": dot output is only for spaces");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite prosites, frames, spectra and their laws"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("PROSITE_FORMAT")) opt.format = env;
  app.add_option("--format", opt.format, "json, dot or text (default from PROSITE_FORMAT, else text)")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--jobs", opt.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opt.seed, "corpus seed, overriding the one in --corpus");
  app.add_option("--max-ideals", opt.max_ideals, "cap on the number of J-ideals in a frame");

  std::string site_path, dlat_path, model_path, space_path, ring_desc, law_id, corpus_text;
  bool hochster = false, boolean = false;
  std::optional<int> inject_fault;

  auto* points = app.add_subcommand("points", "prime-filter space of a site");
  points->add_option("site", site_path)->required();
  auto* frame = app.add_subcommand("frame", "frame of J-ideals of a site");
  frame->add_option("site", site_path)->required();
  auto* spec = app.add_subcommand("spec", "Zariski spectrum of a finite ring");
  spec->add_option("--ring", ring_desc, "zmod:6, product:zmod:2:zmod:3 or a ring file")->required();
  auto* stone = app.add_subcommand("stone", "spectrum of a finite distributive lattice");
  stone->add_option("dlat", dlat_path)->required();
  auto* balmer = app.add_subcommand("balmer", "Balmer spectrum of a support model");
  balmer->add_option("model", model_path)->required();
  auto* reconstruct = app.add_subcommand("reconstruct", "space glued from prime filters of a support model");
  reconstruct->add_option("model", model_path)->required();
  auto* eval = app.add_subcommand("eval", "evaluate a spectrum functor of a space on a ring");
  auto* h = eval->add_flag("--hochster", hochster, "continuous maps Spec A -> X");
  auto* b = eval->add_flag("--boolean", boolean, "Boolean maps from clopens of X to idempotents of A");
  h->excludes(b);
  eval->add_option("space", space_path)->required();
  eval->add_option("--ring", ring_desc)->required();
  auto* check = app.add_subcommand("check", "run a registered law over a generated corpus");
  check->add_option("--law", law_id)->required();
  check->add_option("--corpus", corpus_text, "seed=S,max=M,count=N[,shape=...]")->required();
  check->add_option("--inject-fault", inject_fault, "report this instance as failing (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (opt.format != "json" && opt.format != "dot" && opt.format != "text")
      throw InputError("unknown format '" + opt.format + "'");
    if (*points) {
      const io::SiteFile sf = io::parse_site(io::read_file(site_path), site_path);
      emit_space(opt, point_space(sf.site, opt.max_ideals));
    } else if (*frame) {
      reject_dot(opt, "frame");
      const io::SiteFile sf = io::parse_site(io::read_file(site_path), site_path);
      const Frame f = frame_of_ideals(sf.site, opt.max_ideals);
      if (opt.format == "json") {
        std::cout << io::frame_to_json(f).dump() << "\n";
      } else {
        const Proset& p = sf.site.proset();
        std::cout << "elements: " << f.size() << "\ncoherent: " << (is_coherent(f) ? "yes" : "no") << "\n";
        const auto fin = finite_elements(f);
        for (int a = 0; a < f.size(); ++a)
          std::cout << f.element(a).to_string(f.width()) << " " << p.label_set(f.element(a))
                    << (std::find(fin.begin(), fin.end(), a) != fin.end() ? " finite" : "") << "\n";
      }
    } else if (*spec) {
      const FiniteCommRing r = std::filesystem::exists(ring_desc) ? io::parse_ring(io::read_file(ring_desc), ring_desc)
                                                                  : io::ring_from_descriptor(ring_desc);
      emit_space(opt, spec_ring(r).spectral.space);
    } else if (*stone) {
      emit_space(opt, spec_dlat(io::parse_lattice(io::read_file(dlat_path), dlat_path)).spectral.space);
    } else if (*balmer) {
      emit_space(opt, balmer_spectrum(load_model(model_path)).space);
    } else if (*reconstruct) {
      const SupportModel m = load_model(model_path);
      const Reconstruction rec = reconstruct_space(m);
      if (opt.format == "json" && m.ring()) {
        std::cout << io::ringed_space_to_json(io::ringed_space_data(ringed_space(m, rec))).dump() << "\n";
      } else if (opt.format == "json") {
        emit_space(opt, rec.space, {{"empty", rec.empty}});
      } else {
        emit_space(opt, rec.space);
        if (opt.format == "text" && m.ring())
          for (ElemSet u : rec.space.opens())
            std::cout << "ring " << u.to_string(rec.space.size()) << ": " << structure_ring(m, rec, u).ring.size()
                      << " elements\n";
      }
    } else if (*eval) {
      reject_dot(opt, "eval");
      if (!hochster && !boolean) throw InputError("eval needs --hochster or --boolean");
      const FiniteSpace x = io::parse_space(io::read_file(space_path), space_path);
      const FiniteCommRing r = std::filesystem::exists(ring_desc) ? io::parse_ring(io::read_file(ring_desc), ring_desc)
                                                                  : io::ring_from_descriptor(ring_desc);
      const auto maps = hochster ? evaluate_hochster(make_spectral(x, x.opens()), r) : evaluate_boolean_smashing(x, r);
      if (opt.format == "json") {
        std::cout << json{{"count", maps.size()}, {"maps", maps}}.dump() << "\n";
      } else {
        std::cout << "maps: " << maps.size() << "\n";
        for (const auto& m : maps) {
          for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << m[i];
          std::cout << "\n";
        }
      }
    } else if (*check) {
      reject_dot(opt, "check");
      const Law& law = find_law(law_id);
      CorpusSpec cs = parse_corpus_spec(corpus_text);
      if (opt.seed) cs.seed = *opt.seed;
      const auto start = std::chrono::steady_clock::now();
      const LawReport report = check_law(law, cs, opt.jobs, inject_fault);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::cout << (opt.format == "json" ? report.to_json().dump() + "\n" : report.text());
      std::cerr << "wall time: " << took.count() << " s\n";
      return report.ok() ? 0 : 1;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error (condition " << e.condition() << ", witness " << e.witness() << "): " << e.what()
              << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
