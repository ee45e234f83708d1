#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prosite/frame.hpp"
#include "prosite/points.hpp"
#include "prosite/ring.hpp"
#include "prosite/site.hpp"
#include "prosite/stone.hpp"
#include "prosite/ttg.hpp"

namespace prosite::io {

using nlohmann::json;

// Every parser throws InputError("<file>:<line>: ... '<token>'") on bad input.

std::string read_file(const std::string& path);

// elements: a b c
// le: a<=b b<=c
Proset parse_proset(const std::string& text, const std::string& file = "<input>");

struct SiteFile {
  Site site;
  std::optional<Packeting> packeting;
};
// Proset lines plus `cover c: d e` and `gamma c: d e f`. The topology is
// generated by the cover families together with S^gamma when gamma lines
// are present.
SiteFile parse_site(const std::string& text, const std::string& file = "<input>");

// points: p q r
// open: q r        (sub-basis member; repeatable)
// JSON in the space format is accepted as well.
FiniteSpace parse_space(const std::string& text, const std::string& file = "<input>");

// Proset lines and a `lattice` line.
DistLattice parse_lattice(const std::string& text, const std::string& file = "<input>");

// ring zmod 12 | ring product zmod 2 zmod 3 | ring table, then
// `elements:`, `add:` and `mul:` each followed by one row per element.
FiniteCommRing parse_ring(const std::string& text, const std::string& file = "<input>");
// "zmod 6", "zmod:6", "product zmod 2 zmod 3", "product:zmod:2:zmod:3".
FiniteCommRing ring_from_descriptor(const std::string& desc);

// model affine <ring descriptor> | explicit: `space <file>` (or inline
// `points:`/`open:` lines), `object a supp: p q`, `unit a`, `zero z`.
// `load` reads the space file named by a `space` line.
SupportModel parse_model(const std::string& text, const std::string& file = "<input>",
                         const std::function<std::string(const std::string&)>& load = {});

// Text emitters in the formats above; parse(emit(x)) reproduces x.
std::string proset_text(const Proset& p);
std::string site_text(const Site& site, const std::optional<Packeting>& pk = std::nullopt);
std::string space_text(const FiniteSpace& x);
std::string lattice_text(const DistLattice& d);
std::string ring_text(const FiniteCommRing& r);
std::string model_text(const SupportModel& m);

json space_to_json(const FiniteSpace& x);
FiniteSpace space_from_json(const json& j);
json frame_to_json(const Frame& f);
Frame frame_from_json(const json& j);
json ring_to_json(const FiniteCommRing& r);
FiniteCommRing ring_from_json(const json& j);

// Ringed space as plain data: rings keyed by the open's bitset string.
struct RingedSpaceData {
  FiniteSpace space;
  std::map<std::string, FiniteCommRing> rings;
  struct Restriction {
    std::string from, to;
    std::vector<int> map;
    bool operator==(const Restriction&) const = default;
  };
  std::vector<Restriction> restrictions;
};
RingedSpaceData ringed_space_data(const RingedSpace& rs);
json ringed_space_to_json(const RingedSpaceData& rs);
RingedSpaceData ringed_space_from_json(const json& j);
bool same_ring_tables(const FiniteCommRing& a, const FiniteCommRing& b);

// Specialization order: edge p -> q iff p lies in the closure of q (p != q).
std::string space_to_dot(const FiniteSpace& x, const std::string& name = "space");

}  // namespace prosite::io
