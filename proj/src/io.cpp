#include "prosite/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "prosite/error.hpp"

namespace prosite::io {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg, const std::string& token) {
  throw InputError(file + ":" + std::to_string(line) + ": " + msg + " '" + token + "'");
}

// "c:" -> "c"
std::string strip_colon(const std::string& file, const Line& line, const std::string& token) {
  if (token.size() < 2 || token.back() != ':') fail(file, line.number, "expected a label followed by ':'", token);
  return token.substr(0, token.size() - 1);
}

int lookup(const Proset& p, const std::string& file, int line, const std::string& label) {
  auto id = p.find(label);
  if (!id) fail(file, line, "unknown element", label);
  return *id;
}

struct ProsetLines {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  int elements_line = 0;
  bool lattice = false;
  std::vector<Line> rest;
};

ProsetLines read_proset_lines(const std::vector<Line>& lines, const std::string& file) {
  ProsetLines out;
  for (const Line& line : lines) {
    const std::string& key = line.tokens[0];
    if (key == "elements:") {
      if (out.elements_line != 0) fail(file, line.number, "repeated", key);
      out.elements_line = line.number;
      out.elements.assign(line.tokens.begin() + 1, line.tokens.end());
      std::set<std::string> seen;
      for (const auto& e : out.elements)
        if (!seen.insert(e).second) fail(file, line.number, "duplicate element", e);
    } else if (key == "le:") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const std::string& t = line.tokens[i];
        const auto at = t.find("<=");
        if (at == std::string::npos || at == 0 || at + 2 >= t.size()) fail(file, line.number, "expected a<=b", t);
        out.pairs.emplace_back(t.substr(0, at), t.substr(at + 2));
      }
    } else if (key == "lattice") {
      out.lattice = true;
    } else {
      out.rest.push_back(line);
    }
  }
  if (out.elements_line == 0) throw InputError(file + ": missing 'elements:' line");
  return out;
}

Proset build_proset(const ProsetLines& pl, const std::string& file, const std::vector<Line>& lines) {
  const std::set<std::string> known(pl.elements.begin(), pl.elements.end());
  for (const Line& line : lines)
    if (line.tokens[0] == "le:")
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const std::string& t = line.tokens[i];
        const auto at = t.find("<=");
        for (const std::string& part : {t.substr(0, at), t.substr(at + 2)})
          if (!known.count(part)) fail(file, line.number, "unknown element", part);
      }
  return close_relation(pl.elements, pl.pairs);
}

FiniteSpace space_from_lines(const std::vector<Line>& lines, const std::string& file) {
  std::vector<std::string> points;
  int points_line = 0;
  std::vector<std::pair<int, std::vector<std::string>>> opens;
  for (const Line& line : lines) {
    const std::string& key = line.tokens[0];
    if (key == "points:") {
      if (points_line != 0) fail(file, line.number, "repeated", key);
      points_line = line.number;
      points.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "open:") {
      opens.emplace_back(line.number, std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } else {
      fail(file, line.number, "unknown keyword", key);
    }
  }
  if (points_line == 0) throw InputError(file + ": missing 'points:' line");
  if (static_cast<int>(points.size()) > kMaxSpacePoints) throw ResourceError(file + ": more than 16 points");
  std::set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) fail(file, points_line, "duplicate point", p);
  std::vector<ElemSet> subbasis;
  for (const auto& [number, members] : opens) {
    ElemSet s;
    for (const auto& m : members) {
      auto it = std::find(points.begin(), points.end(), m);
      if (it == points.end()) fail(file, number, "unknown point", m);
      s.insert(static_cast<int>(it - points.begin()));
    }
    subbasis.push_back(s);
  }
  return FiniteSpace::from_subbasis(std::move(points), subbasis);
}

bool looks_like_json(const std::string& text) {
  auto at = text.find_first_not_of(" \t\r\n");
  return at != std::string::npos && text[at] == '{';
}

json parse_json(const std::string& text, const std::string& file) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

FiniteCommRing ring_from_tokens(const std::vector<std::string>& t, std::size_t& pos, const std::string& where) {
  if (pos >= t.size()) throw InputError(where + ": ring descriptor ends early");
  const std::string& head = t[pos++];
  if (head == "zmod") {
    if (pos >= t.size()) throw InputError(where + ": zmod needs a modulus");
    const std::string& arg = t[pos++];
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw InputError(where + ": bad modulus '" + arg + "'");
    }
    if (n < 1 || n > kMaxElements) throw InputError(where + ": modulus out of range '" + arg + "'");
    return FiniteCommRing::zmod(n);
  }
  if (head == "product") {
    FiniteCommRing a = ring_from_tokens(t, pos, where);
    FiniteCommRing b = ring_from_tokens(t, pos, where);
    if (a.size() * b.size() > kMaxElements) throw ResourceError(where + ": product has more than 64 elements");
    return FiniteCommRing::product(a, b);
  }
  throw InputError(where + ": unknown ring constructor '" + head + "'");
}

FiniteCommRing ring_from_line(const Line& line, std::size_t start, const std::string& file) {
  std::vector<std::string> t(line.tokens.begin() + static_cast<std::ptrdiff_t>(start), line.tokens.end());
  std::size_t pos = 0;
  const std::string where = file + ":" + std::to_string(line.number);
  FiniteCommRing r = ring_from_tokens(t, pos, where);
  if (pos != t.size()) fail(file, line.number, "trailing token", t[pos]);
  return r;
}

FiniteCommRing table_ring(const std::vector<Line>& lines, std::size_t start, const std::string& file) {
  std::vector<std::string> labels;
  std::vector<int> add, mul;
  std::size_t i = start;
  if (i >= lines.size() || lines[i].tokens[0] != "elements:")
    throw InputError(file + ": table ring needs an 'elements:' line");
  labels.assign(lines[i].tokens.begin() + 1, lines[i].tokens.end());
  ++i;
  const std::size_t n = labels.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxElements)) throw InputError(file + ": table ring size must be 1..64");
  auto read_table = [&](const std::string& key, std::vector<int>& out) {
    if (i >= lines.size() || lines[i].tokens.size() != 1 || lines[i].tokens[0] != key)
      throw InputError(file + ": expected '" + key + "' line");
    ++i;
    for (std::size_t row = 0; row < n; ++row, ++i) {
      if (i >= lines.size()) throw InputError(file + ": table '" + key + "' ends early");
      const Line& line = lines[i];
      if (line.tokens.size() != n)
        fail(file, line.number, "row needs " + std::to_string(n) + " entries, starting at", line.tokens[0]);
      for (const auto& tok : line.tokens) {
        auto it = std::find(labels.begin(), labels.end(), tok);
        if (it == labels.end()) fail(file, line.number, "unknown ring element", tok);
        out.push_back(static_cast<int>(it - labels.begin()));
      }
    }
  };
  read_table("add:", add);
  read_table("mul:", mul);
  if (i != lines.size()) fail(file, lines[i].number, "unexpected", lines[i].tokens[0]);
  try {
    return FiniteCommRing::from_tables(std::move(labels), std::move(add), std::move(mul));
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

bool descriptor_is_textual(const std::string& d) {
  std::istringstream in(d);
  std::string w;
  while (in >> w)
    if (w == "table") return false;
  return !d.empty();
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += " " + w;
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Proset parse_proset(const std::string& text, const std::string& file) {
  const auto lines = split_lines(text);
  ProsetLines pl = read_proset_lines(lines, file);
  if (!pl.rest.empty()) fail(file, pl.rest[0].number, "unknown keyword", pl.rest[0].tokens[0]);
  return build_proset(pl, file, lines);
}

SiteFile parse_site(const std::string& text, const std::string& file) {
  const auto lines = split_lines(text);
  ProsetLines pl = read_proset_lines(lines, file);
  const Proset p = build_proset(pl, file, lines);
  Coverage coverage;
  std::vector<ElemSet> gamma(static_cast<std::size_t>(p.size()));
  std::vector<bool> gamma_given(static_cast<std::size_t>(p.size()), false);
  bool any_gamma = false;
  for (const Line& line : pl.rest) {
    const std::string& key = line.tokens[0];
    if (key != "cover" && key != "gamma") fail(file, line.number, "unknown keyword", key);
    if (line.tokens.size() < 2) fail(file, line.number, "missing root after", key);
    const int root = lookup(p, file, line.number, strip_colon(file, line, line.tokens[1]));
    ElemSet members;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) members.insert(lookup(p, file, line.number, line.tokens[i]));
    if (key == "cover") {
      for (int d : members)
        if (!p.le(d, root)) fail(file, line.number, "cover member is not below its root", p.label(d));
      coverage.push_back({root, members});
    } else {
      if (gamma_given[static_cast<std::size_t>(root)]) fail(file, line.number, "repeated gamma for", p.label(root));
      gamma_given[static_cast<std::size_t>(root)] = true;
      gamma[static_cast<std::size_t>(root)] = members;
      any_gamma = true;
    }
  }
  SiteFile out;
  if (any_gamma) {
    for (int c = 0; c < p.size(); ++c)
      if (!gamma_given[static_cast<std::size_t>(c)]) throw InputError(file + ": no gamma line for '" + p.label(c) + "'");
    out.packeting = validate_packeting(p, gamma);
    for (const auto& fam : packeting_coverage(*out.packeting)) coverage.push_back(fam);
  }
  out.site = saturate(p, coverage);
  return out;
}

FiniteSpace parse_space(const std::string& text, const std::string& file) {
  if (looks_like_json(text)) {
    try {
      return space_from_json(parse_json(text, file));
    } catch (const json::exception& e) {
      throw InputError(file + ": " + e.what());
    }
  }
  return space_from_lines(split_lines(text), file);
}

DistLattice parse_lattice(const std::string& text, const std::string& file) {
  const auto lines = split_lines(text);
  ProsetLines pl = read_proset_lines(lines, file);
  if (!pl.rest.empty()) fail(file, pl.rest[0].number, "unknown keyword", pl.rest[0].tokens[0]);
  try {
    return DistLattice::from_proset(build_proset(pl, file, lines));
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

FiniteCommRing ring_from_descriptor(const std::string& desc) {
  std::string spaced = desc;
  std::replace(spaced.begin(), spaced.end(), ':', ' ');
  Line line{1, {}};
  std::istringstream in(spaced);
  std::string w;
  while (in >> w) line.tokens.push_back(w);
  if (line.tokens.empty()) throw InputError("empty ring descriptor");
  return ring_from_line(line, 0, "<ring>");
}

FiniteCommRing parse_ring(const std::string& text, const std::string& file) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw InputError(file + ": empty ring file");
  const Line& head = lines[0];
  if (head.tokens[0] != "ring") fail(file, head.number, "expected 'ring'", head.tokens[0]);
  if (head.tokens.size() == 2 && head.tokens[1] == "table") return table_ring(lines, 1, file);
  if (lines.size() > 1) fail(file, lines[1].number, "unexpected", lines[1].tokens[0]);
  return ring_from_line(head, 1, file);
}

SupportModel parse_model(const std::string& text, const std::string& file,
                         const std::function<std::string(const std::string&)>& load) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw InputError(file + ": empty model file");
  const Line& head = lines[0];
  if (head.tokens[0] == "model" && head.tokens.size() >= 2 && head.tokens[1] == "affine") {
    if (lines.size() > 1) fail(file, lines[1].number, "unexpected", lines[1].tokens[0]);
    FiniteCommRing r = ring_from_line(head, 2, file);
    if (r.is_zero_ring()) throw InputError(file + ": affine model over the zero ring");
    return affine_support_model(r);
  }
  std::optional<FiniteSpace> space;
  std::vector<Line> space_lines;
  std::vector<const Line*> objects;
  std::optional<std::pair<int, std::string>> unit, zero;
  for (const Line& line : lines) {
    const std::string& key = line.tokens[0];
    if (key == "model") {
      if (line.tokens.size() != 2 || line.tokens[1] != "explicit") fail(file, line.number, "unknown model kind", line.tokens.size() > 1 ? line.tokens[1] : key);
    } else if (key == "space") {
      if (line.tokens.size() != 2) fail(file, line.number, "expected one path after", key);
      if (!load) fail(file, line.number, "no loader for space file", line.tokens[1]);
      space = parse_space(load(line.tokens[1]), line.tokens[1]);
    } else if (key == "points:" || key == "open:") {
      space_lines.push_back(line);
    } else if (key == "object") {
      objects.push_back(&line);
    } else if (key == "unit" || key == "zero") {
      if (line.tokens.size() != 2) fail(file, line.number, "expected one object after", key);
      (key == "unit" ? unit : zero) = std::make_pair(line.number, line.tokens[1]);
    } else {
      fail(file, line.number, "unknown keyword", key);
    }
  }
  if (!space_lines.empty()) {
    if (space) fail(file, space_lines[0].number, "space given twice", space_lines[0].tokens[0]);
    space = space_from_lines(space_lines, file);
  }
  if (!space) throw InputError(file + ": model has no space");
  if (!unit) throw InputError(file + ": model has no 'unit' line");
  if (!zero) throw InputError(file + ": model has no 'zero' line");
  std::vector<std::string> labels;
  std::vector<ElemSet> supp;
  for (const Line* line : objects) {
    if (line->tokens.size() < 3 || line->tokens[2] != "supp:")
      fail(file, line->number, "expected 'object <name> supp: ...'", line->tokens.back());
    labels.push_back(line->tokens[1]);
    ElemSet s;
    for (std::size_t i = 3; i < line->tokens.size(); ++i) {
      const auto& pts = space->labels();
      auto it = std::find(pts.begin(), pts.end(), line->tokens[i]);
      if (it == pts.end()) fail(file, line->number, "unknown point", line->tokens[i]);
      s.insert(static_cast<int>(it - pts.begin()));
    }
    supp.push_back(s);
  }
  auto index = [&](const std::pair<int, std::string>& ref) {
    auto it = std::find(labels.begin(), labels.end(), ref.second);
    if (it == labels.end()) fail(file, ref.first, "unknown object", ref.second);
    return static_cast<int>(it - labels.begin());
  };
  const int u = index(*unit), z = index(*zero);
  SpectralSpace spectral;
  try {
    spectral = make_spectral(*space, space->opens());
  } catch (const ContractError& e) {
    throw InputError(file + ": " + e.what());
  }
  try {
    return SupportModel::make(std::move(spectral), std::move(labels), std::move(supp), u, z);
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::string proset_text(const Proset& p) {
  std::string out = "elements:" + join_words(p.labels()) + "\n";
  std::vector<std::string> pairs;
  for (int b = 0; b < p.size(); ++b)
    for (int a : p.down(b))
      if (a != b) pairs.push_back(p.label(a) + "<=" + p.label(b));
  if (!pairs.empty()) out += "le:" + join_words(pairs) + "\n";
  return out;
}

std::string site_text(const Site& site, const std::optional<Packeting>& pk) {
  const Proset& p = site.proset();
  std::string out = proset_text(p);
  for (const auto& fam : site.generators()) {
    std::vector<std::string> members;
    for (int d : fam.generators) members.push_back(p.label(d));
    out += "cover " + p.label(fam.root) + ":" + join_words(members) + "\n";
  }
  if (pk)
    for (int c = 0; c < p.size(); ++c) {
      std::vector<std::string> members;
      for (int d : pk->gamma(c)) members.push_back(p.label(d));
      out += "gamma " + p.label(c) + ":" + join_words(members) + "\n";
    }
  return out;
}

std::string space_text(const FiniteSpace& x) {
  std::string out = "points:" + join_words(x.labels()) + "\n";
  for (ElemSet u : x.opens()) {
    if (u.empty()) continue;
    std::vector<std::string> members;
    for (int i : u) members.push_back(x.label(i));
    out += "open:" + join_words(members) + "\n";
  }
  return out;
}

std::string lattice_text(const DistLattice& d) { return "lattice\n" + proset_text(d.order()); }

std::string ring_text(const FiniteCommRing& r) {
  if (descriptor_is_textual(r.descriptor())) return "ring " + r.descriptor() + "\n";
  std::string out = "ring table\nelements:" + join_words(r.labels()) + "\n";
  for (const char* key : {"add:", "mul:"}) {
    out += std::string(key) + "\n";
    for (int a = 0; a < r.size(); ++a) {
      std::vector<std::string> row;
      for (int b = 0; b < r.size(); ++b) row.push_back(r.label(key[0] == 'a' ? r.add(a, b) : r.mul(a, b)));
      out += join_words(row).substr(1) + "\n";
    }
  }
  return out;
}

std::string model_text(const SupportModel& m) {
  if (m.ring() && descriptor_is_textual(m.ring()->descriptor())) {
    const SupportModel rebuilt = affine_support_model(*m.ring());
    if (rebuilt.labels() == m.labels() && rebuilt.supports() == m.supports())
      return "model affine " + m.ring()->descriptor() + "\n";
  }
  const FiniteSpace& x = m.space().space;
  std::string out = "model explicit\n" + space_text(x);
  for (int a = 0; a < m.size(); ++a) {
    std::vector<std::string> pts;
    for (int i : m.supp(a)) pts.push_back(x.label(i));
    out += "object " + m.label(a) + " supp:" + join_words(pts) + "\n";
  }
  out += "unit " + m.label(m.unit()) + "\nzero " + m.label(m.zero()) + "\n";
  return out;
}

json space_to_json(const FiniteSpace& x) {
  json opens = json::array();
  for (ElemSet u : x.opens()) opens.push_back(u.to_vector());
  return {{"points", x.labels()}, {"opens", opens}, {"flags", {{"sober", is_sober(x)}, {"spectral", is_spectral(x)}}}};
}

FiniteSpace space_from_json(const json& j) {
  auto labels = j.at("points").get<std::vector<std::string>>();
  if (static_cast<int>(labels.size()) > kMaxSpacePoints) throw ResourceError("more than 16 points");
  std::vector<ElemSet> opens;
  for (const auto& o : j.at("opens")) {
    ElemSet u;
    for (int i : o.get<std::vector<int>>()) {
      if (i < 0 || i >= static_cast<int>(labels.size())) throw InputError("open mentions point " + std::to_string(i));
      u.insert(i);
    }
    opens.push_back(u);
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return FiniteSpace::from_opens(std::move(labels), std::move(opens));
}

json frame_to_json(const Frame& f) {
  json elements = json::array(), le = json::array(), joins = json::array(), meets = json::array();
  for (int a = 0; a < f.size(); ++a) {
    elements.push_back(f.element(a).to_string(f.width()));
    std::vector<int> le_row, join_row, meet_row;
    for (int b = 0; b < f.size(); ++b) {
      le_row.push_back(f.le(a, b) ? 1 : 0);
      join_row.push_back(f.join(a, b));
      meet_row.push_back(f.meet(a, b));
    }
    le.push_back(le_row);
    joins.push_back(join_row);
    meets.push_back(meet_row);
  }
  return {{"elements", elements}, {"le", le}, {"joins", joins}, {"meets", meets}};
}

Frame frame_from_json(const json& j) {
  std::vector<ElemSet> members;
  int width = -1;
  for (const auto& e : j.at("elements")) {
    const auto s = e.get<std::string>();
    if (width >= 0 && static_cast<int>(s.size()) != width) throw InputError("frame elements have different widths");
    if (s.find_first_not_of("01") != std::string::npos) throw InputError("bad frame element '" + s + "'");
    width = static_cast<int>(s.size());
    members.push_back(ElemSet::from_string(s));
  }
  if (members.empty()) throw InputError("frame has no elements");
  Frame f(width, members);
  if (f.elements() != members) throw InputError("frame elements are not in canonical order");
  const auto n = static_cast<std::size_t>(f.size());
  auto check = [&](const char* key, auto expect) {
    if (!j.contains(key)) return;
    const auto rows = j.at(key).get<std::vector<std::vector<int>>>();
    if (rows.size() != n) throw InputError(std::string("frame table '") + key + "' has the wrong size");
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n) throw InputError(std::string("frame table '") + key + "' has the wrong size");
      for (std::size_t b = 0; b < n; ++b)
        if (rows[a][b] != expect(static_cast<int>(a), static_cast<int>(b)))
          throw InputError(std::string("frame table '") + key + "' disagrees with the elements");
    }
  };
  check("le", [&](int a, int b) { return f.le(a, b) ? 1 : 0; });
  check("joins", [&](int a, int b) { return f.join(a, b); });
  check("meets", [&](int a, int b) { return f.meet(a, b); });
  return f;
}

json ring_to_json(const FiniteCommRing& r) {
  json add = json::array(), mul = json::array();
  for (int a = 0; a < r.size(); ++a) {
    std::vector<int> ar, mr;
    for (int b = 0; b < r.size(); ++b) {
      ar.push_back(r.add(a, b));
      mr.push_back(r.mul(a, b));
    }
    add.push_back(ar);
    mul.push_back(mr);
  }
  return {{"descriptor", r.descriptor()}, {"elements", r.labels()}, {"add", add}, {"mul", mul}};
}

FiniteCommRing ring_from_json(const json& j) {
  auto labels = j.at("elements").get<std::vector<std::string>>();
  std::vector<int> add, mul;
  for (const auto& row : j.at("add"))
    for (int v : row.get<std::vector<int>>()) add.push_back(v);
  for (const auto& row : j.at("mul"))
    for (int v : row.get<std::vector<int>>()) mul.push_back(v);
  const auto n = labels.size();
  if (add.size() != n * n || mul.size() != n * n) throw InputError("ring tables have the wrong size");
  for (int v : add)
    if (v < 0 || v >= static_cast<int>(n)) throw InputError("ring table entry out of range");
  for (int v : mul)
    if (v < 0 || v >= static_cast<int>(n)) throw InputError("ring table entry out of range");
  FiniteCommRing r = FiniteCommRing::from_tables(std::move(labels), std::move(add), std::move(mul));
  if (j.contains("descriptor")) r.set_descriptor(j.at("descriptor").get<std::string>());
  return r;
}

bool same_ring_tables(const FiniteCommRing& a, const FiniteCommRing& b) {
  return a.labels() == b.labels() && a.add_table() == b.add_table() && a.mul_table() == b.mul_table() &&
         a.descriptor() == b.descriptor();
}

RingedSpaceData ringed_space_data(const RingedSpace& rs) {
  RingedSpaceData out;
  out.space = rs.space;
  const int n = rs.space.size();
  for (std::size_t i = 0; i < rs.opens.size(); ++i) out.rings.emplace(rs.opens[i].to_string(n), rs.rings[i].ring);
  for (const auto& r : rs.restrictions)
    out.restrictions.push_back({rs.opens[static_cast<std::size_t>(r.from)].to_string(n),
                                rs.opens[static_cast<std::size_t>(r.to)].to_string(n), r.map});
  return out;
}

json ringed_space_to_json(const RingedSpaceData& rs) {
  json rings = json::object();
  for (const auto& [key, ring] : rs.rings) rings[key] = ring_to_json(ring);
  json restrictions = json::array();
  for (const auto& r : rs.restrictions) restrictions.push_back({{"from", r.from}, {"to", r.to}, {"map", r.map}});
  return {{"space", space_to_json(rs.space)}, {"rings", rings}, {"restrictions", restrictions}};
}

RingedSpaceData ringed_space_from_json(const json& j) {
  RingedSpaceData out;
  out.space = space_from_json(j.at("space"));
  for (const auto& [key, ring] : j.at("rings").items()) out.rings.emplace(key, ring_from_json(ring));
  for (const auto& r : j.at("restrictions"))
    out.restrictions.push_back(
        {r.at("from").get<std::string>(), r.at("to").get<std::string>(), r.at("map").get<std::vector<int>>()});
  return out;
}

std::string space_to_dot(const FiniteSpace& x, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int p = 0; p < x.size(); ++p) out += "  \"" + x.label(p) + "\";\n";
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < x.size(); ++q)
      if (p != q && x.specializes(p, q)) out += "  \"" + x.label(p) + "\" -> \"" + x.label(q) + "\";\n";
  return out + "}\n";
}

}  // namespace prosite::io
