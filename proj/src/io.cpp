#include "pal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pal/error.hpp"

namespace pal::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PosetPtr poset_from_json(const Json& j) {
  if (!j.is_object()) parse_error("poset must be a JSON object");
  std::string name = "P";
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_error("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  const Json& elems = field(j, "elements");
  if (!elems.is_array()) parse_error("\"elements\" must be an array");
  std::vector<std::string> names;
  for (const auto& e : elems) {
    if (!e.is_string()) parse_error("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  Poset::Relation rel;
  if (j.contains("le")) {
    const Json& le = j["le"];
    if (!le.is_array()) parse_error("\"le\" must be an array of pairs");
    for (const auto& pair : le) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        parse_error("each \"le\" entry must be a pair of names");
      rel.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return Poset::build(std::move(name), std::move(names), rel);
}

PosetPtr load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return poset_from_json(j);
}

Json poset_to_json(const Poset& p) {
  Json le = Json::array();
  for (auto [a, b] : p.hasse_edges()) le.push_back({p.element_name(a), p.element_name(b)});
  return {{"name", p.name()}, {"elements", p.names()}, {"le", le}};
}

std::string hasse_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph " << quote(p.name()) << " {\n  rankdir=BT;\n";
  for (const auto& n : p.names()) out << "  " << quote(n) << ";\n";
  for (auto [a, b] : p.hasse_edges())
    out << "  " << quote(p.element_name(a)) << " -> " << quote(p.element_name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

Json segment_to_json(const Poset& p, const ElemSet& s) {
  auto names = p.names_of(s);
  std::sort(names.begin(), names.end());
  return names;
}

Json clopen_to_json(const StoneSpace& space, const Clopen& c) {
  std::vector<std::vector<std::string>> segments;
  c.for_each([&](std::size_t i) {
    auto names = space.poset()->names_of(space.points()[i]);
    std::sort(names.begin(), names.end());
    segments.push_back(std::move(names));
  });
  std::sort(segments.begin(), segments.end());
  return segments;
}

Json lattice_to_json(const Poset& p, const LatticeElem& a) {
  Json out = Json::array();
  for (const auto& t : a.terms) out.push_back(segment_to_json(p, t.sigma));
  return out;
}

ArrayLabeling labeling_from_json(const Poset& target, const Json& j) {
  const Json& k = field(j, "k");
  const Json& n = field(j, "N");
  if (!k.is_number_integer() || !n.is_number_integer() || k.get<long long>() < 0 || n.get<long long>() < 0)
    parse_error("\"k\" and \"N\" must be non-negative integers");
  const auto arity = k.get<std::size_t>();
  const auto horizon = n.get<std::size_t>();
  if (j.contains("generator")) {
    if (j["generator"] != "rado-identity") parse_error("unknown labeling generator");
    if (arity != 2) throw Error(ErrorKind::BadArity, "rado-identity labels front(2, N)");
    return rado_identity_labeling(target, horizon);
  }
  ArrayLabeling arr{Front(arity, horizon), {}};
  const Json& labels = field(j, "labels");
  if (!labels.is_object()) parse_error("\"labels\" must be an object");
  arr.label.assign(arr.front.blocks().size(), 0);
  std::vector<bool> seen(arr.label.size(), false);
  for (const auto& [key, value] : labels.items()) {
    Block b;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        b.push_back(std::stoul(part));
      } catch (const std::exception&) {
        parse_error("bad block key \"" + key + "\"");
      }
    }
    auto idx = arr.front.index_of(b);
    if (!idx) parse_error("block \"" + key + "\" is not in the front");
    if (!value.is_string()) parse_error("labels must be element names");
    arr.label[*idx] = target.index_of(value.get<std::string>());
    seen[*idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) parse_error("labeling is not total on the front");
  return arr;
}

}  // namespace pal::io
