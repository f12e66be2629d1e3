#include "lact/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "lact/error.hpp"

namespace lact {

namespace {

std::vector<Perm> perms_from_json(const Json& j, int degree, const char* what) {
  if (!j.is_array()) fail(Error::Kind::parse, std::string(what) + " must be an array");
  std::vector<Perm> gens;
  for (const auto& item : j) {
    if (!item.is_string())
      fail(Error::Kind::parse, std::string(what) + " entries must be cycle strings");
    gens.push_back(Perm::parse_cycles(item.get<std::string>(), degree));
  }
  return gens;
}

int degree_from_json(const Json& j) {
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    fail(Error::Kind::parse, "missing integer field \"degree\"");
  return j["degree"].get<int>();
}

}  // namespace

Json group_to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.cycles());
  j["generators"] = gens;
  return j;
}

PermGroup group_from_json(const Json& j) {
  const int d = degree_from_json(j);
  if (!j.contains("generators"))
    fail(Error::Kind::parse, "missing field \"generators\"");
  return PermGroup(d, perms_from_json(j["generators"], d, "generators"));
}

Json pair_to_json(const LocalActionPair& pair) {
  Json j;
  j["degree"] = pair.degree();
  Json f = Json::array(), fp = Json::array();
  for (const Perm& p : pair.f().generators()) f.push_back(p.cycles());
  for (const Perm& p : pair.f_prime().generators()) fp.push_back(p.cycles());
  j["F"] = f;
  j["Fprime"] = fp;
  return j;
}

LocalActionPair pair_from_json(const Json& j) {
  const int d = degree_from_json(j);
  if (!j.contains("F") || !j.contains("Fprime"))
    fail(Error::Kind::parse, "pair file requires fields \"F\" and \"Fprime\"");
  PermGroup f(d, perms_from_json(j["F"], d, "F"));
  PermGroup fp(d, perms_from_json(j["Fprime"], d, "Fprime"));
  return LocalActionPair(std::move(f), std::move(fp));
}

Json aut_to_json(const TreeAut& g) {
  Json j;
  j["root_image"] = g.root_image().str();
  j["radius"] = g.radius();
  Json portrait = Json::object();
  std::vector<Vertex> keys;
  for (const auto& [v, sigma] : g.portrait()) keys.push_back(v);
  std::sort(keys.begin(), keys.end(), length_lex_less);
  for (const Vertex& v : keys) portrait[v.str()] = g.portrait().at(v).cycles();
  j["portrait"] = portrait;
  return j;
}

TreeAut aut_from_json(const Json& j, PairPtr pair) {
  if (!j.contains("root_image") || !j.contains("radius") || !j.contains("portrait"))
    fail(Error::Kind::parse,
         "automorphism file requires \"root_image\", \"radius\" and \"portrait\"");
  const int d = pair->degree();
  Vertex root = Vertex::parse(j["root_image"].get<std::string>(), d);
  int radius = j["radius"].get<int>();
  Portrait portrait;
  for (const auto& [key, value] : j["portrait"].items())
    portrait.emplace(Vertex::parse(key, d), Perm::parse_cycles(value.get<std::string>(), d));
  return TreeAut(std::move(pair), std::move(root), radius, std::move(portrait));
}

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["r"] = r.r;
  Json d;
  d["order"] = r.d_order;
  d["generators"] = r.d_generators;
  d["faithful_on_orbits"] = r.d_faithful;
  d["index"] = r.index;
  j["D"] = d;
  j["q_class"] = to_string(r.q_class);
  j["gamma_mod_env"] = to_string(r.gamma_mod_env);
  j["boundary_indivisible"] = r.boundary_indivisible;
  j["virtually_simple"] = r.virtually_simple;
  j["discrete"] = r.discrete;
  Json prereq;
  prereq["F_semiregular"] = r.prereq_f_semiregular;
  prereq["F_neq_Fprime"] = r.prereq_f_neq_fprime;
  j["prerequisites"] = prereq;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Kind::io, "cannot read \"" + path + "\"");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Error::Kind::parse, "invalid JSON in \"" + path + "\": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(Error::Kind::io, "cannot write \"" + path + "\"");
  out << j.dump(2) << '\n';
}

}  // namespace lact
