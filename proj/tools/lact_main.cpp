// lact - exact computations for groups acting on edge-colored regular trees
// with prescribed local action.
//
// Subcommands: classify, aut, dynamics, ursfin. All documents are JSON with
// stable field order; identical inputs produce byte-identical output.
// Exit codes: 0 success, 1 bounded search found nothing, 2 invalid input,
// 3 I/O failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "lact/dynamics.hpp"
#include "lact/error.hpp"
#include "lact/json_io.hpp"
#include "lact/ursfin.hpp"

namespace {

using lact::Json;

constexpr int kSchemaVersion = 1;

int exit_code_for(const lact::Error& e) {
  switch (e.kind()) {
    case lact::Error::Kind::io: return 3;
    default: return 2;
  }
}

Json document(const std::string& kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    lact::write_json_file(out_path, j);
}

lact::PairPtr load_pair(const std::string& path) {
  return std::make_shared<const lact::LocalActionPair>(
      lact::pair_from_json(lact::read_json_file(path)));
}

std::string classification_text(const lact::ClassificationReport& r) {
  std::string text;
  text += "degree                : " + std::to_string(r.degree) + "\n";
  text += "orbits of F'+ (r)     : " + std::to_string(r.r) + "\n";
  text += "|D| on orbits         : " + std::to_string(r.d_order) +
          (r.d_faithful ? "" : "  [warning: order differs from [F':F'+]]") + "\n";
  text += "Q = G*/G+             : " + lact::to_string(r.q_class) + "\n";
  text += "G/G+                  : " + lact::to_string(r.gamma_mod_env) + "\n";
  text += std::string("boundary indivisible  : ") + (r.boundary_indivisible ? "yes" : "no") + "\n";
  text += std::string("virtually simple      : ") + (r.virtually_simple ? "yes" : "no") + "\n";
  text += std::string("discrete              : ") + (r.discrete ? "yes" : "no") + "\n";
  text += std::string("F semi-regular        : ") + (r.prereq_f_semiregular ? "yes" : "no") + "\n";
  text += std::string("F != F'               : ") + (r.prereq_f_neq_fprime ? "yes" : "no") + "\n";
  return text;
}

std::string word_to_string(const std::vector<int>& word, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += names[word[i]];
  }
  return s;
}

std::string stem_of(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("LACT_THREADS")) {
#ifdef _OPENMP
    int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
#endif
    (void)threads;
  }

  CLI::App app{"exact toolkit for groups acting on edge-colored regular trees"};
  app.require_subcommand(1);

  // ---- classify ----------------------------------------------------------
  auto* classify_cmd = app.add_subcommand("classify", "classification report for a pair file");
  std::string classify_pair, classify_format = "json", classify_out;
  classify_cmd->add_option("--pair", classify_pair, "pair file (degree, F, Fprime)")
      ->required();
  classify_cmd->add_option("--format", classify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("-o,--out", classify_out, "write the JSON document to a file");

  // ---- aut ----------------------------------------------------------------
  auto* aut_cmd = app.add_subcommand("aut", "finitary tree-automorphism arithmetic");
  aut_cmd->require_subcommand(1);
  std::string aut_pair, aut_out, aut_vertex;
  std::vector<std::string> aut_files;
  auto add_aut_common = [&](CLI::App* sub, int n_files) {
    sub->add_option("--pair", aut_pair, "pair file")->required();
    sub->add_option("files", aut_files, "automorphism JSON files")
        ->expected(n_files)
        ->required();
    sub->add_option("-o,--out", aut_out, "write the JSON document to a file");
  };
  auto* aut_compose = aut_cmd->add_subcommand("compose", "compose(g, h): v -> g(h(v))");
  add_aut_common(aut_compose, 2);
  auto* aut_inverse = aut_cmd->add_subcommand("inverse", "inverse automorphism");
  add_aut_common(aut_inverse, 1);
  auto* aut_eval = aut_cmd->add_subcommand("eval", "image of a vertex");
  add_aut_common(aut_eval, 1);
  aut_eval->add_option("--vertex", aut_vertex, "vertex word (digits or comma form)")
      ->required();
  auto* aut_gplus = aut_cmd->add_subcommand(
      "gplus", "membership in the subgroup generated by edge fixators");
  add_aut_common(aut_gplus, 1);
  auto* aut_isometry = aut_cmd->add_subcommand("classify-isometry", "isometry type");
  add_aut_common(aut_isometry, 1);

  // ---- dynamics -----------------------------------------------------------
  auto* dyn_cmd = app.add_subcommand("dynamics", "boundary dynamics certificates and searches");
  dyn_cmd->require_subcommand(1);
  std::string dyn_pair, dyn_out;
  std::string dyn_a, dyn_b, dyn_um, dyn_up, dyn_vm, dyn_vp, dyn_omega, dyn_target, dyn_cyl;
  std::vector<std::string> dyn_gens, dyn_cover;
  int dyn_max_len = 8;
  int dyn_depth = 10;
  int dyn_check_len = 4;

  auto* dyn_pp = dyn_cmd->add_subcommand("pingpong", "validate a ping-pong certificate");
  dyn_pp->add_option("--pair", dyn_pair)->required();
  dyn_pp->add_option("--a", dyn_a, "first generator file")->required();
  dyn_pp->add_option("--b", dyn_b, "second generator file")->required();
  dyn_pp->add_option("--u-minus", dyn_um, "half-tree base:dir")->required();
  dyn_pp->add_option("--u-plus", dyn_up, "half-tree base:dir")->required();
  dyn_pp->add_option("--v-minus", dyn_vm, "half-tree base:dir")->required();
  dyn_pp->add_option("--v-plus", dyn_vp, "half-tree base:dir")->required();
  dyn_pp->add_option("--check-len", dyn_max_len, "word length for the no-relation check");
  dyn_pp->add_option("--depth", dyn_depth, "probe ball radius for the no-relation check");
  dyn_pp->add_option("-o,--out", dyn_out);

  auto* dyn_wander = dyn_cmd->add_subcommand("wander", "validate a wandering certificate");
  dyn_wander->add_option("--pair", dyn_pair)->required();
  dyn_wander->add_option("--a", dyn_a)->required();
  dyn_wander->add_option("--b", dyn_b)->required();
  dyn_wander->add_option("--u-minus", dyn_um)->required();
  dyn_wander->add_option("--u-plus", dyn_up)->required();
  dyn_wander->add_option("--v-minus", dyn_vm)->required();
  dyn_wander->add_option("--v-plus", dyn_vp)->required();
  dyn_wander->add_option("--omega", dyn_omega, "wandering half-tree base:dir")->required();
  dyn_wander->add_option("--check-len", dyn_check_len, "word length for the brute check");
  dyn_wander->add_option("-o,--out", dyn_out);

  auto* dyn_compress = dyn_cmd->add_subcommand(
      "compress", "search a word compressing a cover of half-trees into a target");
  dyn_compress->add_option("--pair", dyn_pair)->required();
  dyn_compress->add_option("--gen", dyn_gens, "generator file (repeatable)")->required();
  dyn_compress->add_option("--set", dyn_cover, "half-tree of the cover (repeatable)")
      ->required();
  dyn_compress->add_option("--target", dyn_target, "target half-tree")->required();
  dyn_compress->add_option("--max-len", dyn_max_len, "search bound");
  dyn_compress->add_option("-o,--out", dyn_out);

  auto* dyn_endpoint = dyn_cmd->add_subcommand(
      "endpoint", "search a hyperbolic word with attracting end in a cylinder");
  dyn_endpoint->add_option("--pair", dyn_pair)->required();
  dyn_endpoint->add_option("--gen", dyn_gens, "generator file (repeatable)")->required();
  dyn_endpoint->add_option("--cyl", dyn_cyl, "cylinder half-tree base:dir")->required();
  dyn_endpoint->add_option("--max-len", dyn_max_len, "search bound");
  dyn_endpoint->add_option("-o,--out", dyn_out);

  // ---- ursfin --------------------------------------------------------------
  auto* urs_cmd = app.add_subcommand("ursfin", "subgroup classes of a finite group");
  urs_cmd->require_subcommand(1);
  std::string urs_group, urs_out;
  std::uint64_t urs_bound = 2000;
  auto* urs_report = urs_cmd->add_subcommand(
      "report", "subgroups, conjugacy classes, class order and envelopes");
  urs_report->add_option("--group", urs_group, "group file (degree, generators)")->required();
  urs_report->add_option("--bound", urs_bound, "largest allowed group order");
  urs_report->add_option("-o,--out", urs_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) {
      lact::PairPtr pair = load_pair(classify_pair);
      lact::ClassificationReport report = lact::classify(pair->f(), pair->f_prime());
      Json doc = document("classification");
      doc["input"] = lact::pair_to_json(*pair);
      doc["report"] = lact::report_to_json(report);
      doc["diagnostics"] = Json::array();
      if (!report.d_faithful)
        doc["diagnostics"].push_back("the action of D on the orbit set is not faithful");
      if (classify_format == "text")
        std::cout << classification_text(report);
      else
        emit(doc, classify_out);
      return 0;
    }

    if (aut_cmd->parsed()) {
      lact::PairPtr pair = load_pair(aut_pair);
      std::vector<lact::TreeAut> auts;
      for (const std::string& path : aut_files)
        auts.push_back(lact::aut_from_json(lact::read_json_file(path), pair));
      if (aut_compose->parsed()) {
        Json doc = document("automorphism");
        doc["result"] = lact::aut_to_json(compose(auts[0], auts[1]));
        emit(doc, aut_out);
      } else if (aut_inverse->parsed()) {
        Json doc = document("automorphism");
        doc["result"] = lact::aut_to_json(auts[0].inverse());
        emit(doc, aut_out);
      } else if (aut_eval->parsed()) {
        Json doc = document("evaluation");
        doc["vertex"] = aut_vertex;
        doc["image"] = auts[0].apply(lact::Vertex::parse(aut_vertex, pair->degree())).str();
        emit(doc, aut_out);
      } else if (aut_gplus->parsed()) {
        Json doc = document("gplus");
        doc["in_gplus"] = lact::in_gplus(auts[0], lact::orbit_coloring(*pair));
        emit(doc, aut_out);
      } else if (aut_isometry->parsed()) {
        lact::IsometryClass cls = auts[0].classify_isometry();
        Json doc = document("isometry");
        switch (cls.type) {
          case lact::IsometryClass::Type::elliptic:
            doc["type"] = "elliptic";
            doc["fixed_vertex"] = cls.vertex.str();
            break;
          case lact::IsometryClass::Type::inversion:
            doc["type"] = "inversion";
            doc["edge"] = Json::array(
                {cls.vertex.str(), cls.vertex.neighbor(cls.edge_color).str()});
            break;
          case lact::IsometryClass::Type::hyperbolic:
            doc["type"] = "hyperbolic";
            doc["translation_length"] = cls.translation_length;
            doc["axis_vertex"] = cls.vertex.str();
            doc["attracting"] = Json::object(
                {{"prefix", lact::Vertex(cls.attracting->prefix()).str()},
                 {"period", lact::Vertex(cls.attracting->period()).str()}});
            doc["repelling"] = Json::object(
                {{"prefix", lact::Vertex(cls.repelling->prefix()).str()},
                 {"period", lact::Vertex(cls.repelling->period()).str()}});
            break;
        }
        emit(doc, aut_out);
      }
      return 0;
    }

    if (dyn_cmd->parsed()) {
      lact::PairPtr pair = load_pair(dyn_pair);
      const int d = pair->degree();
      if (dyn_pp->parsed() || dyn_wander->parsed()) {
        lact::TreeAut a = lact::aut_from_json(lact::read_json_file(dyn_a), pair);
        lact::TreeAut b = lact::aut_from_json(lact::read_json_file(dyn_b), pair);
        auto outcome = lact::pingpong_certify(
            a, b, lact::HalfTree::parse(dyn_um, d), lact::HalfTree::parse(dyn_up, d),
            lact::HalfTree::parse(dyn_vm, d), lact::HalfTree::parse(dyn_vp, d));
        Json doc = document(dyn_pp->parsed() ? "pingpong_certificate" : "wandering_certificate");
        doc["a"] = dyn_a;
        doc["b"] = dyn_b;
        doc["u_minus"] = dyn_um;
        doc["u_plus"] = dyn_up;
        doc["v_minus"] = dyn_vm;
        doc["v_plus"] = dyn_vp;
        if (!outcome.ok()) {
          doc["valid"] = false;
          doc["failure"] = outcome.failure;
          emit(doc, dyn_out);
          return 1;
        }
        if (dyn_pp->parsed()) {
          auto rel = lact::free_no_relation_check(*outcome.certificate, dyn_max_len, dyn_depth);
          doc["valid"] = true;
          doc["no_relation_check"] =
              Json::object({{"max_len", dyn_max_len}, {"depth", dyn_depth}, {"ok", rel.ok}});
          emit(doc, dyn_out);
          return 0;
        }
        auto wander =
            lact::wandering_certify(*outcome.certificate, lact::HalfTree::parse(dyn_omega, d));
        doc["omega"] = dyn_omega;
        if (!wander.ok()) {
          doc["valid"] = false;
          doc["failure"] = wander.failure;
          emit(doc, dyn_out);
          return 1;
        }
        bool brute = lact::wandering_brute_check(*outcome.certificate,
                                                 lact::HalfTree::parse(dyn_omega, d),
                                                 dyn_check_len);
        doc["valid"] = true;
        doc["brute_check"] = Json::object({{"max_len", dyn_check_len}, {"ok", brute}});
        emit(doc, dyn_out);
        return 0;
      }
      // compress / endpoint searches
      std::vector<lact::TreeAut> gens;
      std::vector<std::string> names;
      for (const std::string& path : dyn_gens) {
        gens.push_back(lact::aut_from_json(lact::read_json_file(path), pair));
        names.push_back(stem_of(path));
      }
      if (dyn_compress->parsed()) {
        std::vector<lact::HalfTree> cover;
        for (const std::string& text : dyn_cover)
          cover.push_back(lact::HalfTree::parse(text, d));
        auto word = lact::compress_search(gens, cover, lact::HalfTree::parse(dyn_target, d),
                                          dyn_max_len);
        Json doc = document("compression");
        doc["max_len"] = dyn_max_len;
        if (!word) {
          doc["result"] = "NotFound";
          emit(doc, dyn_out);
          return 1;
        }
        doc["result"] = "Found";
        doc["word"] = word_to_string(*word, names);
        emit(doc, dyn_out);
        return 0;
      }
      if (dyn_endpoint->parsed()) {
        auto word =
            lact::hyperbolic_endpoint_in(gens, lact::HalfTree::parse(dyn_cyl, d), dyn_max_len);
        Json doc = document("endpoint");
        doc["max_len"] = dyn_max_len;
        if (!word) {
          doc["result"] = "NotFound";
          emit(doc, dyn_out);
          return 1;
        }
        doc["result"] = "Found";
        doc["word"] = word_to_string(*word, names);
        emit(doc, dyn_out);
        return 0;
      }
    }

    if (urs_cmd->parsed()) {
      lact::PermGroup g = lact::group_from_json(lact::read_json_file(urs_group));
      auto classes = lact::urs_classes(g, urs_bound);
      Json doc = document("ursfin_report");
      doc["group"] = lact::group_to_json(g);
      doc["order"] = g.order();
      std::uint64_t subgroup_count = 0;
      Json class_array = Json::array();
      for (const auto& cls : classes) {
        subgroup_count += cls.members.size();
        Json c;
        c["member_order"] = cls.members.front().order();
        c["size"] = cls.members.size();
        Json members = Json::array();
        for (const auto& m : cls.members) {
          Json gens = Json::array();
          for (const auto& p : m.generators()) gens.push_back(p.cycles());
          members.push_back(gens);
        }
        c["members"] = members;
        lact::PermGroup env = lact::class_envelope(g, cls);
        Json env_gens = Json::array();
        for (const auto& p : env.generators()) env_gens.push_back(p.cycles());
        c["envelope"] = Json::object({{"order", env.order()}, {"generators", env_gens}});
        class_array.push_back(c);
      }
      doc["subgroup_count"] = subgroup_count;
      doc["classes"] = class_array;
      // class order as a Hasse diagram (strict covers)
      const size_t n = classes.size();
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) leq[i][j] = lact::class_leq(classes[i], classes[j]);
      Json hasse = Json::array();
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (i == j || !leq[i][j]) continue;
          bool cover = true;
          for (size_t k = 0; k < n && cover; ++k)
            if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
          if (cover) hasse.push_back(Json::array({i, j}));
        }
      doc["leq_hasse"] = hasse;
      emit(doc, urs_out);
      return 0;
    }
  } catch (const lact::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
