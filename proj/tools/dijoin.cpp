// Command-line front end. Structured output is JSON on stdout; errors go to
// stderr with exit code 1, and check-woodall exits 2 on a "no" verdict.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dijoin/classes.hpp"
#include "dijoin/dicuts.hpp"
#include "dijoin/fixtures.hpp"
#include "dijoin/oracle.hpp"
#include "dijoin/packing.hpp"
#include "dijoin/reductions.hpp"
#include "dijoin/text_format.hpp"

using json = nlohmann::ordered_json;
using namespace dijoin;

namespace {

json edge_names(const Digraph& d, const EdgeSet& s) {
  json out = json::array();
  for (EdgeId e : s) out.push_back(d.edge_name(e));
  return out;
}

json vertex_names(const Digraph& d, const VertexSet& s) {
  json out = json::array();
  for (VertexId v : s) out.push_back(d.vertex_name(v));
  return out;
}

json dicut_json(const Digraph& d, const Capacity& c, const Dicut& b) {
  DicutFlags f = classify_dicut(d, b);
  return {{"in_shore", vertex_names(d, b.in_shore)},
          {"edges", edge_names(d, b.edges)},
          {"size", b.size()},
          {"capacity", c.total(b.edges)},
          {"dibond", is_dibond(d, b)},
          {"atomic", f.atomic},
          {"source_sink", f.source_sink}};
}

json class_json(const Digraph& d, const Capacity& c, const std::vector<Dicut>& cls) {
  json out = json::array();
  for (const Dicut& b : cls) out.push_back(dicut_json(d, c, b));
  return out;
}

// Lines "dicut v1,v2,..." name in-shores; '#' starts a comment.
std::vector<Dicut> read_class_file(const Digraph& d, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::vector<Dicut> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word, list;
    if (!(words >> word)) continue;
    if (word != "dicut" || !(words >> list)) {
      throw Error(ErrorCode::kParseError,
                  path + " line " + std::to_string(number) + ": expected 'dicut v1,v2,...'");
    }
    VertexSet shore;
    std::istringstream names(list);
    std::string name;
    while (std::getline(names, name, ',')) {
      auto v = d.find_vertex(name);
      if (!v) {
        throw Error(ErrorCode::kParseError, path + " line " + std::to_string(number) +
                                                ": unknown vertex " + name);
      }
      shore.push_back(*v);
    }
    out.push_back(dicut_from_inshore(d, shore));
  }
  return out;
}

struct ClassOptions {
  std::string name = "all";
  bool dibonds_only = false;
};

void add_class_options(CLI::App* cmd, ClassOptions& o) {
  cmd->add_option("--class", o.name,
                  "all, dibonds, min, atomic, source-sink or file:<path>");
  cmd->add_flag("--dibonds-only", o.dibonds_only, "keep only the dibonds of the class");
}

DicutClass class_from(const Digraph& d, const Capacity& c, const ClassOptions& o) {
  std::optional<ClassKind> kind;
  if (o.name == "all") kind = ClassKind::kAll;
  else if (o.name == "dibonds") kind = ClassKind::kDibonds;
  else if (o.name == "min") kind = ClassKind::kMin;
  else if (o.name == "atomic") kind = ClassKind::kAtomic;
  else if (o.name == "source-sink") kind = ClassKind::kSourceSink;

  std::vector<Dicut> cls;
  if (kind) {
    if (!o.dibonds_only) return DicutClass::of(*kind);
    cls = DicutClass::of(*kind).resolve(d, &c);
  } else if (o.name.starts_with("file:")) {
    cls = read_class_file(d, o.name.substr(5));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown class " + o.name);
  }
  if (o.dibonds_only) {
    std::erase_if(cls, [&](const Dicut& b) { return !is_dibond(d, b); });
  }
  return DicutClass::of(std::move(cls));
}

json report_json(const Digraph& d, const WoodallReport& r) {
  json witness = json::array();
  for (const EdgeSet& f : r.witness) witness.push_back(edge_names(d, f));
  json out = {{"min_size", r.min_size},
              {"max_packing", r.max_packing},
              {"woodall", r.woodall},
              {"witness", witness}};
  if (r.constructive_k) out["constructive_k"] = *r.constructive_k;
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dicuts, dibonds and disjoint dijoins of finite digraphs"};
  app.require_subcommand(1);

  std::string input;
  ClassOptions copts;

  auto* dicuts_cmd = app.add_subcommand("dicuts", "list the non-empty dicuts");
  dicuts_cmd->add_option("input", input)->required();
  bool include_empty = false;
  dicuts_cmd->add_flag("--include-empty", include_empty, "also list empty dicuts");

  auto* dibonds_cmd = app.add_subcommand("dibonds", "list the dibonds");
  dibonds_cmd->add_option("input", input)->required();

  auto* pack_cmd = app.add_subcommand("pack", "pack disjoint dijoins for a class");
  pack_cmd->add_option("input", input)->required();
  add_class_options(pack_cmd, copts);
  std::string algorithm;
  pack_cmd->add_option("--algorithm", algorithm, "nested, corner or min")
      ->check(CLI::IsMember({"nested", "corner", "min"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive maximum packing");
  oracle_cmd->add_option("input", input)->required();
  add_class_options(oracle_cmd, copts);

  auto* woodall_cmd =
      app.add_subcommand("check-woodall", "compare minimum class capacity with the oracle");
  woodall_cmd->add_option("input", input)->required();
  add_class_options(woodall_cmd, copts);

  auto* transform_cmd = app.add_subcommand("transform", "hat or tilde construction");
  std::string which;
  transform_cmd->add_option("kind", which)->required()->check(CLI::IsMember({"hat", "tilde"}));
  transform_cmd->add_option("input", input)->required();
  add_class_options(transform_cmd, copts);

  auto* quotient_cmd = app.add_subcommand("quotient", "identify vertices no class dicut separates");
  quotient_cmd->add_option("input", input)->required();
  add_class_options(quotient_cmd, copts);

  auto* robbins_cmd = app.add_subcommand("robbins", "two disjoint dijoins of a bridgeless digraph");
  robbins_cmd->add_option("input", input)->required();

  auto* fixture_cmd = app.add_subcommand("fixture", "built-in instances");
  std::string fixture_name;
  fixture_cmd->add_option("name", fixture_name)->required();
  bool emit = false;
  fixture_cmd->add_flag("--emit", emit, "print the digraph in the text format");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fixture_cmd) {
      Fixture f = fixture(fixture_name);
      if (emit) {
        std::cout << write_digraph(f.graph, &f.capacity);
        return 0;
      }
      auto cls = f.cls.resolve(f.graph, &f.capacity);
      print({{"name", f.name},
             {"vertices", f.graph.vertex_count()},
             {"edges", f.graph.edge_count()},
             {"class", f.cls.kind() ? to_string(*f.cls.kind()) : "explicit"},
             {"class_size", cls.size()},
             {"digraph", write_digraph(f.graph, &f.capacity)}});
      return 0;
    }

    DigraphFile file = read_digraph_file(input);
    const Digraph& d = file.graph;
    const Capacity& c = file.capacity;

    if (*dicuts_cmd) {
      EnumerateOptions o;
      o.include_empty = include_empty;
      print(class_json(d, c, enumerate_dicuts(d, o)));
    } else if (*dibonds_cmd) {
      print(class_json(d, c, enumerate_dibonds(d)));
    } else if (*pack_cmd) {
      DicutClass cls = class_from(d, c, copts);
      std::vector<Dicut> dicuts = cls.resolve(d, &c);
      bool is_min = cls.kind() == ClassKind::kMin;
      if (algorithm.empty()) {
        if (is_min) algorithm = "min";
        else if (find_nested_representation(d, dicuts)) algorithm = "nested";
        else algorithm = "corner";
      }
      Packing p;
      if (algorithm == "min") {
        if (!is_min) {
          throw Error(ErrorCode::kInvalidArgument, "--algorithm min needs --class min");
        }
        p = pack_min(d, c);
      } else {
        if (!c.is_unit(d)) {
          throw Error(ErrorCode::kInvalidArgument,
                      "nested and corner packing need unit capacities");
        }
        if (algorithm == "nested") {
          p = pack_nested(d, dicuts);
        } else {
          if (dicuts.empty()) throw Error(ErrorCode::kEmptyClass, "empty dicut class");
          p = pack_corner_closed_uniform(d, dicuts,
                                         static_cast<std::int64_t>(dicuts.front().size()));
        }
      }
      json dijoins = json::array();
      for (const EdgeSet& f : p.dijoins) dijoins.push_back(edge_names(d, f));
      print({{"k", p.k},
             {"dijoins", dijoins},
             {"verified", verify_packing(d, p.cls, p, &c).ok},
             {"class_size", p.cls.size()},
             {"algorithm", algorithm}});
    } else if (*oracle_cmd) {
      auto dicuts = class_from(d, c, copts).resolve(d, &c);
      print(report_json(d, max_disjoint_dijoins(d, dicuts, &c)));
    } else if (*woodall_cmd) {
      WoodallReport r = check_woodall(d, class_from(d, c, copts), &c);
      print(report_json(d, r));
      return r.woodall ? 0 : 2;
    } else if (*transform_cmd) {
      auto dicuts = class_from(d, c, copts).resolve(d, &c);
      json mapped = json::array();
      if (which == "hat") {
        HatResult h = hat_transform(d, c, dicuts);
        json clones = json::object();
        for (const Edge& e : d.edges()) {
          clones[d.edge_name(e.id)] = edge_names(h.graph, h.clones[index(e.id)]);
        }
        for (std::size_t i = 0; i < dicuts.size(); ++i) {
          mapped.push_back({{"dicut", edge_names(d, dicuts[i].edges)},
                            {"image", edge_names(h.graph, h.cls[i].edges)}});
        }
        print({{"digraph", write_digraph(h.graph)}, {"clones", clones}, {"class", mapped}});
      } else {
        TildeResult t = tilde_transform(d, dicuts);
        for (std::size_t i = 0; i < dicuts.size(); ++i) {
          mapped.push_back({{"dicut", edge_names(d, dicuts[i].edges)},
                            {"image", edge_names(t.graph, t.cls[i].edges)},
                            {"image_in_shore", vertex_names(t.graph, t.cls[i].in_shore)}});
        }
        print({{"digraph", write_digraph(t.graph, &t.capacity)}, {"class", mapped}});
      }
    } else if (*quotient_cmd) {
      auto dicuts = class_from(d, c, copts).resolve(d, &c);
      Contraction q = quotient(d, dicuts);
      json projection = json::object();
      for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        projection[d.vertex_name(static_cast<VertexId>(v))] = q.graph.vertex_name(q.projection[v]);
      }
      print({{"digraph", write_digraph(q.graph)},
             {"projection", projection},
             {"acyclic", is_acyclic(q.graph)}});
    } else if (*robbins_cmd) {
      RobbinsDijoins r = robbins_two_dijoins(d);
      print({{"agree", edge_names(d, r.agree)}, {"disagree", edge_names(d, r.disagree)}});
    }
  } catch (const Error& e) {
    std::cerr << "dijoin: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "dijoin: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
