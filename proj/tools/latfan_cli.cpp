// latfan: lattice polytope toolkit around terminal simplicial reflexive
// polytopes. Subcommands: family, check, isom, levels, enum, verify.
//
// Exit codes: 0 success / predicate true; 1 assertion or verification false;
// 2 usage or parse error; 3 internal contradiction; 4 capability limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latfan/enumerate.hpp"
#include "latfan/families.hpp"
#include "latfan/io.hpp"
#include "latfan/isomorphism.hpp"
#include "latfan/predicates.hpp"

using json = nlohmann::ordered_json;
using namespace latfan;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kContradiction = 3;
constexpr int kCapability = 4;

json vec_json(const IntVector& v) {
  json a = json::array();
  for (Int x : v) a.push_back(x.value());
  return a;
}

json vertices_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

json levels_json(const LevelDistribution& dist) {
  json obj = json::object();
  for (const auto& [level, count] : dist.counts) {
    obj[std::to_string(level)] = count;  // descending by construction
  }
  return obj;
}

Polytope load_polytope(const std::string& path) {
  PolytopeData data = read_polytope_file(path);
  return Polytope::make(data.dim, std::move(data.points));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

int run_family(const std::string& name, int dim, const std::string& out) {
  auto id = family_from_name(name);
  if (!id) throw DomainError("unknown family: " + name);
  int fixed = family_fixed_dim(*id);
  if (dim == 0) dim = fixed;
  if (dim == 0) throw DomainError("family " + name + " needs --dim");
  if (fixed != 0 && dim != fixed) {
    throw DomainError("family " + name + " is " + std::to_string(fixed) + "-dimensional");
  }
  Polytope p = make_family(*id, dim);
  std::string text = write_polytope(p);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  return kOk;
}

json check_report(const Polytope& p, bool with_lemmas) {
  const bool reflexive = is_reflexive(p);
  const bool simplicial = is_simplicial(p);
  const bool terminal = reflexive && is_terminal(p);
  const bool smooth = is_smooth(p);

  json report;
  report["dim"] = p.dim();
  report["vertices"] = vertices_json(p.vertices());
  report["properties"] = {{"reflexive", reflexive},
                          {"simplicial", simplicial},
                          {"terminal", terminal},
                          {"smooth", smooth}};
  report["vertex_sum"] = vec_json(p.vertex_sum());

  const bool case_applicable =
      terminal && simplicial && reflexive && p.vertex_count() == 3 * p.dim() - 1;
  if (simplicial && p.origin_interior()) {
    std::vector<int> special = special_facets(p);
    report["special_facet_count"] = special.size();
    json list = json::array();
    for (int f : special) {
      json item;
      item["facet"] = f;
      item["vertex_indices"] = p.facet(f).vertex_indices;
      item["levels"] = levels_json(levels(p, f));
      if (case_applicable) {
        item["case"] = to_string(case_of(p, f));
      } else {
        item["case"] = nullptr;
      }
      list.push_back(std::move(item));
    }
    report["special_facets"] = std::move(list);
  } else {
    report["special_facet_count"] = nullptr;
    report["special_facets"] = json::array();
  }

  if (with_lemmas) {
    json lem;
    if (simplicial && p.origin_interior()) {
      LemmaReport r = run_lemma_suite(p);
      lem["applicable"] = true;
      lem["checks"] = r.checks;
      json violations = json::array();
      for (const auto& v : r.violations) {
        violations.push_back({{"check", v.check}, {"witness", v.witness}});
      }
      lem["violations"] = std::move(violations);
    } else {
      lem["applicable"] = false;
    }
    report["lemmas"] = std::move(lem);
  }
  return report;
}

int run_check(const std::string& file, const std::string& assert_pred, bool with_lemmas,
              const std::string& out) {
  Polytope p = load_polytope(file);
  json report = check_report(p, with_lemmas);
  emit(report, out);

  if (with_lemmas && report["lemmas"]["applicable"] == true &&
      !report["lemmas"]["violations"].empty()) {
    return kContradiction;
  }
  if (!assert_pred.empty()) {
    if (!report["properties"].contains(assert_pred)) {
      throw DomainError("unknown predicate: " + assert_pred +
                        " (expected reflexive|simplicial|terminal|smooth)");
    }
    return report["properties"][assert_pred] == true ? kOk : kFalse;
  }
  return kOk;
}

int run_isom(const std::string& file_a, const std::string& file_b) {
  Polytope a = load_polytope(file_a);
  Polytope b = load_polytope(file_b);
  std::optional<IntMatrix> witness = isomorphism_witness(a, b);
  if (!witness) {
    std::cout << "false\n";
    return kFalse;
  }
  std::cout << "true\n";
  for (const auto& row : witness->rows()) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) std::cout << " ";
      std::cout << row[j];
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_levels(const std::string& file, const std::string& out) {
  Polytope p = load_polytope(file);
  const bool simplicial = is_simplicial(p);
  const bool case_applicable = simplicial && is_reflexive(p) && is_terminal(p) &&
                               p.vertex_count() == 3 * p.dim() - 1;
  json report;
  report["dim"] = p.dim();
  report["facet_count"] = p.facet_count();
  json facets = json::array();
  for (int f = 0; f < p.facet_count(); ++f) {
    json item;
    item["facet"] = f;
    item["vertex_indices"] = p.facet(f).vertex_indices;
    item["normal"] = vec_json(p.facet(f).normal);
    item["offset"] = p.facet(f).offset.value();
    try {
      item["levels"] = levels_json(levels(p, f));
    } catch (const DomainError&) {
      item["levels"] = nullptr;  // non-integral pairing
    }
    bool special = simplicial && p.origin_interior() && is_special_facet(p, f);
    item["special"] = special;
    if (special && case_applicable) {
      item["case"] = to_string(case_of(p, f));
    } else {
      item["case"] = nullptr;
    }
    facets.push_back(std::move(item));
  }
  report["facets"] = std::move(facets);
  emit(report, out);
  return kOk;
}

json classification_json(const char* command, const ClassificationReport& rep) {
  json out;
  out["command"] = command;
  out["dim"] = rep.dim;
  out["target_vertices"] = rep.target_vertices;
  out["pruning"] = rep.prune;
  out["anchor"] = kAnchorNote;
  json cases = json::object();
  for (const auto& [tag, stats] : rep.cases) {
    cases[to_string(tag)] = {{"candidates", stats.candidates}, {"survivors", stats.survivors}};
  }
  out["cases"] = std::move(cases);
  out["class_count"] = rep.representatives.size();
  json classes = json::array();
  for (const auto& p : rep.representatives) {
    classes.push_back({{"vertices", vertices_json(p.vertices())}, {"smooth", is_smooth(p)}});
  }
  out["classes"] = std::move(classes);
  json matches = json::array();
  for (const auto& [family, idx] : rep.family_matches) {
    json m = {{"family", family}};
    if (idx >= 0) {
      m["class"] = idx;
    } else {
      m["class"] = nullptr;
    }
    matches.push_back(std::move(m));
  }
  out["family_matches"] = std::move(matches);
  return out;
}

void write_outputs(const json& report, const std::vector<Polytope>& reps,
                   const std::string& out_dir) {
  if (out_dir.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::filesystem::create_directories(out_dir);
  write_text(out_dir + "/report.json", report.dump(2) + "\n");
  for (size_t i = 0; i < reps.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "rep_%03zu.poly", i);
    write_text(out_dir + "/" + name, write_polytope(reps[i]));
  }
}

int run_enum(int dim, int nverts, const std::vector<int>& case_ids, int jobs, bool no_prune,
             bool strict, const std::string& out_dir) {
  if (nverts != 0 && nverts != 3 * dim - 1) {
    throw DomainError("--nverts must be 3d-1 = " + std::to_string(3 * dim - 1) +
                      "; other counts are outside the search scheme");
  }
  SearchConfig cfg;
  cfg.dim = dim;
  cfg.target_vertices = nverts;
  cfg.jobs = jobs;
  cfg.prune = !no_prune;
  cfg.strict = strict;
  if (!case_ids.empty()) {
    cfg.cases.clear();
    for (int c : case_ids) {
      if (c < 1 || c > 3) throw DomainError("--case takes 1, 2 or 3");
      cfg.cases.insert(c == 1 ? CaseTag::Case1 : c == 2 ? CaseTag::Case2 : CaseTag::Case3);
    }
  }
  ClassificationReport rep = enumerate_3dm1(cfg);
  std::cerr << "enumeration finished in " << rep.elapsed_ms << " ms\n";
  write_outputs(classification_json("enum", rep), rep.representatives, out_dir);
  return kOk;
}

int run_verify(int dim, int jobs, const std::string& out_dir) {
  VerifyResult v = verify_theorem(dim, jobs);
  std::cerr << "verification finished in " << v.report.elapsed_ms << " ms\n";
  json report = classification_json("verify", v.report);
  report["expected_classes"] = dim % 2 == 0 ? 1 : 2;
  report["expected_families"] = v.expected_families;
  report["failures"] = v.failures;
  report["verified"] = v.pass;
  write_outputs(report, v.report.representatives, out_dir);
  return v.pass ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latfan: exact lattice polytope toolkit"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // family
  std::string fam_name, fam_out;
  int fam_dim = 0;
  auto* fam = app.add_subcommand("family", "Write a named polytope as a vertex file");
  fam->add_option("name", fam_name, "p1|p2|p3|dp2|cross|fig2")->required();
  fam->add_option("--dim", fam_dim, "dimension (for p1/p2/p3/cross)");
  fam->add_option("-o,--out", fam_out, "output file (default stdout)");
  fam->callback([&] { exit_code = run_family(fam_name, fam_dim, fam_out); });

  // check
  std::string chk_file, chk_assert, chk_out;
  bool chk_lemmas = false;
  auto* chk = app.add_subcommand("check", "Predicate report for a polytope file");
  chk->add_option("file", chk_file, "polytope file")->required();
  chk->add_option("--assert", chk_assert, "reflexive|simplicial|terminal|smooth: exit 0/1");
  chk->add_flag("--lemmas", chk_lemmas, "run the full lemma suite");
  chk->add_option("-o,--out", chk_out, "output file (default stdout)");
  chk->callback([&] { exit_code = run_check(chk_file, chk_assert, chk_lemmas, chk_out); });

  // isom
  std::string isom_a, isom_b;
  auto* iso = app.add_subcommand("isom", "Lattice isomorphism test for two polytope files");
  iso->add_option("fileA", isom_a, "first polytope file")->required();
  iso->add_option("fileB", isom_b, "second polytope file")->required();
  iso->callback([&] { exit_code = run_isom(isom_a, isom_b); });

  // levels
  std::string lev_file, lev_out;
  auto* lev = app.add_subcommand("levels", "Per-facet level distributions");
  lev->add_option("file", lev_file, "polytope file")->required();
  lev->add_option("-o,--out", lev_out, "output file (default stdout)");
  lev->callback([&] { exit_code = run_levels(lev_file, lev_out); });

  // enum
  int enum_dim = 0, enum_nverts = 0, enum_jobs = 1;
  std::vector<int> enum_cases;
  bool enum_no_prune = false, enum_strict = false;
  std::string enum_out;
  auto* enu = app.add_subcommand("enum", "Enumerate terminal simplicial reflexive polytopes "
                                         "with 3d-1 vertices");
  enu->add_option("--dim", enum_dim, "dimension (>= 2)")->required();
  enu->add_option("--nverts", enum_nverts, "target vertex count (must be 3d-1)");
  enu->add_option("--case", enum_cases, "restrict to case columns (1, 2, 3)");
  enu->add_option("--jobs", enum_jobs, "worker threads");
  enu->add_flag("--no-prune", enum_no_prune, "disable lemma-based pruning (slower, same result)");
  enu->add_flag("--strict", enum_strict, "fail on dimensions without a runtime bound");
  enu->add_option("--out", enum_out, "output directory for report.json and rep_*.poly");
  enu->callback([&] {
    exit_code = run_enum(enum_dim, enum_nverts, enum_cases, enum_jobs, enum_no_prune, enum_strict,
                         enum_out);
  });

  // verify
  int ver_dim = 0, ver_jobs = 1;
  std::string ver_out;
  auto* ver = app.add_subcommand("verify", "Re-derive the classification at a given dimension");
  ver->add_option("--dim", ver_dim, "dimension (>= 2)")->required();
  ver->add_option("--jobs", ver_jobs, "worker threads");
  ver->add_option("--out", ver_out, "output directory for report.json and rep_*.poly");
  ver->callback([&] { exit_code = run_verify(ver_dim, ver_jobs, ver_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ContradictionError& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return kContradiction;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kContradiction;
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return kCapability;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}
