// Batch interface: parse a quiver file, dispatch one subcommand, emit a
// deterministic JSON or TSV document on stdout.  Exit codes: 0 success,
// 2 parse error, 3 precondition violation, 4 depth-inconclusive,
// 5 internal consistency failure, 6 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qvs/io.hpp"
#include "qvs/verify.hpp"

namespace {

using namespace qvs;

DimVector parse_dim(const std::string& s) {
  DimVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoll(item));
    } catch (...) {
      throw ParseError("malformed integer vector: " + s);
    }
  }
  if (v.empty()) throw ParseError("empty vector: " + s);
  return v;
}

StabilityParam parse_zeta(const std::string& s) {
  StabilityParam z;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) z.zeta.push_back(parse_rat(item));
  return z;
}

std::vector<int> parse_verts(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

QuiverGraph load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quiver file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver_file(buf.str());
}

void emit(const Json& j, const std::string& format) {
  if (format == "tsv")
    std::cout << to_tsv(j);
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial invariants of quiver variety stability"};
  app.require_subcommand(1);

  std::string quiverPath, vStr, wStr, zetaStr = "", format = "json";
  std::string i0Str = "", lamStr, lam1Str, lam2Str, muStr;
  std::string suiteStr = "", residuesStr = "";
  Int depth = 8;
  int i0 = 0, rRank = 2, field = 2;
  int lRows = 2, rLevel = 2;
  unsigned long long seed = 1;
  std::string faceKind = "ale";

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or tsv");
  };

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of a quiver file");
  cartan->add_option("--quiver", quiverPath)->required();
  addCommon(cartan);

  auto* face = app.add_subcommand("face", "face data of a stability parameter");
  face->add_option("--quiver", quiverPath)->required();
  face->add_option("--v", vStr)->required();
  face->add_option("--w", wStr)->required();
  face->add_option("--zeta", zetaStr)->required();
  addCommon(face);

  auto* nonempty =
      app.add_subcommand("nonempty", "stable-locus nonemptiness verdict");
  nonempty->add_option("--quiver", quiverPath)->required();
  nonempty->add_option("--v", vStr)->required();
  nonempty->add_option("--w", wStr)->required();
  nonempty->add_option("--zeta", zetaStr)->required();
  nonempty->add_option("--depth", depth);
  addCommon(nonempty);

  auto* strata = app.add_subcommand("strata", "stratum enumeration at a face");
  strata->add_option("--quiver", quiverPath)->required();
  strata->add_option("--v", vStr)->required();
  strata->add_option("--w", wStr)->required();
  strata->add_option("--face-kind", faceKind, "ale or levi");
  strata->add_option("--i0", i0Str, "comma-separated contracted vertices");
  strata->add_option("--depth", depth);
  addCommon(strata);

  auto* mult = app.add_subcommand("mult", "weight multiplicity table");
  mult->add_option("--quiver", quiverPath)->required();
  mult->add_option("--w", wStr)->required();
  mult->add_option("--depth", depth);
  addCommon(mult);

  auto* crystal = app.add_subcommand("crystal", "level-1 crystal counts");
  crystal->add_option("--r", rRank)->required();
  crystal->add_option("--i0", i0);
  crystal->add_option("--residues", residuesStr,
                      "tensor factors; overrides --i0");
  crystal->add_option("--depth", depth);
  addCommon(crystal);

  auto* levelrank = app.add_subcommand("levelrank", "duality dimension report");
  levelrank->add_option("--l", lRows)->required();
  levelrank->add_option("--r", rLevel)->required();
  levelrank->add_option("--lambda", lamStr)->required();
  levelrank->add_option("--vx", muStr, "content vector of the weight")
      ->required();
  levelrank->add_option("--depth", depth);
  addCommon(levelrank);

  auto* tensor = app.add_subcommand("tensor", "tensor multiplicity");
  tensor->add_option("--l", lRows)->required();
  tensor->add_option("--lambda", lamStr)->required();
  tensor->add_option("--lambda1", lam1Str)->required();
  tensor->add_option("--lambda2", lam2Str)->required();
  tensor->add_option("--r1", rRank)->required();
  tensor->add_option("--r2", rLevel)->required();
  tensor->add_option("--depth", depth);
  addCommon(tensor);

  auto* modrep = app.add_subcommand(
      "modrep", "random finite-field module report under a parameter");
  modrep->add_option("--quiver", quiverPath)->required();
  modrep->add_option("--v", vStr)->required();
  modrep->add_option("--w", wStr)->required();
  modrep->add_option("--zeta", zetaStr)->required();
  modrep->add_option("--field", field, "2 or 3");
  modrep->add_option("--seed", seed);
  addCommon(modrep);

  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", suiteStr, "comma-separated suite names");
  verify->add_option("--seed", seed);
  addCommon(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cartan) {
      const QuiverGraph g = load_quiver(quiverPath);
      emit(cartan_to_json(cartan_from_graph(g)), format);
    } else if (*face) {
      const QuiverGraph g = load_quiver(quiverPath);
      const DimVector v = parse_dim(vStr), w = parse_dim(wStr);
      const StabilityParam z = normalize(parse_zeta(zetaStr), v, w);
      emit(face_to_json(face_of(z, v, w, cartan_from_graph(g))), format);
    } else if (*nonempty) {
      const QuiverGraph g = load_quiver(quiverPath);
      const DimVector v = parse_dim(vStr), w = parse_dim(wStr);
      emit(verdict_to_json(
               cb_stable_nonempty(g, v, w, parse_zeta(zetaStr), depth)),
           format);
    } else if (*strata) {
      const QuiverGraph g = load_quiver(quiverPath);
      const DimVector v = parse_dim(vStr), w = parse_dim(wStr);
      const std::vector<int> I0 = parse_verts(i0Str);
      Json out = Json::array();
      if (faceKind == "levi") {
        for (const auto& s : enumerate_strata_levi(g, v, w, I0, depth)) {
          Json e;
          e["v0"] = dim_to_json(s.v0);
          e["residual"] = dim_to_json(s.residual);
          e["residualEvaluated"] = s.residualEvaluated;
          out.push_back(e);
        }
      } else if (faceKind == "ale") {
        for (const auto& s : enumerate_strata_ale(g, v, w, I0, depth))
          out.push_back(stratum_to_json(s));
      } else {
        throw ParseError("face-kind must be ale or levi");
      }
      emit(out, format);
    } else if (*mult) {
      const QuiverGraph g = load_quiver(quiverPath);
      emit(mult_table_to_json(
               freudenthal(parse_dim(wStr), cartan_from_graph(g), depth)),
           format);
    } else if (*crystal) {
      Json out;
      if (!residuesStr.empty()) {
        std::vector<int> residues = parse_verts(residuesStr);
        out["residues"] = residues;
        out["counts"] = Json::array();
        std::map<DimVector, long long> counts;
        for (const auto& t : tensor_crystal(rRank, residues, depth))
          ++counts[tensor_total_content(t)];
        for (const auto& [v, c] : counts)
          out["counts"].push_back({{"v", dim_to_json(v)}, {"count", c}});
      } else {
        out["residue"] = i0;
        out["counts"] = Json::array();
        std::map<DimVector, long long> counts;
        for (const auto& p : crystal_b_lambda(rRank, i0, depth))
          ++counts[p.content()];
        for (const auto& [v, c] : counts)
          out["counts"].push_back({{"v", dim_to_json(v)}, {"count", c}});
      }
      emit(out, format);
    } else if (*levelrank) {
      GYD lam{lRows, rLevel, parse_dim(lamStr)};
      lam.validate();
      emit(duality_to_json(duality_dims(lam, parse_dim(muStr), depth)),
           format);
    } else if (*tensor) {
      GYD lam{lRows, rRank + rLevel, parse_dim(lamStr)};
      GYD lam1{lRows, rRank, parse_dim(lam1Str)};
      GYD lam2{lRows, rLevel, parse_dim(lam2Str)};
      Json out;
      out["multiplicity"] =
          tensor_multiplicity(lam, lam1, lam2, depth).str();
      emit(out, format);
    } else if (*modrep) {
      const QuiverGraph g = load_quiver(quiverPath);
      const DimVector v = parse_dim(vStr), w = parse_dim(wStr);
      if (field != 2 && field != 3)
        throw PreconditionError("field must be 2 or 3");
      std::mt19937_64 rng(seed);
      const GradedModule m = random_module(g, v, w, field, rng);
      const StabilityParam z = normalize(parse_zeta(zetaStr), v, w);
      Json out;
      out["module"] = module_to_json(m);
      out["momentVanishes"] = moment_vanishes(m);
      const Verdict verdict = stability_verdict(m, z);
      out["verdict"] = verdict == Verdict::stable ? "stable"
                       : verdict == Verdict::strictlySemistable
                           ? "strictlySemistable"
                           : "unstable";
      const HNFiltration hn = hn_filtration(m, z);
      out["hnPieces"] = hn.pieces();
      out["hnSlopes"] = Json::array();
      for (const auto& s : hn.grSlopes)
        out["hnSlopes"].push_back(rat_to_string(s));
      emit(out, format);
    } else if (*verify) {
      std::vector<std::string> suites;
      if (!suiteStr.empty()) {
        std::stringstream ss(suiteStr);
        std::string item;
        while (std::getline(ss, item, ',')) suites.push_back(item);
      }
      const auto results = run_acceptance(suites, seed);
      Json out = Json::array();
      bool allPass = true;
      for (const auto& r : results) {
        Json e;
        e["suite"] = r.suite;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        e["seconds"] = r.seconds;
        out.push_back(e);
        allPass &= r.pass;
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": "
                  << r.name << " (" << r.detail << ")\n";
      }
      emit(out, format);
      return allPass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const DepthInconclusiveError& e) {
    std::cerr << "depth inconclusive: " << e.what() << "\n";
    return 4;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 5;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 6;
  }
  return 0;
}
