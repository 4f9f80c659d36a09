#include "qvs/io.hpp"

#include <sstream>

namespace qvs {

QuiverGraph parse_quiver(const Json& j) {
  QuiverGraph g;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("quiver file needs a \"vertices\" array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    g.labels.push_back(v.get<std::string>());
  }
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("quiver file needs an \"edges\" array");
  size_t idx = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw ParseError("edge " + std::to_string(idx) +
                       " must be a pair of vertex labels");
    g.edges.emplace_back(g.vertex_index(e[0].get<std::string>()),
                         g.vertex_index(e[1].get<std::string>()));
    ++idx;
  }
  if (j.contains("orientation")) {
    if (!j["orientation"].is_array() ||
        j["orientation"].size() != g.edges.size())
      throw ParseError("orientation must list every edge exactly once");
    std::vector<bool> flags;
    size_t k = 0;
    for (const auto& e : j["orientation"]) {
      const int u = g.vertex_index(e[0].get<std::string>());
      const int v = g.vertex_index(e[1].get<std::string>());
      if (u == g.edges[k].first && v == g.edges[k].second)
        flags.push_back(true);
      else if (u == g.edges[k].second && v == g.edges[k].first)
        flags.push_back(false);
      else
        throw ParseError("orientation entry " + std::to_string(k) +
                         " does not match its edge");
      ++k;
    }
    g.orientation = flags;
  }
  g.validate();
  return g;
}

QuiverGraph parse_quiver_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("quiver file: ") + e.what());
  }
  return parse_quiver(j);
}

Json quiver_to_json(const QuiverGraph& g) {
  Json j;
  j["vertices"] = g.labels;
  j["edges"] = Json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({g.labels[e.first], g.labels[e.second]});
  if (g.orientation) {
    j["orientation"] = Json::array();
    for (size_t k = 0; k < g.edges.size(); ++k) {
      const auto& e = g.edges[k];
      if ((*g.orientation)[k])
        j["orientation"].push_back({g.labels[e.first], g.labels[e.second]});
      else
        j["orientation"].push_back({g.labels[e.second], g.labels[e.first]});
    }
  }
  return j;
}

Json dim_to_json(const DimVector& v) {
  Json j = Json::array();
  for (Int x : v) j.push_back(x);
  return j;
}

DimVector dim_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("dimension vector must be an array");
  DimVector v;
  for (const auto& x : j) v.push_back(x.get<Int>());
  return v;
}

Json rat_to_json(const Rat& x) { return rat_to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

Json cartan_to_json(const CartanMatrix& C) {
  Json j = Json::array();
  for (const auto& row : C.c) {
    Json r = Json::array();
    for (Int x : row) r.push_back(x);
    j.push_back(r);
  }
  return j;
}

CartanMatrix cartan_from_json(const Json& j) {
  CartanMatrix C;
  for (const auto& row : j) {
    C.c.emplace_back();
    for (const auto& x : row) C.c.back().push_back(x.get<Int>());
  }
  C.validate();
  return C;
}

Json zeta_to_json(const StabilityParam& z) {
  Json j;
  j["zeta"] = Json::array();
  for (const auto& x : z.zeta) j["zeta"].push_back(rat_to_json(x));
  if (z.zetaInf) j["zetaInf"] = rat_to_json(*z.zetaInf);
  return j;
}

StabilityParam zeta_from_json(const Json& j) {
  StabilityParam z;
  for (const auto& x : j.at("zeta")) z.zeta.push_back(rat_from_json(x));
  if (j.contains("zetaInf")) z.zetaInf = rat_from_json(j["zetaInf"]);
  return z;
}

namespace {
Json dim_list_to_json(const std::vector<DimVector>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(dim_to_json(x));
  return j;
}
std::vector<DimVector> dim_list_from_json(const Json& j) {
  std::vector<DimVector> v;
  for (const auto& x : j) v.push_back(dim_from_json(x));
  return v;
}
}  // namespace

Json face_to_json(const Face& f) {
  Json j;
  j["v"] = dim_to_json(f.dimVector);
  j["wIsZero"] = f.wIsZero;
  j["rZero"] = dim_list_to_json(f.rZero);
  j["rPlus"] = dim_list_to_json(f.rPlus);
  j["rMinus"] = dim_list_to_json(f.rMinus);
  return j;
}

Face face_from_json(const Json& j) {
  Face f;
  f.dimVector = dim_from_json(j.at("v"));
  f.wIsZero = j.at("wIsZero").get<bool>();
  f.rZero = dim_list_from_json(j.at("rZero"));
  f.rPlus = dim_list_from_json(j.at("rPlus"));
  f.rMinus = dim_list_from_json(j.at("rMinus"));
  return f;
}

Json root_table_to_json(const RootDatum& rd) {
  Json j;
  j["cartan"] = cartan_to_json(rd.cartan);
  j["bound"] = rd.heightBound;
  j["roots"] = Json::array();
  for (const auto& [x, m] : rd.roots)
    j["roots"].push_back({{"root", dim_to_json(x)}, {"mult", m.str()}});
  return j;
}

Json mult_table_to_json(const WeightMultTable& t) {
  Json j;
  j["cartan"] = cartan_to_json(t.cartan);
  j["w"] = dim_to_json(t.highest);
  j["depth"] = t.depthBound;
  j["mults"] = Json::array();
  for (const auto& [v, m] : t.mults)
    j["mults"].push_back({{"v", dim_to_json(v)}, {"mult", m.str()}});
  return j;
}

WeightMultTable mult_table_from_json(const Json& j) {
  WeightMultTable t;
  t.cartan = cartan_from_json(j.at("cartan"));
  t.highest = dim_from_json(j.at("w"));
  t.depthBound = j.at("depth").get<Int>();
  for (const auto& e : j.at("mults"))
    t.mults[dim_from_json(e.at("v"))] = BigInt(e.at("mult").get<std::string>());
  return t;
}

Json verdict_to_json(const CBVerdict& v) {
  Json j;
  j["nonempty"] = v.nonempty;
  j["decompositionsChecked"] = v.decompositionsChecked;
  if (v.witness) {
    j["witness"] = Json::object();
    j["witness"]["v0"] = dim_to_json(v.witness->v0);
    j["witness"]["betas"] = dim_list_to_json(v.witness->betas);
    if (!v.witness->reason.empty()) j["witness"]["reason"] = v.witness->reason;
  }
  return j;
}

CBVerdict verdict_from_json(const Json& j) {
  CBVerdict v;
  v.nonempty = j.at("nonempty").get<bool>();
  v.decompositionsChecked = j.at("decompositionsChecked").get<long long>();
  if (j.contains("witness")) {
    CBWitness w;
    w.v0 = dim_from_json(j["witness"].at("v0"));
    w.betas = dim_list_from_json(j["witness"].at("betas"));
    if (j["witness"].contains("reason"))
      w.reason = j["witness"]["reason"].get<std::string>();
    v.witness = w;
  }
  return v;
}

Json stratum_to_json(const StratumIndex& s) {
  Json j;
  j["v0"] = dim_to_json(s.v0);
  j["lambda"] = dim_to_json(s.lambda);
  Json m = Json::array(), n = Json::array();
  for (const auto& [i, k] : s.m) m.push_back({i, k});
  for (const auto& [c, k] : s.n) n.push_back({c, k});
  j["m"] = m;
  j["n"] = n;
  return j;
}

StratumIndex stratum_from_json(const Json& j) {
  StratumIndex s;
  s.v0 = dim_from_json(j.at("v0"));
  s.lambda = dim_from_json(j.at("lambda"));
  for (const auto& e : j.at("m")) s.m[e[0].get<int>()] = e[1].get<Int>();
  for (const auto& e : j.at("n")) s.n[e[0].get<int>()] = e[1].get<Int>();
  return s;
}

Json module_to_json(const GradedModule& m) {
  Json j;
  j["field"] = m.q;
  j["v"] = dim_to_json(m.vDims);
  j["w"] = dim_to_json(m.wDims);
  auto mat = [](const FqMat& x) {
    Json rows = Json::array();
    for (int i = 0; i < x.rows; ++i) {
      Json row = Json::array();
      for (int k = 0; k < x.cols; ++k) row.push_back(x.at(i, k));
      rows.push_back(row);
    }
    return rows;
  };
  j["B"] = Json::array();
  for (const auto& x : m.B) j["B"].push_back(mat(x));
  j["a"] = Json::array();
  for (const auto& x : m.a) j["a"].push_back(mat(x));
  j["b"] = Json::array();
  for (const auto& x : m.b) j["b"].push_back(mat(x));
  j["momentChecked"] = m.momentChecked;
  return j;
}

Json gyd_to_json(const GYD& g) {
  Json j;
  j["l"] = g.l;
  j["r"] = g.r;
  j["parts"] = dim_to_json(g.parts);
  return j;
}

GYD gyd_from_json(const Json& j) {
  GYD g;
  g.l = j.at("l").get<int>();
  g.r = j.at("r").get<int>();
  g.parts = dim_from_json(j.at("parts"));
  g.validate();
  return g;
}

Json duality_to_json(const DualityReport& r) {
  Json j;
  j["lhs"] = r.lhsDim.str();
  j["rhs"] = r.rhsDim.str();
  j["t"] = rat_to_json(r.t);
  j["degreeRelationHolds"] = r.degreeRelationHolds;
  return j;
}

DualityReport duality_from_json(const Json& j) {
  DualityReport r;
  r.lhsDim = BigInt(j.at("lhs").get<std::string>());
  r.rhsDim = BigInt(j.at("rhs").get<std::string>());
  r.t = rat_from_json(j.at("t"));
  r.degreeRelationHolds = j.at("degreeRelationHolds").get<bool>();
  return r;
}

Json tensor_elem_to_json(const TensorElement& t) {
  Json j;
  j["factors"] = Json::array();
  for (const auto& f : t.factors)
    j["factors"].push_back(
        {{"parts", dim_to_json(f.parts)}, {"residue", f.residueShift}});
  j["fock"] = Json::array();
  for (const auto& lam : t.fockShifts) j["fock"].push_back(dim_to_json(lam));
  return j;
}

Json crystal_weight_to_json(const CrystalWeight& w) {
  Json j;
  j["level"] = w.level;
  j["v"] = dim_to_json(w.alphaContent);
  j["deltaShift"] = w.extraDeltaShift;
  return j;
}

namespace {
void tsv_walk(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      tsv_walk(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) tsv_walk(v, path + "[" + std::to_string(i++) + "]", os);
    if (j.empty()) os << path << "\t[]\n";
  } else {
    os << path << "\t" << j.dump() << "\n";
  }
}
}  // namespace

std::string to_tsv(const Json& j) {
  std::ostringstream os;
  tsv_walk(j, "", os);
  return os.str();
}

}  // namespace qvs
