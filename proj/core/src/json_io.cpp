#include "cubemedian/json_io.hpp"

#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "cubemedian/errors.hpp"

namespace cubemedian {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::InvalidDocument, what);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::unordered_map<std::string, int> name_index(const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<int>(i);
  return idx;
}

json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi)
    bad("grid coordinate exceeds the 64-bit serialization range");
  return v.convert_to<std::int64_t>();
}

BigInt big_from_json(const json& j) {
  if (!j.is_number_integer()) bad("expected an integer");
  return BigInt(j.get<std::int64_t>());
}

json grid_to_json(const GridVec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(big_to_json(c));
  return out;
}

GridVec grid_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  GridVec out;
  for (const auto& c : j) out.push_back(big_from_json(c));
  return out;
}

json vertex_to_json(const ProductIsometry& iso, const ProductVertex& x) {
  return json{{"finite", iso.complex->finite->name(x.finite_vertex)},
              {"grid", grid_to_json(x.grid)}};
}

json names_of(const MedianGraph& g, const std::vector<int>& vs) {
  json out = json::array();
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

json names_of_bits(const MedianGraph& g, const Bits& b) {
  json out = json::array();
  for (int v : b.to_indices()) out.push_back(g.name(v));
  return out;
}

json wall_to_json(const MedianGraph& g, const WallPartition& w) {
  return json::array({names_of_bits(g, w.side0), names_of_bits(g, w.side1)});
}

json graph_to_json(const Graph& g) {
  json out;
  out["vertices"] = g.names;
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back(json::array({g.names[a], g.names[b]}));
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const json& j) {
  Graph g;
  g.names = string_array(field(j, "vertices"), "vertices");
  auto idx = name_index(g.names);
  if (idx.size() != g.names.size()) bad("duplicate vertex names");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a pair");
    auto a = idx.find(e[0].get<std::string>());
    auto b = idx.find(e[1].get<std::string>());
    if (a == idx.end() || b == idx.end()) bad("edge references unknown vertex");
    g.edges.push_back({a->second, b->second});
  }
  return g;
}

json word_to_json(const std::vector<std::string>& names, const std::vector<long long>& w) {
  json out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = w[i];
  return out;
}

json cube_witness_to_json(const MedianGraph& finite, const CubeWitness& w) {
  json corners = json::array();
  for (int v : w.finite_corners) corners.push_back(finite.name(v));
  json intervals = json::array();
  for (const auto& iv : w.grid_intervals)
    intervals.push_back(json::array({big_to_json(iv[0]), big_to_json(iv[1])}));
  return json{{"finite_corners", std::move(corners)}, {"grid_intervals", std::move(intervals)}};
}

json constraint_to_json(const Utvpi& c) {
  json out;
  out["a"] = c.a;
  out["i"] = c.i;
  out["b"] = c.b;
  out["j"] = c.j;
  out["c"] = big_to_json(c.c);
  return out;
}

json constraint_set_to_json(const GridConstraintSet& s) {
  json cycles = json::array();
  for (const auto& rec : s.cycle_records) {
    json c;
    c["coords"] = rec.coords;
    c["sign"] = rec.sign;
    c["net"] = big_to_json(rec.net);
    c["parity"] = rec.parity;
    c["kind"] = rec.kind;
    cycles.push_back(std::move(c));
  }
  json branches = json::array();
  for (const auto& br : s.branches) {
    json cons = json::array();
    for (const auto& c : br.constraints) cons.push_back(constraint_to_json(c));
    branches.push_back(std::move(cons));
  }
  return json{{"rank", s.rank}, {"cycles", std::move(cycles)}, {"branches", std::move(branches)}};
}

}  // namespace

Graph parse_graph_doc(const std::string& text) { return graph_from_json(parse_text(text)); }

std::string graph_doc(const Graph& g) { return dump(graph_to_json(g)); }

Wallspace parse_wallspace_doc(const std::string& text) {
  json j = parse_text(text);
  auto elements = string_array(field(j, "elements"), "elements");
  auto idx = name_index(elements);
  const json& walls = field(j, "walls");
  if (!walls.is_array()) bad("walls must be an array");
  std::vector<RawWall> raw;
  for (const auto& w : walls) {
    if (!w.is_array() || w.size() != 2) bad("each wall must be a pair of halfspaces");
    RawWall rw;
    for (const auto& name : string_array(w[0], "halfspace")) {
      auto it = idx.find(name);
      if (it == idx.end()) bad("wall references unknown element '" + name + "'");
      rw.side_a.push_back(it->second);
    }
    for (const auto& name : string_array(w[1], "halfspace")) {
      auto it = idx.find(name);
      if (it == idx.end()) bad("wall references unknown element '" + name + "'");
      rw.side_b.push_back(it->second);
    }
    raw.push_back(std::move(rw));
  }
  return validate_wallspace(std::move(elements), raw);
}

std::string wallspace_doc(const Wallspace& w) {
  json out;
  out["elements"] = w.elements;
  json walls = json::array();
  for (const auto& wall : w.walls) {
    json a = json::array(), b = json::array();
    for (int x : wall[0].to_indices()) a.push_back(w.elements[x]);
    for (int x : wall[1].to_indices()) b.push_back(w.elements[x]);
    walls.push_back(json::array({std::move(a), std::move(b)}));
  }
  out["walls"] = std::move(walls);
  return dump(out);
}

SubalgebraDoc parse_subalgebra_doc(const std::string& text) {
  json j = parse_text(text);
  SubalgebraDoc doc;
  const json& g = field(j, "graph");
  if (g.is_string())
    doc.graph = g.get<std::string>();
  else
    doc.graph = graph_from_json(g);
  doc.members = string_array(field(j, "members"), "members");
  return doc;
}

ProductComplexPtr parse_product_complex_doc(const std::string& text,
                                            const VerifyOptions& verify) {
  json j = parse_text(text);
  Graph g = graph_from_json(field(j, "finite"));
  const json& rank = field(j, "grid_rank");
  if (!rank.is_number_integer() || rank.get<int>() < 0) bad("grid_rank must be >= 0");
  auto finite = std::make_shared<MedianGraph>(MedianGraph::verify(std::move(g), verify));
  return make_product_complex(std::move(finite), rank.get<int>());
}

std::string product_complex_doc(const ProductComplex& pc) {
  json out;
  out["finite"] = graph_to_json(pc.finite->graph());
  out["grid_rank"] = pc.rank;
  return dump(out);
}

namespace {

ProductIsometry isometry_from_json(const json& j, ProductComplexPtr complex) {
  const MedianGraph& g = *complex->finite;
  auto idx = name_index(g.graph().names);
  const json& fm = field(j, "finite_map");
  if (!fm.is_object()) bad("finite_map must be an object");
  std::vector<int> finite_map(g.vertex_count(), -1);
  for (auto it = fm.begin(); it != fm.end(); ++it) {
    auto from = idx.find(it.key());
    if (from == idx.end()) bad("finite_map references unknown vertex '" + it.key() + "'");
    if (!it.value().is_string()) bad("finite_map values must be vertex names");
    auto to = idx.find(it.value().get<std::string>());
    if (to == idx.end()) bad("finite_map targets unknown vertex");
    finite_map[from->second] = to->second;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (finite_map[v] < 0) bad("finite_map misses vertex '" + g.name(v) + "'");

  const int k = complex->rank;
  std::vector<int> perm(k);
  const json& pj = field(j, "perm");
  if (!pj.is_array() || static_cast<int>(pj.size()) != k) bad("perm must list all coordinates");
  for (int i = 0; i < k; ++i) {
    int image = pj[i].get<int>();  // 1-indexed in documents
    if (image < 1 || image > k) bad("perm entries are 1-indexed coordinate images");
    perm[i] = image - 1;
  }
  std::vector<int> signs(k);
  const json& sj = field(j, "signs");
  if (!sj.is_array() || static_cast<int>(sj.size()) != k) bad("signs must list all coordinates");
  for (int i = 0; i < k; ++i) signs[i] = sj[i].get<int>();
  GridVec trans = grid_from_json(field(j, "trans"));
  if (static_cast<int>(trans.size()) != k) bad("trans must list all coordinates");
  return make_isometry(std::move(complex), std::move(finite_map),
                       SignedAffineMap(std::move(perm), std::move(signs), std::move(trans)));
}

json isometry_to_json(const ProductIsometry& iso) {
  const MedianGraph& g = *iso.complex->finite;
  json fm;
  for (int v = 0; v < g.vertex_count(); ++v) fm[g.name(v)] = g.name(iso.finite_map[v]);
  json perm = json::array();
  for (int p : iso.grid_map.perm()) perm.push_back(p + 1);
  json out;
  out["finite_map"] = std::move(fm);
  out["perm"] = std::move(perm);
  out["signs"] = iso.grid_map.signs();
  out["trans"] = grid_to_json(iso.grid_map.trans());
  return out;
}

}  // namespace

ProductIsometry parse_isometry_doc(const std::string& text, ProductComplexPtr complex) {
  return isometry_from_json(parse_text(text), std::move(complex));
}

std::string isometry_doc(const ProductIsometry& iso) { return dump(isometry_to_json(iso)); }

AbelianAction parse_action_doc(const std::string& text, const VerifyOptions& verify) {
  json j = parse_text(text);
  ProductComplexPtr complex =
      parse_product_complex_doc(field(j, "complex").dump(), verify);
  const json& gens = field(j, "generators");
  if (!gens.is_object() || gens.empty()) bad("generators must be a non-empty object");
  std::vector<std::string> names;
  std::vector<ProductIsometry> isos;
  for (auto it = gens.begin(); it != gens.end(); ++it) {  // iteration is key-sorted
    names.push_back(it.key());
    isos.push_back(isometry_from_json(it.value(), complex));
  }
  return build_action(std::move(complex), std::move(names), std::move(isos));
}

std::string action_doc(const AbelianAction& a) {
  json gens;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    gens[a.generator_names[i]] = isometry_to_json(a.generators[i]);
  json out;
  out["complex"] = parse_text(product_complex_doc(*a.complex));
  out["generators"] = std::move(gens);
  return dump(out);
}

std::vector<int> parse_vertex_map_doc(const std::string& text, const Graph& g) {
  json j = parse_text(text);
  const json& m = field(j, "map");
  if (!m.is_object()) bad("map must be an object of vertex name pairs");
  auto idx = name_index(g.names);
  std::vector<int> out(g.names.size(), -1);
  for (auto it = m.begin(); it != m.end(); ++it) {
    auto from = idx.find(it.key());
    auto to = idx.find(it.value().get<std::string>());
    if (from == idx.end() || to == idx.end()) bad("map references unknown vertex");
    out[from->second] = to->second;
  }
  for (std::size_t v = 0; v < out.size(); ++v)
    if (out[v] < 0) bad("map misses vertex '" + g.names[v] + "'");
  return out;
}

std::string wallspace_validation_doc(const Wallspace& w) {
  json out;
  out["ok"] = true;
  out["elements"] = w.element_count();
  out["walls"] = w.wall_count();
  out["finite_separation"] = CubulationResult::finite_separation;
  out["descending_chains"] = CubulationResult::descending_chains;
  return dump(out);
}

std::string cubulation_doc(const Wallspace& w, const CubulationResult& r) {
  json out;
  out["graph"] = graph_to_json(r.complex.graph());
  json bits;
  for (std::size_t i = 0; i < r.orientations.size(); ++i) {
    std::string s;
    for (int t = 0; t < w.wall_count(); ++t) s += r.orientations[i].test(t) ? '1' : '0';
    bits[r.complex.name(static_cast<int>(i))] = s;
  }
  out["orientation_bits"] = std::move(bits);
  json pm;
  for (int e = 0; e < w.element_count(); ++e)
    pm[w.elements[e]] = r.complex.name(r.principal[e]);
  out["principal_map"] = std::move(pm);
  json rep;
  rep["vertices"] = r.complex.vertex_count();
  rep["walls"] = w.wall_count();
  rep["theta_classes"] = r.complex.theta_class_count();
  rep["verification"] = r.complex.sampled_verification() ? "sampled" : "full";
  rep["recount_checked"] = r.recount_checked;
  rep["finite_separation"] = CubulationResult::finite_separation;
  rep["descending_chains"] = CubulationResult::descending_chains;
  out["report"] = std::move(rep);
  return dump(out);
}

std::string median_check_doc(const MedianGraph& g) {
  json out;
  out["ok"] = true;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["theta_classes"] = g.theta_class_count();
  out["verification"] = g.sampled_verification() ? "sampled" : "full";
  return dump(out);
}

std::string median_check_failure_doc(const Graph& g, const NotMedianError& e) {
  json out;
  out["ok"] = false;
  out["error"] = "NotMedian";
  out["message"] = e.what();
  if (e.has_witness()) {
    const auto& t = e.witness();
    out["witness_triple"] = json::array({g.names[t[0]], g.names[t[1]], g.names[t[2]]});
  } else {
    out["witness_triple"] = nullptr;
  }
  return dump(out);
}

std::string walls_doc(const Subalgebra& y, const std::vector<WallPartition>& induced,
                      const std::vector<WallPartition>& intrinsic, const AgreeVerdict& agree) {
  const MedianGraph& g = y.parent();
  json out;
  out["members"] = names_of(g, y.member_list());
  json ind = json::array(), intr = json::array();
  for (const auto& w : induced) ind.push_back(wall_to_json(g, w));
  for (const auto& w : intrinsic) intr.push_back(wall_to_json(g, w));
  out["induced"] = std::move(ind);
  out["intrinsic"] = std::move(intr);
  out["agree"] = agree.ok;
  if (!agree.ok) {
    out["witness"] = json{{"wall", wall_to_json(g, *agree.witness)},
                          {"origin", agree.witness_origin}};
  } else {
    out["witness"] = nullptr;
  }
  return dump(out);
}

std::string classification_doc(const ProductIsometry& iso, const Classification& c) {
  const MedianGraph& f = *iso.complex->finite;
  json out;
  out["kind"] = isometry_kind_name(c.kind);
  out["norm"] = big_to_json(c.norm);
  if (c.stabilized_cube)
    out["stabilized_cube"] = cube_witness_to_json(f, *c.stabilized_cube);
  if (c.swapped_hyperplane) {
    json w;
    if (c.swapped_hyperplane->finite) {
      w["hyperplane"] = json{{"finite_class", c.swapped_hyperplane->finite_class}};
    } else {
      w["hyperplane"] = json{{"grid_coordinate", c.swapped_hyperplane->grid_coordinate},
                             {"grid_threshold", big_to_json(c.swapped_hyperplane->grid_threshold)}};
    }
    w["power"] = c.swapped_hyperplane->power;
    out["swapped_hyperplane"] = std::move(w);
  }
  if (c.axis) {
    json steps = json::array();
    for (const auto& s : c.axis->steps) steps.push_back(vertex_to_json(iso, s));
    out["axis"] = json{{"base", vertex_to_json(iso, c.axis->base)}, {"steps", std::move(steps)}};
  }
  return dump(out);
}

std::string minset_doc(const ProductIsometry& iso, const MinsetReport& r) {
  json out;
  out["norm"] = big_to_json(r.norm);
  out["finite_part_min"] = names_of(*iso.complex->finite, r.finite_part_min);
  out["grid_part_min"] = constraint_set_to_json(r.grid_part_min);
  return dump(out);
}

std::string axis_doc(const ProductIsometry& iso, const AxisPath& a) {
  json steps = json::array();
  for (const auto& s : a.steps) steps.push_back(vertex_to_json(iso, s));
  json out;
  out["base"] = vertex_to_json(iso, a.base);
  out["steps"] = std::move(steps);
  out["period"] = static_cast<std::int64_t>(a.steps.size() - 1);
  return dump(out);
}

std::string subdivided_graph_doc(const MedianGraph& original, const Subdivision& sub) {
  json out;
  out["graph"] = graph_to_json(sub.graph.graph());
  json vi;
  for (int v = 0; v < original.vertex_count(); ++v)
    vi[original.name(v)] = sub.graph.name(sub.vertex_image[v]);
  out["vertex_image"] = std::move(vi);
  json cubes = json::array();
  for (const auto& c : sub.cubes.cubes) {
    json corners = json::array();
    for (int v : c.corners) corners.push_back(original.name(v));
    cubes.push_back(std::move(corners));
  }
  out["cubes"] = std::move(cubes);
  return dump(out);
}

std::string subdivided_product_doc(const SubdividedProduct& sub,
                                   const std::vector<ProductIsometry>& transported) {
  json out;
  out["complex"] = parse_text(product_complex_doc(*sub.complex));
  json isos = json::array();
  for (const auto& iso : transported) isos.push_back(isometry_to_json(iso));
  out["isometries"] = std::move(isos);
  return dump(out);
}

std::string factorization_doc(const MedianGraph& g, const Factorization& f) {
  json out;
  out["basepoint"] = g.name(f.basepoint);
  json groups = json::array();
  for (std::size_t i = 0; i < f.groups.size(); ++i) {
    json grp;
    grp["classes"] = f.groups[i];
    grp["factor"] = graph_to_json(f.factor_graphs[i]);
    grp["vertices"] = names_of(g, f.factor_vertices[i]);
    groups.push_back(std::move(grp));
  }
  out["groups"] = std::move(groups);
  out["irreducible"] = f.groups.size() <= 1;
  return dump(out);
}

std::string common_power_doc(const ProductIsometry& g, const CommonPowerResult& r) {
  json out;
  out["found"] = r.found;
  out["max_m"] = r.max_m;
  if (r.found) {
    out["m"] = r.m;
    out["witness"] = vertex_to_json(g, *r.witness);
  }
  return dump(out);
}

std::string freeness_doc(const AbelianAction& a, const FreenessVerdict& v) {
  json out;
  out["free_on_sample"] = v.free_on_sample;
  json cex = json::array();
  for (const auto& c : v.counterexamples) {
    cex.push_back(json{{"word", word_to_json(a.generator_names, c.word)},
                       {"stabilized_cube",
                        cube_witness_to_json(*a.complex->finite, c.stabilized_cube)}});
  }
  out["counterexamples"] = std::move(cex);
  return dump(out);
}

namespace {

std::string half_scale(const BigInt& v) {
  BigInt q = v / 2;
  std::string s = q.convert_to<std::string>();
  return (v % 2 == 0) ? s + ".0" : s + ".5";
}

}  // namespace

std::string norm_report_doc(const DiscreteNormReport& rep) {
  json out;
  out["subdivided"] = rep.subdivided;
  out["epsilon"] = rep.epsilon;
  out["generators"] = rep.generator_names;
  out["power_cap"] = rep.power_cap;

  json samples = json::array();
  for (const auto& [w, v] : rep.samples)
    samples.push_back(json{{"word", word_to_json(rep.generator_names, w)},
                           {"nu", big_to_json(v)},
                           {"nu_original_scale", half_scale(v)}});
  out["samples"] = std::move(samples);

  json pos;
  pos["ok"] = rep.positivity_ok;
  json pv = json::array();
  for (const auto& w : rep.positivity_violations)
    pv.push_back(word_to_json(rep.generator_names, w));
  pos["violations"] = std::move(pv);
  out["axiom_positivity"] = std::move(pos);

  json hom;
  hom["ok"] = rep.homogeneity_ok;
  hom["checked"] = rep.homogeneity_checked;
  json hv = json::array();
  for (const auto& v : rep.homogeneity_violations)
    hv.push_back(json{{"word", word_to_json(rep.generator_names, v.word)},
                      {"m", v.m},
                      {"expected", big_to_json(v.expected)},
                      {"actual", big_to_json(v.actual)}});
  hom["violations"] = std::move(hv);
  out["axiom_homogeneity"] = std::move(hom);

  json sub;
  sub["ok"] = rep.subadditivity_ok;
  json pairs = json::array();
  for (const auto& p : rep.pairs) {
    json rec;
    rec["left"] = word_to_json(rep.generator_names, p.left);
    rec["right"] = word_to_json(rep.generator_names, p.right);
    rec["power_search_failed"] = p.power_search_failed;
    if (!p.power_search_failed) {
      rec["m"] = p.m;
      rec["searched_on_original"] = p.searched_on_original;
      rec["chain"] = json{{"lhs", big_to_json(p.lhs)},
                          {"at_witness", big_to_json(p.at_witness)},
                          {"leg_left", big_to_json(p.leg_left)},
                          {"leg_right", big_to_json(p.leg_right)},
                          {"rhs", big_to_json(p.rhs)}};
      rec["nu"] = json{{"left", big_to_json(p.nu_left)},
                       {"right", big_to_json(p.nu_right)},
                       {"sum", big_to_json(p.nu_sum)}};
      rec["ok"] = p.ok;
    }
    pairs.push_back(std::move(rec));
  }
  sub["pairs"] = std::move(pairs);
  out["axiom_subadditivity"] = std::move(sub);

  json psf = json::array();
  for (const auto& [l, r] : rep.power_search_failures)
    psf.push_back(json{{"left", word_to_json(rep.generator_names, l)},
                       {"right", word_to_json(rep.generator_names, r)}});
  out["power_search_failures"] = std::move(psf);
  out["all_ok"] = rep.all_ok();
  out["interpretation"] =
      "axioms certified on the sampled words only; an abelian group carrying a "
      "discrete norm on all of its elements is free abelian (Steprans), which is "
      "outside computational scope";
  return dump(out);
}

std::string norm_report_table(const DiscreteNormReport& rep) {
  std::ostringstream os;
  os << "discrete norm certificate (values in subdivided units; halve for original scale)\n";
  os << "  generators:";
  for (const auto& n : rep.generator_names) os << ' ' << n;
  os << "\n  sampled words: " << rep.samples.size() << "\n";
  os << "  axiom 1 (nu > 0, epsilon = " << rep.epsilon << "): "
     << (rep.positivity_ok ? "ok" : "VIOLATED") << "\n";
  os << "  axiom 2 (subadditivity, " << rep.pairs.size()
     << " pairs): " << (rep.subadditivity_ok ? "ok" : "VIOLATED");
  if (!rep.power_search_failures.empty())
    os << " (" << rep.power_search_failures.size() << " power searches exhausted)";
  os << "\n  axiom 3 (homogeneity, |m| <= " << rep.power_cap << ", "
     << rep.homogeneity_checked << " checks): " << (rep.homogeneity_ok ? "ok" : "VIOLATED")
     << "\n";
  os << "  note: certified on the sampled words only; a discrete norm on the\n"
        "        whole group would make it free abelian (Steprans' characterization)\n";
  os << "  word : nu\n";
  for (const auto& [w, v] : rep.samples) {
    os << "    (";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ") : " << v << "\n";
  }
  return os.str();
}

std::string fixture_doc(const Fixture& f) {
  json out;
  out["name"] = f.name;
  out["description"] = f.description;
  if (f.is_action) {
    out["kind"] = "action";
    out["action"] = parse_text(action_doc(*f.action));
  } else {
    out["kind"] = "graph";
    out["graph"] = graph_to_json(f.graph);
  }
  return dump(out);
}

std::string paper_example_doc(const AbelianAction& a, const PaperExampleReport& rep) {
  const ProductIsometry& g = a.generators[0];
  json out;
  out["g"] = json{{"kind", isometry_kind_name(rep.g_kind)}, {"norm", big_to_json(rep.g_norm)}};
  out["h"] = json{{"kind", isometry_kind_name(rep.h_kind)}, {"norm", big_to_json(rep.h_norm)}};
  out["min_g_meets_min_h"] = !rep.min_g_h_disjoint;
  out["min_g_meets_min_h_squared"] = rep.min_g_h2_nonempty;
  out["common_min_power"] = rep.common_power;
  if (rep.witness) out["witness"] = vertex_to_json(g, *rep.witness);
  out["ok"] = rep.ok();
  return dump(out);
}

std::string error_doc(const std::string& code, const std::string& message) {
  json out;
  out["ok"] = false;
  out["error"] = code;
  out["message"] = message;
  return dump(out);
}

WordList parse_word_list(const std::string& text, const std::vector<std::string>& names) {
  json j = parse_text(text);
  if (!j.is_array()) bad("word list must be an array");
  WordList out;
  for (const auto& w : j) {
    if (!w.is_object()) bad("each word must be an object of generator exponents");
    std::vector<long long> word(names.size(), 0);
    for (auto it = w.begin(); it != w.end(); ++it) {
      auto pos = std::find(names.begin(), names.end(), it.key());
      if (pos == names.end()) bad("word references unknown generator '" + it.key() + "'");
      word[pos - names.begin()] = it.value().get<long long>();
    }
    out.push_back(std::move(word));
  }
  return out;
}

}  // namespace cubemedian
