#include "eqhom/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "eqhom/errors.hpp"

namespace eqhom::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::size_t as_size(const Json& j, const std::string& path) {
  long v = as_int(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i)
    out.push_back(static_cast<int>(as_int(j[i], path + "[" + std::to_string(i) + "]")));
  return out;
}

// Identifiers may be written as integers or strings.
std::string id_string(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  if (j.is_string()) return j.get<std::string>();
  fail(path, "expected an identifier");
}

Rational as_scalar(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) fail(path, "not a rational number");
    r.canonicalize();
    return r;
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

Matrix matrix_from(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  as_array(j, path);
  Matrix m(rows, cols);
  if (rows * cols == 0 && j.empty()) return m;
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (as_array(j[i], rp).size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = as_scalar(j[i][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

Element element_key(const std::string& key, const Group& g, const std::string& path) {
  std::size_t pos = 0;
  long e = -1;
  try {
    e = std::stol(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || e < 0 || static_cast<std::size_t>(e) >= g.order())
    fail(path + "." + key, "not an element of the group");
  return static_cast<Element>(e);
}

template <class F>
auto with_context(const std::string& path, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

std::string name_of(const std::vector<std::string>& names, SimplexId id) {
  return names.empty() ? std::to_string(id) : names[static_cast<std::size_t>(id)];
}

OrderedJson ref_json(const SimplexRef& r, const std::vector<std::string>& names) {
  OrderedJson out = OrderedJson::array();
  if (names.empty()) out.push_back(r.base);
  else out.push_back(names[static_cast<std::size_t>(r.base)]);
  out.push_back(r.word);
  return out;
}

OrderedJson id_json(SimplexId id, const std::vector<std::string>& names) {
  if (names.empty()) return id;
  return names[static_cast<std::size_t>(id)];
}

OrderedJson scalar_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

Group group_from_json(const Json& j) {
  if (!j.is_object()) fail("group", "expected an object");
  if (j.contains("mult")) {
    const Json& mult = as_array(j["mult"], "group.mult");
    std::vector<std::vector<Element>> table;
    for (std::size_t i = 0; i < mult.size(); ++i) table.push_back(int_list(mult[i], "group.mult[" + std::to_string(i) + "]"));
    if (j.contains("order") && as_size(j["order"], "group.order") != table.size())
      fail("group.order", "does not match the table");
    return with_context("group.mult", [&] { return Group::from_table(table); });
  }
  if (j.contains("generators")) {
    std::size_t degree = as_size(field(j, "degree", "group"), "group.degree");
    const Json& gens = as_array(j["generators"], "group.generators");
    std::vector<std::vector<int>> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) perms.push_back(int_list(gens[i], "group.generators[" + std::to_string(i) + "]"));
    return with_context("group.generators", [&] { return Group::from_permutations(degree, perms); });
  }
  fail("group", "expected \"mult\" or \"generators\"");
}

std::vector<Subgroup> family_from_json(const Json& j, const Group& g) {
  const Json& list = j.is_object() ? field(j, "family", "family") : j;
  as_array(list, "family");
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = "family[" + std::to_string(i) + "]";
    auto members = int_list(list[i], p);
    for (std::size_t m = 0; m < members.size(); ++m)
      if (members[m] < 0 || static_cast<std::size_t>(members[m]) >= g.order())
        fail(p + "[" + std::to_string(m) + "]", "not an element of the group");
    out.push_back(with_context(p, [&] { return Subgroup(g, members); }));
  }
  return out;
}

GSet gset_from_json(const Json& j, const Group& g) {
  const std::size_t n = as_size(field(j, "size", "gset"), "gset.size");
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> action(g.order(), id);
  if (j.contains("action")) {
    const Json& act = j["action"];
    if (!act.is_object()) fail("gset.action", "expected an object");
    std::set<Element> seen;
    for (auto it = act.begin(); it != act.end(); ++it) {
      Element e = element_key(it.key(), g, "gset.action");
      const std::string p = "gset.action." + it.key();
      action[static_cast<std::size_t>(e)] = int_list(it.value(), p);
      if (action[static_cast<std::size_t>(e)].size() != n) fail(p, "expected " + std::to_string(n) + " entries");
      seen.insert(e);
    }
    for (std::size_t e = 1; e < g.order(); ++e)
      if (!seen.count(static_cast<Element>(e))) fail("gset.action." + std::to_string(e), "missing");
  } else if (g.order() > 1) {
    fail("gset.action", "missing");
  }
  return with_context("gset.action", [&] { return GSet(g, action); });
}

LoadedSSet gsset_from_json(const Json& j, const Group& g) {
  if (j.is_object() && j.contains("size") && !j.contains("dims")) {
    GSet s = gset_from_json(j, g);
    LoadedSSet out{GSSet::empty(), {}, {}};
    std::vector<std::vector<SimplexId>> act;
    for (const auto& row : s.action()) act.emplace_back(row.begin(), row.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      out.names.push_back(std::to_string(i));
      out.ids[out.names.back()] = static_cast<SimplexId>(i);
    }
    out.object = GSSet(g, std::vector<int>(s.size(), 0), std::vector<std::vector<SimplexRef>>(s.size()), act);
    return out;
  }
  const long top = as_int(field(j, "dims", "sset"), "sset.dims");
  if (top < -1 || top > kDefaultMaxDimension) fail("sset.dims", "out of range");
  const Json& simp = field(j, "simplices", "sset");
  if (!simp.is_object()) fail("sset.simplices", "expected an object keyed by dimension");
  for (auto it = simp.begin(); it != simp.end(); ++it) {
    std::size_t pos = 0;
    long d = -1;
    try {
      d = std::stol(it.key(), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != it.key().size() || d < 0 || d > top) fail("sset.simplices." + it.key(), "not a dimension in 0..dims");
  }
  LoadedSSet out{GSSet::empty(), {}, {}};
  std::vector<int> dims;
  for (long d = 0; d <= top; ++d) {
    auto it = simp.find(std::to_string(d));
    if (it == simp.end()) continue;
    const std::string p = "sset.simplices." + std::to_string(d);
    for (std::size_t i = 0; i < as_array(*it, p).size(); ++i) {
      std::string name = id_string((*it)[i], p + "[" + std::to_string(i) + "]");
      if (out.ids.count(name)) fail(p + "[" + std::to_string(i) + "]", "duplicate identifier " + name);
      out.ids[name] = static_cast<SimplexId>(out.names.size());
      out.names.push_back(name);
      dims.push_back(static_cast<int>(d));
    }
  }
  auto lookup = [&](const Json& id, const std::string& p) {
    std::string name = id_string(id, p);
    auto it = out.ids.find(name);
    if (it == out.ids.end()) fail(p, "unknown simplex " + name);
    return it->second;
  };
  auto ref = [&](const Json& r, const std::string& p) {
    if (!r.is_array() || r.size() != 2) fail(p, "expected [base, word]");
    return SimplexRef{lookup(r[0], p + "[0]"), int_list(r[1], p + "[1]")};
  };

  std::vector<std::vector<SimplexRef>> faces(dims.size());
  const Json empty_faces = Json::object();
  const Json& fj = j.contains("faces") ? j["faces"] : empty_faces;
  if (!fj.is_object()) fail("sset.faces", "expected an object");
  for (auto it = fj.begin(); it != fj.end(); ++it)
    if (!out.ids.count(it.key())) fail("sset.faces." + it.key(), "unknown simplex");
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (dims[s] == 0) continue;
    const std::string p = "sset.faces." + out.names[s];
    auto it = fj.find(out.names[s]);
    if (it == fj.end()) fail(p, "missing");
    if (as_array(*it, p).size() != static_cast<std::size_t>(dims[s] + 1))
      fail(p, "expected " + std::to_string(dims[s] + 1) + " faces");
    for (std::size_t i = 0; i < it->size(); ++i) faces[s].push_back(ref((*it)[i], p + "[" + std::to_string(i) + "]"));
  }

  std::vector<std::vector<SimplexId>> action(g.order());
  for (auto& row : action)
    for (std::size_t s = 0; s < dims.size(); ++s) row.push_back(static_cast<SimplexId>(s));
  if (j.contains("action")) {
    const Json& act = j["action"];
    if (!act.is_object()) fail("sset.action", "expected an object");
    std::set<Element> seen;
    for (auto it = act.begin(); it != act.end(); ++it) {
      Element e = element_key(it.key(), g, "sset.action");
      const std::string p = "sset.action." + it.key();
      if (!it.value().is_object()) fail(p, "expected an object");
      for (std::size_t s = 0; s < dims.size(); ++s) {
        auto v = it.value().find(out.names[s]);
        if (v == it.value().end()) fail(p + "." + out.names[s], "missing");
        action[static_cast<std::size_t>(e)][s] = lookup(*v, p + "." + out.names[s]);
      }
      for (auto v = it.value().begin(); v != it.value().end(); ++v)
        if (!out.ids.count(v.key())) fail(p + "." + v.key(), "unknown simplex");
      seen.insert(e);
    }
    for (std::size_t e = 1; e < g.order(); ++e)
      if (!seen.count(static_cast<Element>(e))) fail("sset.action." + std::to_string(e), "missing");
  }
  out.object = with_context("sset", [&] { return GSSet(g, dims, faces, action); });
  return out;
}

LoadedMap map_from_json(const Json& j, const Group& g, const std::string& base_dir) {
  auto side = [&](const char* key) {
    const Json& s = field(j, key, "map");
    if (s.is_string()) {
      std::filesystem::path p(s.get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      return with_context(std::string("map.") + key, [&] { return gsset_from_json(read_json_file(p.string()), g); });
    }
    return with_context(std::string("map.") + key, [&] { return gsset_from_json(s, g); });
  };
  LoadedSSet source = side("source");
  LoadedSSet target = side("target");
  const Json& vals = field(j, "values", "map");
  if (!vals.is_object()) fail("map.values", "expected an object");
  std::vector<SimplexRef> values;
  for (const auto& name : source.names) {
    const std::string p = "map.values." + name;
    auto it = vals.find(name);
    if (it == vals.end()) fail(p, "missing");
    if (!it->is_array() || it->size() != 2) fail(p, "expected [base, word]");
    std::string base = id_string((*it)[0], p + "[0]");
    auto b = target.ids.find(base);
    if (b == target.ids.end()) fail(p + "[0]", "unknown target simplex " + base);
    values.push_back({b->second, int_list((*it)[1], p + "[1]")});
  }
  for (auto it = vals.begin(); it != vals.end(); ++it)
    if (!source.ids.count(it.key())) fail("map.values." + it.key(), "unknown source simplex");
  SMap map = with_context("map", [&] { return SMap(source.object, target.object, values); });
  return LoadedMap{std::move(source), std::move(target), std::move(map)};
}

EqChainComplex chain_from_json(const Json& j, const Group& g, const std::optional<Ring>& ring_override) {
  Ring ring = ring_override ? *ring_override
                            : with_context("chain.ring", [&] {
                                const Json& r = field(j, "ring", "chain");
                                if (!r.is_string()) fail("chain.ring", "expected a string");
                                return Ring::parse(r.get<std::string>());
                              });
  const Json& rk = as_array(field(j, "ranks", "chain"), "chain.ranks");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rk.size(); ++i) ranks.push_back(as_size(rk[i], "chain.ranks[" + std::to_string(i) + "]"));
  const int top = static_cast<int>(ranks.size()) - 1;
  auto rank = [&](int n) { return n < 0 || n > top ? std::size_t{0} : ranks[static_cast<std::size_t>(n)]; };

  std::vector<Matrix> d;
  const Json empty = Json::object();
  const Json& dj = j.contains("d") ? j["d"] : empty;
  if (!dj.is_object()) fail("chain.d", "expected an object keyed by degree");
  for (auto it = dj.begin(); it != dj.end(); ++it) {
    bool ok = false;
    for (int n = 1; n <= top; ++n) ok = ok || it.key() == std::to_string(n);
    if (!ok) fail("chain.d." + it.key(), "not a degree in 1..top");
  }
  for (int n = 1; n <= top; ++n) {
    auto it = dj.find(std::to_string(n));
    d.push_back(it == dj.end() ? Matrix(rank(n - 1), rank(n)) : matrix_from(*it, rank(n - 1), rank(n), "chain.d." + std::to_string(n)));
  }
  ChainComplex c = with_context("chain", [&] { return ChainComplex(ring, ranks, d); });

  std::vector<std::vector<Matrix>> rep(g.order());
  for (auto& per : rep)
    for (int n = 0; n <= top; ++n) per.push_back(Matrix::identity(rank(n)));
  if (j.contains("rep")) {
    const Json& rj = j["rep"];
    if (!rj.is_object()) fail("chain.rep", "expected an object");
    std::set<Element> seen;
    for (auto it = rj.begin(); it != rj.end(); ++it) {
      Element e = element_key(it.key(), g, "chain.rep");
      const std::string p = "chain.rep." + it.key();
      if (!it.value().is_object()) fail(p, "expected an object keyed by degree");
      for (int n = 0; n <= top; ++n) {
        auto m = it.value().find(std::to_string(n));
        if (m == it.value().end()) {
          if (rank(n) > 0) fail(p + "." + std::to_string(n), "missing");
          continue;
        }
        rep[static_cast<std::size_t>(e)][static_cast<std::size_t>(n)] = matrix_from(*m, rank(n), rank(n), p + "." + std::to_string(n));
      }
      seen.insert(e);
    }
    for (std::size_t e = 1; e < g.order(); ++e)
      if (!seen.count(static_cast<Element>(e))) fail("chain.rep." + std::to_string(e), "missing");
  }
  return with_context("chain.rep", [&] { return EqChainComplex(g, c, rep); });
}

// ---------------------------------------------------------------------------

Json to_json(const Group& g) { return Json{{"order", g.order()}, {"mult", g.table()}}; }

Json to_json(const GSSet& x, const std::vector<std::string>& names) {
  Json out;
  out["dims"] = x.top_dim();
  out["simplices"] = Json::object();
  out["faces"] = Json::object();
  for (int n = 0; n <= x.top_dim(); ++n) {
    Json ids = Json::array();
    for (SimplexId s : x.simplices(n)) ids.push_back(Json(id_json(s, names)));
    out["simplices"][std::to_string(n)] = ids;
  }
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (x.dim(static_cast<SimplexId>(s)) == 0) continue;
    Json fs = Json::array();
    for (const auto& f : x.faces(static_cast<SimplexId>(s))) fs.push_back(Json(ref_json(f, names)));
    out["faces"][name_of(names, static_cast<SimplexId>(s))] = fs;
  }
  if (x.group().order() > 1) {
    out["action"] = Json::object();
    for (std::size_t g = 1; g < x.group().order(); ++g) {
      Json row = Json::object();
      for (std::size_t s = 0; s < x.size(); ++s)
        row[name_of(names, static_cast<SimplexId>(s))] = Json(id_json(x.act(static_cast<Element>(g), static_cast<SimplexId>(s)), names));
      out["action"][std::to_string(g)] = row;
    }
  }
  return out;
}

Json to_json(const EqChainComplex& c) {
  Json out;
  out["ring"] = c.ring().name();
  out["ranks"] = c.complex().ranks();
  out["d"] = Json::object();
  for (int n = 1; n <= c.complex().top(); ++n) out["d"][std::to_string(n)] = Json(matrix_json(c.complex().d(n)));
  if (c.group().order() > 1) {
    out["rep"] = Json::object();
    for (std::size_t g = 1; g < c.group().order(); ++g)
      for (int n = 0; n <= c.complex().top(); ++n)
        out["rep"][std::to_string(g)][std::to_string(n)] = Json(matrix_json(c.rho(static_cast<Element>(g), n)));
  }
  return out;
}

OrderedJson matrix_json(const Matrix& m) {
  OrderedJson out = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

OrderedJson to_json(const OrbitCategory& oc) {
  OrderedJson out;
  out["objects"] = OrderedJson::array();
  for (const auto& h : oc.family()) out["objects"].push_back(h.members());
  out["hom"] = OrderedJson::object();
  for (std::size_t h = 0; h < oc.object_count(); ++h)
    for (std::size_t k = 0; k < oc.object_count(); ++k) out["hom"][oc.family()[h].str() + "," + oc.family()[k].str()] = oc.hom(h, k);
  return out;
}

OrderedJson to_json(const std::vector<HomologyGroup>& h, const Ring& ring) {
  OrderedJson out = OrderedJson::array();
  for (const auto& g : h) {
    OrderedJson t = OrderedJson::array();
    for (const auto& x : g.torsion) t.push_back(scalar_json(Rational(x)));
    out.push_back(OrderedJson{{"degree", g.degree}, {"free_rank", g.free_rank}, {"torsion", t}, {"group", g.str(ring)}});
  }
  return out;
}

OrderedJson to_json(const CofibrationVerdict& v, const std::vector<std::string>& names) {
  OrderedJson out;
  out["cofibration"] = v.is_cofibration;
  out["injective"] = v.injective;
  out["witness"] = v.witness ? id_json(*v.witness, names) : OrderedJson(nullptr);
  out["witness_stabilizer"] = v.witness_stabilizer ? OrderedJson(v.witness_stabilizer->members()) : OrderedJson(nullptr);
  out["strict_reading_differs"] = v.strict_reading_differs;
  return out;
}

OrderedJson to_json(const CellStructure& cells, const std::vector<std::string>& names) {
  OrderedJson out;
  out["count"] = cells.cell_count();
  out["cells"] = OrderedJson::object();
  for (std::size_t n = 0; n < cells.cells.size(); ++n) {
    OrderedJson list = OrderedJson::array();
    for (const auto& c : cells.cells[n]) {
      OrderedJson att = OrderedJson::array();
      for (const auto& f : c.attaching) att.push_back(ref_json(f, names));
      list.push_back(OrderedJson{{"representative", id_json(c.representative, names)},
                                 {"stabilizer", c.stabilizer.members()},
                                 {"attaching", att}});
    }
    out["cells"][std::to_string(n)] = list;
  }
  return out;
}

OrderedJson to_json(const AdjunctionReport& r) {
  OrderedJson out;
  out["unit_iso"] = r.unit_iso;
  out["unit_natural"] = r.unit_natural;
  out["counit_iso"] = r.counit_iso;
  out["counit_equivariant"] = r.counit_equivariant;
  out["triangle_identities"] = r.triangle_identities;
  out["per_object"] = OrderedJson::object();
  for (const auto& o : r.per_object) {
    OrderedJson e{{"unit_iso", o.unit_iso}, {"source", o.source}, {"target", o.target}};
    if (o.unit_weak_equivalence) e["unit_quasi_iso"] = *o.unit_weak_equivalence;
    out["per_object"][o.subgroup] = e;
  }
  return out;
}

OrderedJson to_json(const CellularityReport& r) {
  return OrderedJson{{"h", r.h},           {"k", r.k},     {"fixed_cosets", r.fixed_cosets}, {"orbit_count", r.orbit_count},
                     {"iso", r.iso},       {"lhs", r.lhs}, {"rhs", r.rhs}};
}

OrderedJson to_json(const ArrowCensus& c, const OrbitCategory& oc) {
  OrderedJson out;
  out["diagrams"] = c.diagram_count();
  out["g_objects"] = c.g_objects;
  out["assignments"] = OrderedJson::array();
  for (const auto& d : c.diagrams) {
    OrderedJson a = OrderedJson::object();
    for (std::size_t h = 0; h < d.size(); ++h) a[oc.family()[h].str()] = d[h];
    out["assignments"].push_back(a);
  }
  return out;
}

OrderedJson to_json(const Certificate& c) {
  OrderedJson out;
  auto degrees = [](auto get, int len) {
    OrderedJson o = OrderedJson::object();
    for (int n = 0; n < len; ++n) o[std::to_string(n)] = matrix_json(get(n));
    return o;
  };
  out["g"] = degrees([&](int n) { return c.g.at(n); }, c.g.length());
  out["s"] = degrees([&](int n) { return c.s.at(n); }, static_cast<int>(c.s.components.size()));
  out["t"] = degrees([&](int n) { return c.t.at(n); }, static_cast<int>(c.t.components.size()));
  return out;
}

OrderedJson to_json(const WhiteheadReport& r) {
  OrderedJson out;
  out["ring"] = r.ring.name();
  OrderedJson iso;
  iso["holds"] = r.isotropy.holds;
  iso["strict_holds"] = r.isotropy.strict_holds;
  iso["witness"] = r.isotropy.witness ? OrderedJson(*r.isotropy.witness) : OrderedJson(nullptr);
  iso["witness_stabilizer"] =
      r.isotropy.witness_stabilizer ? OrderedJson(r.isotropy.witness_stabilizer->members()) : OrderedJson(nullptr);
  out["isotropy"] = iso;
  OrderedJson a = OrderedJson::object(), b = OrderedJson::object(), hom = OrderedJson::object();
  for (const auto& c : r.hyp_a) {
    a[c.subgroup.str()] = c.quasi_iso;
    hom["hyp_a"][c.subgroup.str()] = {{"source", to_json(c.source_homology, r.ring)}, {"target", to_json(c.target_homology, r.ring)}};
  }
  for (const auto& c : r.hyp_b) {
    b[c.subgroup.str()] = c.quasi_iso;
    hom["hyp_b"][c.subgroup.str()] = {{"source", to_json(c.source_homology, r.ring)}, {"target", to_json(c.target_homology, r.ring)}};
  }
  out["hyp_a"] = a;
  out["hyp_b"] = b;
  out["homology"] = hom;
  out["theorem_applies"] = r.theorem_applies();
  out["searched"] = r.searched;
  out["certificate"] = r.certificate ? to_json(*r.certificate) : OrderedJson(nullptr);
  return out;
}

}  // namespace eqhom::io
