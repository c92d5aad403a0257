#include "eqhom/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "eqhom/errors.hpp"
#include "eqhom/io.hpp"

namespace eqhom {

namespace {

struct Options {
  std::string group;
  std::string family = "all";
  std::string sset;
  std::string map;
  std::string chain;
  std::string ring = "Z";
  bool ring_given = false;
  std::string format = "text";
  std::string out;
};

struct Result {
  std::string text;
  int status = 0;
};

struct Context {
  Group group = Group::trivial();
  std::vector<Subgroup> family;
  Ring ring = Ring::integers();
  bool json = false;
};

std::string dump(const io::OrderedJson& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& c : s)
    if (c == '\n') c = ';';
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == ';') out += ' ';
  }
  return out.empty() ? "0" : out;
}

std::string homology_line(const std::vector<HomologyGroup>& h, const Ring& ring) {
  std::string text;
  for (const auto& g : h) text += (text.empty() ? "" : ", ") + ("H_" + std::to_string(g.degree) + " = " + g.str(ring));
  return text.empty() ? "0" : text;
}

std::string homology_line(const ChainComplex& c) { return homology_line(homology(c), c.ring()); }

std::string matrix_text(const Matrix& m) { return io::matrix_json(m).dump(); }

std::vector<Subgroup> select_family(const std::string& sel, const Group& g) {
  if (sel == "all") return all_subgroups(g);
  if (sel == "trivial" || sel == "e") return {Subgroup::trivial(g)};
  if (sel == "whole" || sel == "G") return {Subgroup::whole(g)};
  io::Json j = io::read_json_file(sel);
  try {
    return io::family_from_json(j, g);
  } catch (const InputError& e) {
    throw InputError(sel + ": " + e.what());
  }
}

io::LoadedSSet load_sset(const Options& o, const Context& ctx) {
  if (o.sset.empty()) throw InputError("--sset: required for this command");
  io::Json j = io::read_json_file(o.sset);
  try {
    return io::gsset_from_json(j, ctx.group);
  } catch (const InputError& e) {
    throw InputError(o.sset + ": " + e.what());
  }
}

io::LoadedMap load_map(const Options& o, const Context& ctx) {
  if (o.map.empty()) throw InputError("--map: required for this command");
  std::string dir = std::filesystem::path(o.map).parent_path().string();
  io::Json j = io::read_json_file(o.map);
  try {
    return io::map_from_json(j, ctx.group, dir.empty() ? "." : dir);
  } catch (const InputError& e) {
    throw InputError(o.map + ": " + e.what());
  }
}

EqChainComplex load_chain(const Options& o, const Context& ctx) {
  std::optional<Ring> ring;
  if (o.ring_given) ring = ctx.ring;
  io::Json j = io::read_json_file(o.chain);
  try {
    return io::chain_from_json(j, ctx.group, ring);
  } catch (const InputError& e) {
    throw InputError(o.chain + ": " + e.what());
  }
}

std::string names_of(const std::vector<SimplexId>& ids, const std::vector<std::string>& names) {
  std::string s;
  for (SimplexId id : ids) s += (s.empty() ? "" : " ") + names[static_cast<std::size_t>(id)];
  return s;
}

// ---------------------------------------------------------------------------

Result orbit_cat(const Options&, const Context& ctx) {
  OrbitCategory oc(ctx.group, ctx.family);
  if (ctx.json) return {dump(io::to_json(oc))};
  return {oc.table()};
}

Result fixed_points_cmd(const Options& o, const Context& ctx) {
  auto x = load_sset(o, ctx);
  io::OrderedJson j = io::OrderedJson::object();
  std::ostringstream t;
  for (const auto& h : ctx.family) {
    SubObject f = fixed_sset(x.object, h);
    io::OrderedJson dims = io::OrderedJson::object();
    t << h.str() << ": " << f.object.size() << (f.object.size() == 1 ? " simplex" : " simplices") << "\n";
    for (int n = 0; n <= f.object.top_dim(); ++n) {
      std::vector<SimplexId> ids;
      for (SimplexId s : f.object.simplices(n)) ids.push_back(f.inclusion(s).base);
      io::OrderedJson list = io::OrderedJson::array();
      for (SimplexId id : ids) list.push_back(x.names[static_cast<std::size_t>(id)]);
      dims[std::to_string(n)] = list;
      t << "  dim " << n << ": " << names_of(ids, x.names) << "\n";
    }
    j[h.str()] = dims;
  }
  if (ctx.json) return {dump(j)};
  return {t.str()};
}

Result homology_cmd(const Options& o, const Context& ctx) {
  std::optional<io::LoadedSSet> x;
  std::optional<EqChainComplex> c;
  if (!o.chain.empty()) {
    if (!o.sset.empty()) throw InputError("homology: give either --sset or --chain");
    c = load_chain(o, ctx);
  } else {
    x = load_sset(o, ctx);
    c = normalized_chains(x->object, ctx.ring);
  }
  const Ring& ring = c->ring();
  io::OrderedJson j;
  j["ring"] = ring.name();
  j["subgroups"] = io::OrderedJson::object();
  std::ostringstream t;
  t << "ring " << ring.name() << "\n";
  for (const auto& h : ctx.family) {
    ChainComplex inv = invariants(*c, h).complex;
    io::OrderedJson e;
    e["invariants"] = io::to_json(homology(inv), ring);
    t << h.str() << "\n  invariants:   " << homology_line(inv) << "\n";
    if (x) {
      ChainComplex fixed = normalized_chains(fixed_sset(x->object, h).object, ring).complex();
      e["fixed_points"] = io::to_json(homology(fixed), ring);
      t << "  fixed points: " << homology_line(fixed) << "\n";
    } else {
      e["fixed_points"] = nullptr;
    }
    j["subgroups"][h.str()] = e;
  }
  if (ctx.json) return {dump(j)};
  return {t.str()};
}

Result cofib_check(const Options& o, const Context& ctx) {
  auto m = load_map(o, ctx);
  CofibrationVerdict v = check_F_cofibration(m.map, ctx.family);
  int status = v.is_cofibration ? 0 : 1;
  if (ctx.json) return {dump(io::to_json(v, m.target.names)), status};
  std::ostringstream t;
  t << "cofibration: " << yes_no(v.is_cofibration) << "\n";
  if (!v.injective) {
    t << "not injective";
    if (v.witness) t << " at target simplex " << m.target.names[static_cast<std::size_t>(*v.witness)];
    t << "\n";
  } else if (v.witness) {
    t << "new simplex " << m.target.names[static_cast<std::size_t>(*v.witness)] << " has stabilizer "
      << v.witness_stabilizer->str() << ", not conjugate to a member of the family\n";
  }
  if (v.strict_reading_differs) t << "note: some stabilizer is conjugate to a member but not itself a member\n";
  return {t.str(), status};
}

Result cells_cmd(const Options& o, const Context& ctx) {
  auto m = load_map(o, ctx);
  CellStructure cells = cell_decomposition(m.map);
  int status = 0;
  std::string replay = "B reconstructed up to isomorphism";
  try {
    replay_cells(m.map, cells);
  } catch (const VerificationError& e) {
    status = 1;
    replay = std::string("failed: ") + e.what();
  }
  if (ctx.json) {
    io::OrderedJson j = io::to_json(cells, m.target.names);
    j["replay"] = status == 0;
    return {dump(j), status};
  }
  std::ostringstream t;
  t << cells.cell_count() << (cells.cell_count() == 1 ? " cell" : " cells") << "\n";
  for (std::size_t n = 0; n < cells.cells.size(); ++n)
    for (const auto& c : cells.cells[n]) {
      t << "  dim " << n << ": " << m.target.names[static_cast<std::size_t>(c.representative)] << " stabilizer "
        << c.stabilizer.str();
      if (!c.attaching.empty()) {
        t << " attached along (";
        for (std::size_t i = 0; i < c.attaching.size(); ++i) {
          t << (i ? ", " : "");
          for (int s : c.attaching[i].word) t << "s" << s << " ";
          t << m.target.names[static_cast<std::size_t>(c.attaching[i].base)];
        }
        t << ")";
      }
      t << "\n";
    }
  t << "replay: " << replay << "\n";
  return {t.str(), status};
}

template <class C>
Result elmendorf_in(const Context& ctx, const typename C::GObject& x, const typename C::Object& unit_cell,
                    const std::string& category) {
  OrbitCategory oc(ctx.group, ctx.family);
  auto round = adjunction_check(i_lower<C>(oc, x), x);
  bool ok = round.report.unit_iso && round.report.counit_iso && round.report.triangle_identities;
  io::OrderedJson j = io::to_json(round.report);
  j["category"] = category;
  j["free_cells"] = io::OrderedJson::object();
  std::ostringstream t;
  t << "category " << category << "\n";
  t << "unit iso: " << yes_no(round.report.unit_iso) << "\n";
  t << "unit natural: " << yes_no(round.report.unit_natural) << "\n";
  t << "counit iso: " << yes_no(round.report.counit_iso) << "\n";
  t << "counit equivariant: " << yes_no(round.report.counit_equivariant) << "\n";
  t << "triangle identities: " << yes_no(round.report.triangle_identities) << "\n";
  for (std::size_t k = 0; k < oc.object_count(); ++k) {
    const Subgroup& kk = oc.family()[k];
    auto cell = adjunction_check(free_cell_diagram<C>(oc, k, unit_cell), x);
    io::OrderedJson per = io::OrderedJson::object();
    t << "free cell G/" << kk.str() << ":\n";
    for (std::size_t h = 0; h < oc.object_count(); ++h) {
      const auto& obj = cell.report.per_object[h];
      auto cr = cellularity_report<C>(oc.family()[h], kk, unit_cell);
      ok = ok && obj.unit_iso && cr.report.iso;
      io::OrderedJson e = io::to_json(cr.report);
      e["unit_iso"] = obj.unit_iso;
      if (obj.unit_weak_equivalence) e["unit_quasi_iso"] = *obj.unit_weak_equivalence;
      e["unit_source"] = obj.source;
      e["unit_target"] = obj.target;
      per[oc.family()[h].str()] = e;
      t << "  at " << oc.family()[h].str() << ": unit iso " << yes_no(obj.unit_iso);
      if (obj.unit_weak_equivalence) t << ", quasi-iso " << yes_no(*obj.unit_weak_equivalence);
      t << " (" << one_line(obj.source) << " -> " << one_line(obj.target) << "); cellularity "
        << yes_no(cr.report.iso) << " (" << one_line(cr.report.lhs) << " vs " << one_line(cr.report.rhs) << ")\n";
    }
    j["free_cells"][kk.str()] = per;
  }
  int status = ok ? 0 : 1;
  if (ctx.json) return {dump(j), status};
  return {t.str(), status};
}

Result elmendorf_cmd(const Options& o, const Context& ctx) {
  if (!o.chain.empty()) {
    EqChainComplex c = load_chain(o, ctx);
    return elmendorf_in<ChainCat>(ctx, c, ChainComplex::concentrated(c.ring(), 0), "Ch");
  }
  auto x = load_sset(o, ctx);
  return elmendorf_in<FinSSetCat>(ctx, x.object, GSSet::point(), "FinSSet");
}

Result whitehead_cmd(const Options& o, const Context& ctx) {
  auto m = load_map(o, ctx);
  WhiteheadReport r = whitehead_verify(m.map, ctx.family, ctx.ring);
  int status = r.certificate ? 0 : 1;
  if (ctx.json) return {dump(io::to_json(r)), status};
  std::ostringstream t;
  t << "ring " << r.ring.name() << "\n";
  t << "isotropy: " << (r.isotropy.holds ? "holds" : "fails");
  if (!r.isotropy.holds && r.isotropy.witness)
    t << " at " << *r.isotropy.witness << " (stabilizer " << r.isotropy.witness_stabilizer->str() << ")";
  t << "\n";
  auto hyp = [&](const char* label, const std::vector<SubgroupCheck>& checks, bool holds,
                 const std::optional<Subgroup>& first) {
    t << "hypothesis " << label << ": " << (holds ? "holds" : "fails");
    if (first) t << " at " << first->str();
    t << "\n";
    for (const auto& c : checks) {
      t << "  " << c.subgroup.str() << ": " << yes_no(c.quasi_iso) << " (" << homology_line(c.source_homology, r.ring)
        << " -> " << homology_line(c.target_homology, r.ring) << ")\n";
    }
  };
  hyp("(a) invariants", r.hyp_a, r.hyp_a_holds(), r.first_failure_a());
  hyp("(b) fixed points", r.hyp_b, r.hyp_b_holds(), r.first_failure_b());
  t << "theorem applies: " << yes_no(r.theorem_applies()) << "\n";
  if (r.certificate) {
    t << "certificate: found and verified\n";
    for (int n = 0; n < r.certificate->g.length(); ++n) t << "  g_" << n << " = " << matrix_text(r.certificate->g.at(n)) << "\n";
    for (std::size_t n = 0; n < r.certificate->s.components.size(); ++n)
      t << "  s_" << n << " = " << matrix_text(r.certificate->s.components[n]) << "\n";
    for (std::size_t n = 0; n < r.certificate->t.components.size(); ++n)
      t << "  t_" << n << " = " << matrix_text(r.certificate->t.components[n]) << "\n";
  } else {
    t << "certificate: " << (r.searched ? "none exists" : "not searched") << "\n";
  }
  return {t.str(), status};
}

Result census_cmd(const Options&, const Context& ctx) {
  OrbitCategory oc(ctx.group, ctx.family);
  ArrowCensus c = arrow_poset_census(oc);
  if (ctx.json) return {dump(io::to_json(c, oc))};
  std::ostringstream t;
  t << c.diagram_count() << " diagrams vs " << c.g_objects << " G-objects\n";
  for (const auto& d : c.diagrams) {
    t << " ";
    for (std::size_t h = 0; h < d.size(); ++h) t << " " << oc.family()[h].str() << "=" << d[h];
    t << "\n";
  }
  return {t.str()};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant homotopy toolkit for finite groups"};
  app.require_subcommand(1);
  Options o;

  using Handler = Result (*)(const Options&, const Context&);
  struct Verb {
    const char* name;
    const char* help;
    Handler run;
  };
  const std::vector<Verb> verbs{
      {"orbit-cat", "Print the orbit category of the family", orbit_cat},
      {"fixed-points", "Fixed simplices of a G-set or G-simplicial set per subgroup", fixed_points_cmd},
      {"homology", "Homology of invariants and of fixed points per subgroup", homology_cmd},
      {"cofib-check", "Decide whether a map is a cofibration for the family", cofib_check},
      {"cells", "Equivariant cell decomposition of a monomorphism, with replay", cells_cmd},
      {"elmendorf", "Unit and counit of the fixed-point adjunction, free cells and cellularity", elmendorf_cmd},
      {"whitehead", "Hypotheses and equivariant homotopy inverse of C(f; R)", whitehead_cmd},
      {"census", "Diagrams on the orbit category valued in the arrow poset", census_cmd},
  };
  std::vector<CLI::App*> subs;
  for (const auto& v : verbs) {
    CLI::App* s = app.add_subcommand(v.name, v.help);
    s->add_option("--group", o.group, "Group file (default: trivial group)");
    s->add_option("--family", o.family, "all, trivial (e), whole (G), or a subgroup list file")->capture_default_str();
    s->add_option("--sset", o.sset, "G-simplicial set or G-set file");
    s->add_option("--map", o.map, "Map file");
    s->add_option("--chain", o.chain, "Chain complex file");
    s->add_option("--ring", o.ring, "Z, Q or Fp:p")->capture_default_str();
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    s->add_option("--out", o.out, "Write the report to a file");
    subs.push_back(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Verb* verb = nullptr;
  for (std::size_t i = 0; i < verbs.size(); ++i)
    if (subs[i]->parsed()) {
      verb = &verbs[i];
      o.ring_given = subs[i]->count("--ring") > 0;
    }

  Result result;
  try {
    Context ctx;
    ctx.json = o.format == "json";
    ctx.ring = Ring::parse(o.ring);
    if (!o.group.empty()) {
      io::Json j = io::read_json_file(o.group);
      try {
        ctx.group = io::group_from_json(j);
      } catch (const InputError& e) {
        throw InputError(o.group + ": " + e.what());
      }
    }
    ctx.family = select_family(o.family, ctx.group);
    if (!o.chain.empty() && std::string(verb->name) != "homology" && std::string(verb->name) != "elmendorf")
      throw InputError("--chain: not accepted by " + std::string(verb->name));
    result = verb->run(o, ctx);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    out << result.text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: --out: cannot write " << o.out << "\n";
      return 2;
    }
    f << result.text;
  }
  return result.status;
}

}  // namespace eqhom
