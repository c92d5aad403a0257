#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqhom/elmendorf.hpp"
#include "eqhom/whitehead.hpp"

namespace eqhom::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError names the file on failure.
Json read_json_file(const std::string& path);

/// {"order": n, "mult": [[...]]} or {"degree": d, "generators": [[...]]}.
Group group_from_json(const Json& j);

/// A list of sorted member lists, bare or under "family".
std::vector<Subgroup> family_from_json(const Json& j, const Group& g);

/// {"size": n, "action": {"g": [perm]}}; element 0 may be omitted.
GSet gset_from_json(const Json& j, const Group& g);

/// A GSSet file with identifiers remapped densely, dimension-major in the
/// listed order. `names[id]` is the identifier used in the file.
struct LoadedSSet {
  GSSet object;
  std::vector<std::string> names;
  std::map<std::string, SimplexId> ids;
};
/// {"dims": N, "simplices": {"n": [ids]}, "faces": {"id": [[base, word], ...]},
///  "action": {"g": {"id": id'}}}. Without "action" the group acts trivially.
/// A G-set file is read as a discrete simplicial G-set.
LoadedSSet gsset_from_json(const Json& j, const Group& g);

/// {"source": gsset, "target": gsset, "values": {"id": [base, word]}}. Source
/// and target may be inline objects or paths relative to `base_dir`.
struct LoadedMap {
  LoadedSSet source;
  LoadedSSet target;
  SMap map;
};
LoadedMap map_from_json(const Json& j, const Group& g, const std::string& base_dir = ".");

/// {"ring", "ranks", "d": {"n": [[..]]}, "rep": {"g": {"n": [[..]]}}}.
/// Entries are integers or "p/q" strings. `ring` overrides the file's ring.
EqChainComplex chain_from_json(const Json& j, const Group& g, const std::optional<Ring>& ring = std::nullopt);

// Serialization of inputs, for round trips.
Json to_json(const Group& g);
Json to_json(const GSSet& x, const std::vector<std::string>& names = {});
Json to_json(const EqChainComplex& c);

// Reports. Object keys are written in a fixed order.
OrderedJson matrix_json(const Matrix& m);
OrderedJson to_json(const OrbitCategory& oc);
OrderedJson to_json(const std::vector<HomologyGroup>& h, const Ring& ring);
OrderedJson to_json(const CofibrationVerdict& v, const std::vector<std::string>& names = {});
OrderedJson to_json(const CellStructure& cells, const std::vector<std::string>& names = {});
OrderedJson to_json(const AdjunctionReport& r);
OrderedJson to_json(const CellularityReport& r);
OrderedJson to_json(const ArrowCensus& c, const OrbitCategory& oc);
OrderedJson to_json(const Certificate& c);
OrderedJson to_json(const WhiteheadReport& r);

}  // namespace eqhom::io
