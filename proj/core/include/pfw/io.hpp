#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfw/congruence.hpp"
#include "pfw/entourage.hpp"
#include "pfw/error.hpp"
#include "pfw/frame.hpp"
#include "pfw/frith.hpp"
#include "pfw/hom.hpp"
#include "pfw/pervin.hpp"

namespace pfw {

using json = nlohmann::json;

// Schema violation; path() is a JSON path such as "$.le[2][1]".
class SchemaError : public InvalidInput {
 public:
  SchemaError(std::string path, std::string const& message);
  std::string const& path() const noexcept { return path_; }

 private:
  std::string path_;
};

enum class InstanceKind { frame, frith, pervin, quni, morphism };
std::string to_string(InstanceKind k);
std::optional<InstanceKind> instance_kind(std::string const& name);

// A validated document. payload is kept in canonical form, so
// serialize(parse_instance(serialize(i))) == serialize(i).
struct Instance {
  InstanceKind kind = InstanceKind::frame;
  std::string name;
  json payload;
};

// Accepts {"kind", "name", "payload"} or a bare payload whose kind is
// recognised from its keys.
Instance parse_instance(json const& doc, std::string const& default_name = "instance");
json serialize(Instance const& inst);

// Frames: {"kind": "poset", "points": [...], "le": [[p, q], ...], "names"?}
// where le lists order pairs between point names (reflexive pairs are
// ignored, the transitive closure is taken), or {"kind": "table",
// "elements": [...], "meet": [[...]], "join": [[...]]} with entries given by
// index or element name. Canonical output is the poset form with covers and
// explicit element names.
FramePtr frame_from_json(json const& j, std::string const& path = "$");
json frame_to_json(FiniteFrame const& l);

// {"frame": <frame>, "s": [element names]}.
FrithFrame frith_from_json(json const& j, std::string const& path = "$");
json frith_to_json(FrithFrame const& f);

// {"universe": ["x", "y"], "lattice": [[], ["x"], ["x", "y"]]}.
PervinPtr pervin_from_json(json const& j, std::string const& path = "$");
json pervin_to_json(PervinSpace const& x);
json subset_to_json(PervinSpace const& x, Subset s);

// {"frame": <frame>, "r": [names]} for ℰ_R, or {"frame": <frame>,
// "basis": [[[x, y], ...], ...]} where each entry seeds a C-ideal.
struct QuniDoc {
  QuasiUniformity q;
  std::optional<std::vector<Element>> r;
};
QuniDoc quni_from_json(json const& j, std::string const& path = "$");
json quni_to_json(QuniDoc const& q);

// {"dom": X, "cod": Y, "map": {name: name}}. Frames, Frith frames and
// Pervin spaces are told apart by their keys.
using Morphism = std::variant<FrameHom, FrithHom, PervinMap>;
Morphism morphism_from_json(json const& j, std::string const& path = "$");
json morphism_to_json(Morphism const& m);

// Sorted pair lists and block lists of element names.
json cideal_to_json(CIdeal const& e);
json congruence_to_json(Congruence const& c);

// Decoders for an already validated instance.
FramePtr as_frame(Instance const& i);
FrithFrame as_frith(Instance const& i);
PervinPtr as_pervin(Instance const& i);
QuniDoc as_quni(Instance const& i);
Morphism as_morphism(Instance const& i);

Instance make_instance(std::string name, FiniteFrame const& l);
Instance make_instance(std::string name, FrithFrame const& f);
Instance make_instance(std::string name, PervinSpace const& x);
Instance make_instance(std::string name, QuniDoc const& q);
Instance make_instance(std::string name, Morphism const& m);

}  // namespace pfw
