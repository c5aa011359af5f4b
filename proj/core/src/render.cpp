#include "pfw/render.hpp"

#include <sstream>

namespace pfw {

namespace {

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string hasse(FiniteFrame const& l, std::string const& graph_name, std::vector<std::string> const& labels) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element e = 0; e < l.size(); ++e) os << "  n" << e << " [label=" << quoted(labels[e]) << "];\n";
  for (auto [a, b] : l.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render_dot(FiniteFrame const& l, std::string const& graph_name) {
  return hasse(l, graph_name, l.names());
}

std::string render_dot(CongruenceFrame const& cf, std::string const& graph_name) {
  std::vector<std::string> labels;
  for (Element e = 0; e < cf.size(); ++e) {
    std::string label;
    for (auto const& block : cf.congruence(e).blocks()) {
      label += "{";
      for (std::size_t i = 0; i < block.size(); ++i) label += (i ? "," : "") + cf.base->name(block[i]);
      label += "}";
    }
    labels.push_back(label);
  }
  return hasse(*cf.structure, graph_name, labels);
}

std::string render_dot(Instance const& inst) {
  switch (inst.kind) {
    case InstanceKind::frame: return render_dot(*as_frame(inst), inst.name);
    case InstanceKind::frith: return render_dot(*as_frith(inst).frame, inst.name);
    default: throw InvalidInput("render: unsupported kind " + to_string(inst.kind));
  }
}

}  // namespace pfw
