#include <sstream>

#include "artin/certify.hpp"

namespace artin::certify {

namespace {

using decompose::GroupDescriptor;

std::string factor_name(const GroupDescriptor& d) {
  if (d.is(GroupDescriptor::Kind::Artin)) return graph::describe(d.graph(), d.graph().all());
  return to_string(d);
}

void render_step(std::ostream& os, const decompose::QuotientStep& s, const std::string& label, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << label << ": " << s.justification << " on "
     << (s.coordinate ? "factor " : "") << factor_name(s.local_source) << ": " << to_string(s.source) << " -> "
     << to_string(s.target) << " (" << to_string(s.kernel) << " kernel; " << s.map << ")\n";
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (s.parts[i]) render_step(os, *s.parts[i], "component " + std::to_string(i + 1), depth + 1);
  }
}

void render_unknown(std::ostream& os, const Unknown& u) {
  os << "Unknown\n";
  for (const auto& a : u.attempts) {
    os << "  rule " << a.rule << " failed: " << a.reason << " (on " << a.subject << ")\n";
  }
}

void render_trace(std::ostream& os, const std::vector<std::string>& trace) {
  os << "rules:";
  for (const auto& t : trace) os << ' ' << t;
  os << '\n';
}

void render_node(std::ostream& os, const FjcNode& n, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "- " << n.rule << ' '
     << graph::describe(n.graph, n.graph.all());
  if (n.rule == "NormallyPolyFree") {
    os << " (length " << n.evidence["certificate"]["claim"]["length"].get<int>() << ')';
  }
  os << '\n';
  for (const auto& c : n.children) render_node(os, c, depth + 1);
}

}  // namespace

std::string explain(const PolyFreeVerdict& v) {
  std::ostringstream os;
  if (!v.certified()) {
    render_unknown(os, v.unknown());
    return os.str();
  }
  const auto& c = v.certificate();
  os << "NormallyPolyFree, length " << c.length << "\n";
  os << "graph " << graph::describe(c.graph, c.graph.all()) << ' ' << c.graph_hash << '\n';
  render_trace(os, c.rule_trace);
  for (std::size_t i = 0; i < c.chain.steps.size(); ++i) {
    render_step(os, c.chain.steps[i], "q" + std::to_string(i + 1), 0);
  }
  return os.str();
}

std::string explain(const FjcVerdict& v) {
  std::ostringstream os;
  if (!v.certified()) {
    render_unknown(os, v.unknown());
    return os.str();
  }
  const auto& c = v.certificate();
  os << "FJCw Certified\n";
  os << "graph " << graph::describe(c.graph, c.graph.all()) << ' ' << c.graph_hash << '\n';
  render_trace(os, c.rule_trace);
  render_node(os, c.derivation, 0);
  return os.str();
}

}  // namespace artin::certify
