#include "mixbeau/report.hpp"

#include <sstream>

namespace mixbeau {

nlohmann::json triple_to_json(const DiagTriple& t) {
  return nlohmann::json::array({t.blocks[0].bits(), t.blocks[1].bits(), t.blocks[2].bits()});
}

nlohmann::json element_to_json(const GroupElement& g) {
  auto out = nlohmann::json::array();
  for (int j = 1; j <= g.level(); ++j) out.push_back(triple_to_json(g.diag(j)));
  return out;
}

GroupElement element_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("element JSON must be a non-empty array");
  GroupElement g = GroupElement::identity(int(j.size()));
  for (std::size_t d = 0; d < j.size(); ++d) {
    const auto& t = j[d];
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("each diagonal must be a triple");
    DiagTriple tr;
    for (std::size_t p = 0; p < 3; ++p) {
      if (!t[p].is_number_unsigned()) throw std::invalid_argument("block values must be non-negative integers");
      tr.blocks[p] = F2Mat3{t[p].get<unsigned>()};
    }
    g.set_diag(int(d + 1), tr);
  }
  return g;
}

namespace {

// Pads to a visible width, counting UTF-8 code points.
std::string pad(const std::string& text, std::size_t width) {
  std::size_t visible = 0;
  for (unsigned char c : text)
    if ((c & 0xc0) != 0x80) ++visible;
  return text + std::string(width > visible ? width - visible : 0, ' ');
}

}  // namespace

std::string scheme_to_text(const ConjScheme& s) {
  // x0 edges run horizontally, x1 edges vertically.
  constexpr std::size_t w = 13;
  const std::string across = " --Conj(x0^±1)-- ";
  const std::string blank(17, ' ');
  const std::string gap = "      ";
  const auto& a = s.squares[0].n;
  const auto& b = s.squares[1].n;
  auto row = [&](const DiagTriple& p, const DiagTriple& q, const DiagTriple& r, const DiagTriple& t) {
    return "  " + pad(format_triple(p), w) + across + pad(format_triple(q), w) + gap + pad(format_triple(r), w) +
           across + format_triple(t);
  };
  auto vertical = [&](const std::string& v) {
    const std::string c = pad(v, w);
    std::string line = "  " + c + blank + c + gap + c + blank + c;
    return line.substr(0, line.find_last_not_of(' ') + 1);
  };
  std::ostringstream os;
  os << s.label << ": A1 = " << format_triple(s.a1) << ", vanish count " << s.vanish << "\n";
  os << row(a[0], a[1], b[0], b[1]) << "\n";
  os << vertical("     |") << "\n" << vertical("Conj(x1^±1)") << "\n" << vertical("     |") << "\n";
  os << row(a[2], a[3], b[2], b[3]) << "\n";
  return os.str();
}

nlohmann::json scheme_to_json(const ConjScheme& s) {
  nlohmann::json j;
  j["label"] = s.label;
  j["a1"] = triple_to_json(s.a1);
  j["vanish"] = s.vanish;
  auto nodes = nlohmann::json::array();
  for (int q = 0; q < 2; ++q)
    for (int i = 0; i < 4; ++i)
      nodes.push_back({{"id", "N" + std::to_string(4 * q + i + 1)},
                       {"a2", triple_to_json(s.squares[std::size_t(q)].n[std::size_t(i)])}});
  j["nodes"] = nodes;
  auto edges = nlohmann::json::array();
  for (const auto& e : s.edges)
    edges.push_back({{"from", "N" + std::to_string(4 * e.square + e.from + 1)},
                     {"to", "N" + std::to_string(4 * e.square + e.to + 1)},
                     {"label", e.label}});
  j["edges"] = edges;
  j["closed"] = s.closed;
  j["involutive"] = s.involutive;
  return j;
}

}  // namespace mixbeau
