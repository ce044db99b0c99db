#include "tropid/io.hpp"

#include <sstream>
#include <stdexcept>

namespace tropid {

using nlohmann::json;

json polytope_json(const LatticePolytope& p) {
  json vertices = json::array();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    PointView v = p.vertices()[i];
    vertices.push_back(std::vector<Coord>(v.begin(), v.end()));
  }
  return {{"dim", p.dim()}, {"vertices", std::move(vertices)}};
}

json degree_json(const DegreeSignature& s) {
  json entries = json::array();
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    entries.push_back({{"u", subword_label(i, s.m, s.d)}, {"polytope", polytope_json(s.entries[i])}});
  }
  return {{"d", s.d}, {"entries", std::move(entries)}};
}

json signature_json(const UTnSignature& s) {
  json degrees = json::array();
  for (const auto& d : s.per_degree) degrees.push_back(degree_json(d));
  const int m = s.per_degree.empty() ? 0 : s.per_degree.front().m;
  return {{"schema", kSignatureSchema}, {"m", m}, {"n", s.n}, {"degrees", std::move(degrees)}};
}

std::string signature_key(const UTnSignature& s) { return signature_json(s).dump(); }
std::string degree_key(const DegreeSignature& s) { return degree_json(s).dump(); }

namespace {

constexpr int kScale = 24;
constexpr int kMargin = 20;

struct Frame {
  int la, lb;
  int px(Coord x) const { return kMargin + static_cast<int>(x) * kScale; }
  int py(Coord y) const { return kMargin + (lb - static_cast<int>(y)) * kScale; }
};

void polygon(std::ostringstream& out, const Frame& f, const LatticePolytope& p, const char* fill) {
  if (p.empty()) return;
  // split by the chord from the first to the last vertex
  const PointSet& v = p.vertices();
  std::vector<std::pair<Coord, Coord>> lower, upper;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  const std::pair<Coord, Coord> first{v[0][0], v[0][1]}, last{v[v.size() - 1][0], v[v.size() - 1][1]};
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::pair<Coord, Coord> q{v[i][0], v[i][1]};
    if (cross(first, last, q) <= 0) lower.push_back(q);
    else upper.push_back(q);
  }
  out << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"" << fill << "\" stroke-width=\"1\" points=\"";
  for (const auto& q : lower) out << f.px(q.first) << ',' << f.py(q.second) << ' ';
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out << f.px(it->first) << ',' << f.py(it->second) << ' ';
  out << "\"/>\n";
}

}  // namespace

std::string plot_svg(const std::vector<Word>& words, bool shade_a, bool shade_b, bool chain_boxes) {
  if (words.empty() || words.size() > 2) throw std::invalid_argument("plot: give one or two words");
  for (const Word& w : words) {
    if (w.alphabet_size() != 2) throw std::invalid_argument("plot: only two-letter words are planar");
  }
  const Content c = content(words.front());
  if (words.size() == 2 && content(words[1]) != c) throw std::invalid_argument("plot: words have different contents");
  const Frame f{c[0], c[1]};
  const int width = 2 * kMargin + f.la * kScale, height = 2 * kMargin + f.lb * kScale;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
  for (int x = 0; x <= f.la; ++x) out << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(x) << "\" y2=\"" << f.py(f.lb) << "\"/>\n";
  for (int y = 0; y <= f.lb; ++y) out << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(y) << "\" x2=\"" << f.px(f.la) << "\" y2=\"" << f.py(y) << "\"/>\n";
  out << "</g>\n";

  const PlanarSignature sig = planar_signature(words.front());
  if (shade_a) polygon(out, f, sig.a, "#4477cc");
  if (shade_b) polygon(out, f, sig.b, "#44aa66");
  if (chain_boxes) {
    for (const auto& p : vertex_chain(sig.a, sig.b, c)) {
      if (p.label == ChainLabel::end) continue;
      out << "<rect x=\"" << f.px(p.x) << "\" y=\"" << f.py(p.y + 1) << "\" width=\"" << kScale << "\" height=\"" << kScale
          << "\" fill=\"#888888\" fill-opacity=\"0.4\"/>\n";
    }
  }
  const char* colours[] = {"black", "red"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    const StaircasePath p = path(words[i]);
    out << "<polyline fill=\"none\" stroke=\"" << colours[i] << "\" stroke-width=\"" << (i == 0 ? 3 : 2) << "\" points=\"";
    for (std::size_t k = 0; k < p.size(); ++k) out << f.px(p[k][0]) << ',' << f.py(p[k][1]) << ' ';
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropid
