#include "support/random_presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace quiverhh::test_support {

namespace {

struct Arr {
  int s, t;
};

std::string path_text(const std::vector<int>& arrows) {
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += "*";
    out += "a" + std::to_string(arrows[i]);
  }
  return out;
}

}  // namespace

std::string random_presentation_text(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const char* fields[] = {"Q", "GF(2)", "GF(3)", "GF(5)"};
  const int f = pick(0, 3);
  const int nv = pick(1, 3);
  const int na = pick(1, 3);
  std::vector<Arr> arrows;
  for (int i = 0; i < na; ++i) arrows.push_back({pick(0, nv - 1), pick(0, nv - 1)});

  std::ostringstream out;
  out << "field " << fields[f] << "\nquiver {\n ";
  for (int v = 0; v < nv; ++v) out << " v" << v;
  out << "\n";
  for (int i = 0; i < na; ++i) out << "  a" << i << ": v" << arrows[i].s << " -> v" << arrows[i].t << "\n";
  out << "}\nrelations {\n";

  std::map<std::pair<int, int>, std::vector<std::vector<int>>> len2;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      if (arrows[i].t != arrows[j].s) continue;
      len2[{arrows[i].s, arrows[j].t}].push_back({i, j});
      for (int l = 0; l < na; ++l) {
        if (arrows[j].t == arrows[l].s) out << "  " << path_text({i, j, l}) << "\n";
      }
    }
  }
  const std::vector<std::string> coeffs = f == 1 ? std::vector<std::string>{"1"}
                                                 : std::vector<std::string>{"1", "-1", "2"};
  for (auto& [ends, paths] : len2) {
    std::shuffle(paths.begin(), paths.end(), rng);
    std::size_t used = 0;
    while (used < paths.size()) {
      int kind = pick(0, 3);
      if (kind == 0) break;
      if (kind == 1 || used + 1 == paths.size()) {
        out << "  " << path_text(paths[used]) << "\n";
        ++used;
        continue;
      }
      std::size_t terms = std::min<std::size_t>(paths.size() - used, kind == 3 ? 3 : 2);
      out << " ";
      for (std::size_t t = 0; t < terms; ++t) {
        const std::string& c = coeffs[pick(0, static_cast<int>(coeffs.size()) - 1)];
        if (c[0] == '-') {
          out << (t ? " - " : " -") << c.substr(1);
        } else {
          out << (t ? " + " : " ") << c;
        }
        out << "*" << path_text(paths[used + t]);
      }
      out << "\n";
      used += terms;
    }
  }
  out << "}\n";
  return out.str();
}

Presentation random_presentation(std::mt19937_64& rng) {
  Presentation p = parse_presentation(random_presentation_text(rng));
  p.name = "random";
  return p;
}

}  // namespace quiverhh::test_support
