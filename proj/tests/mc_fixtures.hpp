#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tlwb::fixtures {

struct McFixture {
  std::string name;
  std::string text;
  std::string formula;
  bool holds = true;
  std::string counterexample;
};

inline std::vector<McFixture> load_mc_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".kripke") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<McFixture> out;
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    McFixture fx{p.filename().string(), buf.str(), {}, true, {}};
    std::istringstream lines(fx.text);
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("# formula: ", 0) == 0) fx.formula = line.substr(11);
      if (line.rfind("# expect: ", 0) == 0) {
        std::istringstream v(line.substr(10));
        std::string verdict;
        v >> verdict >> fx.counterexample;
        fx.holds = verdict == "holds";
      }
    }
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace tlwb::fixtures
