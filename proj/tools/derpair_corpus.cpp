// Writes the acceptance corpus, or with --check verifies that the checked-in
// files match what the seeds produce.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "corpus.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derpair_corpus: regenerate or verify the acceptance corpus"};
  std::string dir;
  bool check = false;
  app.add_option("dir", dir, "Corpus directory")->required();
  app.add_flag("--check", check, "Compare instead of writing");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<fs::path, std::string>> files;
  for (const auto& suite : derpair::corpus::suite_names()) {
    files.emplace_back(derpair::corpus::bundle_path(dir, suite),
                       derpair::corpus::render(derpair::corpus::build(suite)));
  }
  files.emplace_back(fs::path(dir) / "seeds.json", derpair::corpus::render_seeds());

  int stale = 0;
  if (!check) fs::create_directories(dir);
  for (const auto& [path, text] : files) {
    if (check) {
      if (!fs::exists(path) || slurp(path) != text) {
        std::cerr << path.string() << ": differs from its seed\n";
        ++stale;
      }
    } else {
      std::ofstream(path, std::ios::binary) << text;
      std::cout << path.string() << "\n";
    }
  }
  if (check) std::cout << (stale ? "corpus: stale\n" : "corpus: reproducible\n");
  return stale ? 1 : 0;
}
