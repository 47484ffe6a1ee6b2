#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "derpair/io.hpp"
#include "derpair/presentation.hpp"

// Checked-in randomized inputs for the acceptance suite. Every bundle is a pure
// function of its seed, so the files can be regenerated and compared.
namespace derpair::corpus {

struct Item {
  std::string id;
  std::string origin;  // valid | corrupted | random
  Presentation presentation;
  std::string tag;     // flavor for complexes, construction for constructions
  Json extra;          // linear-combine coefficients, when present
};

struct Bundle {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Item> items;
};

/// Suites in file order: bilinear, maurer-cartan, complexes, lieder, compatible-lieder, constructions.
std::vector<std::string> suite_names();
std::uint64_t suite_seed(const std::string& suite);
Bundle build(const std::string& suite);

/// Seeds of the inline generators (random cochains), keyed by criterion.
std::uint64_t inline_seed(int criterion);

/// One item per line, so diffs stay readable.
std::string render(const Bundle& b);
Bundle parse(const Json& doc);
std::string render_seeds();

std::filesystem::path bundle_path(const std::filesystem::path& dir, const std::string& suite);
Bundle load(const std::filesystem::path& dir, const std::string& suite);

}  // namespace derpair::corpus
