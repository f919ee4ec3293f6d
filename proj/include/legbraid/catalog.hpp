#pragma once

// Line-delimited JSON catalogs of braid words with optional expectations,
// plus the shipped default catalog.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace legbraid {

struct CatalogExpectation {
  std::optional<std::uint64_t> augmentations;
  std::optional<std::string> ruling_polynomial;  // canonical text form
};

struct CatalogRecord {
  std::string name;
  std::string word;
  std::optional<int> strands;
  CatalogExpectation expect;
};

std::vector<CatalogRecord> parse_catalog(std::istream& in);
std::vector<CatalogRecord> parse_catalog_text(const std::string& text);

// The built-in catalog: the published example words with their augmentation
// counts and ruling polynomials, and the (p,2) torus family for p <= 12.
const std::string& default_catalog_text();
std::vector<CatalogRecord> default_catalog();

}  // namespace legbraid
