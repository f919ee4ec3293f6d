#include "legbraid/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace legbraid {

using nlohmann::json;

std::vector<CatalogRecord> parse_catalog(std::istream& in) {
  std::vector<CatalogRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("word"))
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": record must have \"name\" and \"word\"");
    CatalogRecord r;
    r.name = j.at("name").get<std::string>();
    r.word = j.at("word").get<std::string>();
    if (j.contains("strands")) r.strands = j.at("strands").get<int>();
    if (j.contains("expect")) {
      const json& e = j.at("expect");
      if (e.contains("augmentations"))
        r.expect.augmentations = e.at("augmentations").get<std::uint64_t>();
      if (e.contains("ruling_polynomial"))
        r.expect.ruling_polynomial =
            e.at("ruling_polynomial").get<std::string>();
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<CatalogRecord> parse_catalog_text(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

const std::string& default_catalog_text() {
  static const std::string text = R"(
{"name":"trefoil","word":"1 1 1","expect":{"augmentations":5,"ruling_polynomial":"z^2 + 2"}}
{"name":"torus_3_6","word":"1 2 1 2 1 2 1 2 1 2 1 2","expect":{"augmentations":1597}}
{"name":"12n_679","word":"1 1 1 2 2 1 1 2 2 2 2 2","expect":{"augmentations":1653,"ruling_polynomial":"z^10 + 10z^8 + 36z^6 + 58z^4 + 42z^2 + 11"}}
{"name":"13n_1176","word":"1 2 2 3 1 1 2 2 3 3 2 1 2","expect":{"augmentations":1653,"ruling_polynomial":"z^10 + 10z^8 + 36z^6 + 58z^4 + 42z^2 + 11"}}
{"name":"13n_981","word":"1 2 2 2 3 1 3 2 2 2 3 3 3","expect":{"augmentations":1845,"ruling_polynomial":"z^10 + 10z^8 + 36z^6 + 60z^4 + 47z^2 + 14"}}
{"name":"13n_1104","word":"1 2 2 3 1 3 1 1 2 2 2 3 1","expect":{"augmentations":1845,"ruling_polynomial":"z^10 + 10z^8 + 36z^6 + 60z^4 + 47z^2 + 14"}}
{"name":"16n_92582","word":"1 2 2 3 4 3 1 1 2 2 3 3 2 4 3 3","expect":{"augmentations":7269}}
{"name":"16n_29507","word":"1 2 2 3 1 3 4 1 2 4 2 3 3 3 4 2","expect":{"augmentations":8109}}
{"name":"torus2_p1","word":"s1^1","expect":{"augmentations":1,"ruling_polynomial":"1"}}
{"name":"torus2_p2","word":"s1^2","expect":{"augmentations":3,"ruling_polynomial":"z + z^-1"}}
{"name":"torus2_p3","word":"s1^3","expect":{"augmentations":5,"ruling_polynomial":"z^2 + 2"}}
{"name":"torus2_p4","word":"s1^4","expect":{"augmentations":11,"ruling_polynomial":"z^3 + 3z + z^-1"}}
{"name":"torus2_p5","word":"s1^5","expect":{"augmentations":21,"ruling_polynomial":"z^4 + 4z^2 + 3"}}
{"name":"torus2_p6","word":"s1^6","expect":{"augmentations":43,"ruling_polynomial":"z^5 + 5z^3 + 6z + z^-1"}}
{"name":"torus2_p7","word":"s1^7","expect":{"augmentations":85,"ruling_polynomial":"z^6 + 6z^4 + 10z^2 + 4"}}
{"name":"torus2_p8","word":"s1^8","expect":{"augmentations":171,"ruling_polynomial":"z^7 + 7z^5 + 15z^3 + 10z + z^-1"}}
{"name":"torus2_p9","word":"s1^9","expect":{"augmentations":341,"ruling_polynomial":"z^8 + 8z^6 + 21z^4 + 20z^2 + 5"}}
{"name":"torus2_p10","word":"s1^10","expect":{"augmentations":683,"ruling_polynomial":"z^9 + 9z^7 + 28z^5 + 35z^3 + 15z + z^-1"}}
{"name":"torus2_p11","word":"s1^11","expect":{"augmentations":1365,"ruling_polynomial":"z^10 + 10z^8 + 36z^6 + 56z^4 + 35z^2 + 6"}}
{"name":"torus2_p12","word":"s1^12","expect":{"augmentations":2731,"ruling_polynomial":"z^11 + 11z^9 + 45z^7 + 84z^5 + 70z^3 + 21z + z^-1"}}
)";
  return text;
}

std::vector<CatalogRecord> default_catalog() {
  return parse_catalog_text(default_catalog_text());
}

}  // namespace legbraid
