#include "nilary/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilary/ring_spec.hpp"

namespace nilary {

std::vector<std::string> Corpus::labels() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.spec);
  return out;
}

std::vector<std::string> builtin_specs() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 30; ++n) specs.push_back("Zn:" + std::to_string(n));
  for (int a = 2; a <= 6; ++a)
    for (int b = a; b <= 6; ++b) specs.push_back("dsum(Zn:" + std::to_string(a) + ",Zn:" + std::to_string(b) + ")");
  for (int n = 1; n <= 8; ++n) specs.push_back("zmul:" + std::to_string(n));
  specs.insert(specs.end(), {"M:2:Zn:2", "T:2:Zn:2", "T:2:Zn:3", "quot(Zn:12,gen(4))", "quot(Zn:12,gen(6))"});
  return specs;
}

Corpus build_builtin_corpus(const Caps& caps) {
  Corpus corpus;
  corpus.caps = caps;
  for (const auto& spec : builtin_specs()) {
    try {
      corpus.entries.push_back({spec, std::make_shared<const Ring>(parse_ring_spec(spec, caps))});
    } catch (const SizeCapError&) {
    }
  }
  return corpus;
}

Corpus build_corpus(const std::vector<std::string>& specs, const Caps& caps) {
  Corpus corpus;
  corpus.caps = caps;
  for (const auto& spec : specs)
    corpus.entries.push_back({spec, std::make_shared<const Ring>(parse_ring_spec(spec, caps))});
  return corpus;
}

Corpus parse_corpus_json(const std::string& text, Caps defaults) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("corpus file: invalid JSON: ") + e.what());
  }
  const nlohmann::json* rings = &doc;
  if (doc.is_object()) {
    if (!doc.contains("rings")) throw Error("corpus file: missing \"rings\"");
    rings = &doc["rings"];
    auto cap = [&](const char* key, std::size_t& field) {
      if (!doc.contains(key)) return;
      if (!doc[key].is_number_unsigned()) throw Error(std::string("corpus file: \"") + key + "\" must be a natural number");
      field = doc[key].get<std::size_t>();
    };
    cap("max_order", defaults.max_order);
    cap("lattice_order", defaults.lattice_order);
    cap("lattice_count", defaults.lattice_count);
  }
  if (!rings->is_array()) throw Error("corpus file: \"rings\" must be a list of ring specs");
  std::vector<std::string> specs;
  for (const auto& item : *rings) {
    if (!item.is_string()) throw Error("corpus file: ring specs must be strings");
    specs.push_back(item.get<std::string>());
  }
  return build_corpus(specs, defaults);
}

Corpus load_corpus_file(const std::string& path, Caps defaults) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_json(buf.str(), defaults);
}

}  // namespace nilary
