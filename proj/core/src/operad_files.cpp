#include "optree/io/operad_files.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "optree/error.hpp"

namespace optree {

namespace {

using Json = nlohmann::json;

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::io_error, std::string(what) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::malformed_table, std::string(what) + ": " + e.what());
  }
}

std::size_t element_index(const std::vector<std::string>& elements,
                          const std::string& name) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == name) return i;
  }
  throw Error(ErrorCode::malformed_table, "unknown element '" + name + "'");
}

}  // namespace

FiniteMonoid parse_monoid_json(std::string_view text) {
  const Json doc = parse_json(text, "monoid file");
  return guarded("monoid file", [&] {
    auto elements = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : doc.at("table")) {
      auto& out = table.emplace_back();
      for (const auto& cell : row) {
        out.push_back(element_index(elements, cell.get<std::string>()));
      }
    }
    return make_monoid(std::move(elements), std::move(table));
  });
}

FinitePoset parse_poset_json(std::string_view text) {
  const Json doc = parse_json(text, "poset file");
  return guarded("poset file", [&] {
    auto elements = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> le;
    for (const auto& pair : doc.at("le")) {
      if (pair.size() != 2) {
        throw Error(ErrorCode::malformed_table, "'le' entries are pairs");
      }
      le.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return make_poset(std::move(elements), le);
  });
}

Signature parse_signature_json(std::string_view text) {
  const Json doc = parse_json(text, "signature file");
  return guarded("signature file", [&] {
    Signature sig;
    sig.colours = doc.at("colours").get<std::vector<Colour>>();
    for (const auto& g : doc.at("ops")) {
      sig.generators.push_back({g.at("name").get<std::string>(),
                                g.at("out").get<Colour>(),
                                g.at("in").get<std::vector<Colour>>()});
    }
    return sig;
  });
}

FiniteMonoid load_monoid(const std::string& path) {
  // "z3" and a missing "z3.json" both name Z/3.
  std::string_view stem = path;
  if (stem.ends_with(".json")) stem.remove_suffix(5);
  if (!std::filesystem::exists(path) && stem.size() > 1 &&
      (stem[0] == 'z' || stem[0] == 'Z') &&
      stem.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    const std::size_t n = std::stoul(std::string(stem.substr(1)));
    if (n >= 1) return cyclic_monoid(n);
  }
  return parse_monoid_json(read_file(path));
}

OperadPtr make_operad(std::string_view d) {
  if (d == "id" || d == "identity") return identity_operad();
  if (d == "freemonoid") return free_monoid_operad();
  if (d == "terminal") return terminal_operad(false);
  if (d == "terminal-reduced") return terminal_operad(true);
  if (d == "poset:nat") return naturals_poset_operad();
  const auto arg = [&](std::string_view prefix) {
    return std::string(d.substr(prefix.size()));
  };
  if (d.starts_with("monoid:")) return monoid_operad(load_monoid(arg("monoid:")));
  if (d.starts_with("poset:")) {
    return poset_operad(parse_poset_json(read_file(arg("poset:"))));
  }
  if (d.starts_with("free:")) {
    return free_operad(parse_signature_json(read_file(arg("free:"))));
  }
  if (d.starts_with("bd:")) return bd_operad(make_operad(d.substr(3)));
  if (d.starts_with("bd(") && d.ends_with(")")) {
    return bd_operad(make_operad(d.substr(3, d.size() - 4)));
  }
  throw Error(ErrorCode::unsupported_nesting,
              "unknown operad descriptor '" + std::string(d) + "'");
}

}  // namespace optree
