#include "optree/io/serialize.hpp"

#include <json.hpp>

#include "optree/error.hpp"
#include "optree/io/grammar.hpp"

namespace optree {

namespace {

using Json = nlohmann::ordered_json;

std::string forest_text(const Forest& f, const KeyPrinter& p) {
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += "; ";
    out += p(f.keys()[i]);
  }
  return out;
}

Json forest_json(const Forest& f, const KeyPrinter& p) {
  Json arr = Json::array();
  for (const auto& k : f.keys()) arr.push_back(p(k));
  return arr;
}

std::vector<const Forest*> factors(const Forest& f) { return {&f}; }
std::vector<const Forest*> factors(const Tensor2& t) {
  return {&t.left, &t.right};
}
std::vector<const Forest*> factors(const Tensor3& t) {
  return {&t.first, &t.second, &t.third};
}

template <typename Basis>
std::string serialize_impl(const LinComb<Basis>& x, const KeyPrinter& p,
                           Format format, const char* basis) {
  if (format == Format::json) {
    Json doc;
    doc["basis"] = basis;
    doc["terms"] = Json::array();
    for (const auto& [b, c] : x.terms()) {
      Json term;
      term["coeff"]["num"] = numerator(c).str();
      term["coeff"]["den"] = denominator(c).str();
      term["factors"] = Json::array();
      for (const Forest* f : factors(b)) {
        term["factors"].push_back(forest_json(*f, p));
      }
      doc["terms"].push_back(std::move(term));
    }
    return doc.dump() + "\n";
  }
  if (x.is_zero()) return "0\n";
  std::string out;
  for (const auto& [b, c] : x.terms()) {
    out += c.str();
    out += " · ";
    bool first = true;
    for (const Forest* f : factors(b)) {
      if (!first) out += " ⊗ ";
      first = false;
      out += forest_text(*f, p);
    }
    out += '\n';
  }
  return out;
}

Forest forest_from_json(const Json& arr, const OperadPtr& op) {
  std::vector<CanonicalKey> keys;
  for (const auto& t : arr) {
    keys.push_back(canonical_key(parse_tree(t.get<std::string>(), op)));
  }
  return Forest(std::move(keys));
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  return std::nullopt;
}

KeyPrinter tree_printer(const OperadPtr& op) {
  return [op](const CanonicalKey& k) { return print_key(op, k); };
}

std::string serialize_lincomb(const LinComb<Forest>& x, const KeyPrinter& p,
                              Format format) {
  return serialize_impl(x, p, format, "forest");
}

std::string serialize_lincomb(const LinComb<Tensor2>& x, const KeyPrinter& p,
                              Format format) {
  return serialize_impl(x, p, format, "tensor2");
}

std::string serialize_lincomb(const LinComb<Tensor3>& x, const KeyPrinter& p,
                              Format format) {
  return serialize_impl(x, p, format, "tensor3");
}

LinComb<Tensor2> parse_tensor2_json(std::string_view text, const OperadPtr& op) {
  LinComb<Tensor2> out;
  try {
    const Json doc = Json::parse(text);
    if (doc.value("basis", std::string("tensor2")) != "tensor2") {
      throw Error(ErrorCode::io_error, "expected a tensor2 combination");
    }
    for (const auto& term : doc.at("terms")) {
      const Rational num(term.at("coeff").at("num").get<std::string>());
      const Rational den(term.at("coeff").at("den").get<std::string>());
      const auto& fs = term.at("factors");
      if (fs.size() != 2) {
        throw Error(ErrorCode::io_error, "a tensor2 term has two factors");
      }
      out.add({forest_from_json(fs[0], op), forest_from_json(fs[1], op)},
              num / den);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io_error, e.what());
  }
  return out;
}

}  // namespace optree
