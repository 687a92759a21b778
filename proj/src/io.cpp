#include "schubert/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "schubert/errors.hpp"

namespace schubert::io {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("not an integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  Word word = parse_int_list(text);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 1 || word[k] > rank) {
      throw InvalidInput("letter " + std::to_string(word[k]) + " at position " +
                         std::to_string(k + 1) + " is out of range 1.." + std::to_string(rank));
    }
  }
  return word;
}

NodeSet parse_node_set(std::string_view text, int rank) {
  NodeSet s;
  for (int n : parse_int_list(text)) {
    if (n < 1 || n > rank) {
      throw InvalidInput("node " + std::to_string(n) + " is out of range 1.." +
                         std::to_string(rank));
    }
    s.insert(n);
  }
  return s;
}

Weight parse_weight(std::string_view text, int rank) {
  std::vector<int> coords = parse_int_list(text);
  if (static_cast<int>(coords.size()) != rank) {
    throw InvalidInput("weight '" + std::string(text) + "' needs " + std::to_string(rank) +
                       " coordinates");
  }
  return Weight(std::move(coords));
}

std::vector<Weight> parse_battery(std::string_view text, int rank) {
  std::vector<Weight> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item == "fundamental") {
      for (int i = 1; i <= rank; ++i) out.push_back(Weight::fundamental(rank, i));
    } else if (item == "rho") {
      out.push_back(Weight::rho(rank));
    } else if (item == "2rho") {
      out.push_back(2 * Weight::rho(rank));
    } else if (!item.empty()) {
      out.push_back(parse_weight(item, rank));
    }
    pos = end + 1;
  }
  for (const Weight& w : out) {
    if (!w.is_dominant()) throw InvalidInput("battery weight " + w.to_string() + " is not dominant");
  }
  return out;
}

Json to_json(const NodeSet& s) { return Json(s.nodes()); }

Json to_json(const Weight& w) { return Json(w.coords()); }

Json to_json(const WeightPoly& f) {
  Json arr = Json::array();
  for (const auto& [w, c] : f.sorted_terms()) {
    Json t;
    t["weight"] = to_json(w);
    t["coeff"] = c;
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const std::vector<DecompositionEntry>& entries) {
  std::vector<DecompositionEntry> sorted = entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return graded_lex_less(a.mu, b.mu); });
  Json arr = Json::array();
  for (const DecompositionEntry& e : sorted) {
    Json t;
    t["mu"] = to_json(e.mu);
    t["mult"] = e.multiplicity;
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const CartanType& type, const ClassificationResult& r) {
  Json j;
  j["type"] = type.name();
  j["w_word"] = r.w_word;
  j["levi"] = to_json(r.levi);
  j["d_word"] = r.d_word;
  j["support_d"] = to_json(r.support_d);
  j["len_w"] = r.len_w;
  j["len_w0I"] = r.len_w0I;
  j["len_d"] = r.len_d;
  j["spherical"] = r.is_spherical;
  return j;
}

Json to_json(const CensusRecord& r) {
  Json j;
  j["type"] = r.type.name();
  j["w"] = r.w_word;
  j["len"] = r.length;
  j["levi"] = to_json(r.levi);
  j["d"] = r.d_word;
  j["spherical"] = r.spherical;
  return j;
}

Json to_json(const CartanType& type, const CensusSummary& s) {
  Json j;
  j["type"] = type.name();
  j["group_order"] = s.group_order;
  j["pair_count"] = s.pair_count;
  j["spherical_count"] = s.spherical_count;
  j["toric_count"] = s.toric_count;
  Json lengths = Json::array();
  for (const auto& [len, b] : s.by_length) {
    Json row;
    row["len"] = len;
    row["elements"] = b.elements;
    row["pairs"] = b.pairs;
    row["spherical"] = b.spherical;
    row["toric"] = b.toric;
    lengths.push_back(std::move(row));
  }
  j["by_length"] = std::move(lengths);
  return j;
}

Json to_json(const CrossCheckReport& r) {
  Json j;
  j["spherical_checked"] = r.spherical_checked;
  j["nonspherical_checked"] = r.nonspherical_checked;
  j["witnesses_found"] = r.witnesses_found;
  j["inconclusive"] = r.inconclusive;
  Json v = Json::array();
  for (const Violation& x : r.violations) {
    Json row;
    row["w"] = x.record.w_word;
    row["levi"] = to_json(x.record.levi);
    row["lambda"] = to_json(x.lambda);
    row["mu"] = to_json(x.witness.mu);
    row["mult"] = x.witness.multiplicity;
    v.push_back(std::move(row));
  }
  j["violations"] = std::move(v);
  return j;
}

CensusRecord census_record_from_json(const Json& j) {
  try {
    const CartanType type = CartanType::parse(j.at("type").get<std::string>());
    CensusRecord r{type, {}, 0, {}, {}, false};
    r.w_word = j.at("w").get<Word>();
    r.length = j.at("len").get<int>();
    for (int n : j.at("levi").get<std::vector<int>>()) {
      if (n < 1 || n > type.rank()) throw InvalidInput("levi node out of range");
      r.levi.insert(n);
    }
    r.d_word = j.at("d").get<Word>();
    r.spherical = j.at("spherical").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed census record: ") + e.what());
  }
}

}  // namespace schubert::io
