#include "fairdiv/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fairdiv {

namespace {

using nlohmann::ordered_json;

ordered_json int_to_json(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();  // too wide for JSON numbers, keep it lossless
}

Int int_from_json(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception& e) {
      raise(Errc::parse_error, std::string(what) + ": bad integer string: " + e.what());
    }
  }
  raise(Errc::parse_error, std::string(what) + ": expected an integer or integer string");
}

ordered_json rat_to_json(const Rat& q) {
  return ordered_json::array({int_to_json(boost::multiprecision::numerator(q)),
                              int_to_json(boost::multiprecision::denominator(q))});
}

Rat rat_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    raise(Errc::parse_error, "rational must be a [num, den] pair");
  const Int num = int_from_json(j[0], "numerator");
  const Int den = int_from_json(j[1], "denominator");
  if (den == 0) raise(Errc::parse_error, "rational with zero denominator");
  return Rat(num, den);
}

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

int int_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    raise(Errc::parse_error, std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

InstanceFile parse_instance_json(const std::string& text) {
  const ordered_json j = parse_text(text);
  InstanceFile out;
  out.instance.n = int_field(j, "n");
  out.instance.m = int_field(j, "m");
  out.instance.k = int_field(j, "k");
  if (!j.contains("rankings") || !j["rankings"].is_array())
    raise(Errc::parse_error, "missing 'rankings' array");
  for (const auto& row : j["rankings"]) {
    if (!row.is_array()) raise(Errc::parse_error, "each ranking must be an array");
    std::vector<int> r;
    for (const auto& g : row) {
      if (!g.is_number_integer()) raise(Errc::parse_error, "good ids must be integers");
      r.push_back(g.get<int>());
    }
    out.instance.rankings.push_back(std::move(r));
  }
  validate_instance(out.instance);

  if (j.contains("valuations")) {
    if (!j["valuations"].is_array()) raise(Errc::parse_error, "'valuations' must be an array");
    ValuationProfile v;
    for (const auto& row : j["valuations"]) {
      if (!row.is_array()) raise(Errc::parse_error, "each valuation row must be an array");
      std::vector<Rat> r;
      for (const auto& entry : row) r.push_back(rat_from_json(entry));
      v.values.push_back(std::move(r));
    }
    validate_profile(v);
    if (!is_consistent(v, out.instance))
      raise(Errc::invalid_profile, "valuations are not consistent with the rankings");
    out.valuations = std::move(v);
  }
  return out;
}

std::string instance_json(const Instance& inst, const std::optional<ValuationProfile>& valuations) {
  ordered_json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["k"] = inst.k;
  j["rankings"] = inst.rankings;
  if (valuations) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : valuations->values) {
      ordered_json r = ordered_json::array();
      for (const Rat& x : row) r.push_back(rat_to_json(x));
      rows.push_back(std::move(r));
    }
    j["valuations"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

Allocation parse_allocation_json(const std::string& text, int n, int m) {
  const ordered_json j = parse_text(text);
  if (!j.contains("bundles") || !j["bundles"].is_array())
    raise(Errc::parse_error, "missing 'bundles' array");
  Allocation a;
  for (const auto& row : j["bundles"]) {
    if (!row.is_array()) raise(Errc::parse_error, "each bundle must be an array");
    std::vector<int> b;
    for (const auto& g : row) {
      if (!g.is_number_integer()) raise(Errc::parse_error, "good ids must be integers");
      b.push_back(g.get<int>());
    }
    std::sort(b.begin(), b.end());
    a.bundles.push_back(std::move(b));
  }
  validate_allocation(a, n, m);
  return a;
}

std::string allocation_json(const Allocation& a) {
  ordered_json j;
  j["bundles"] = a.bundles;
  return j.dump(2) + "\n";
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

InstanceFile load_instance_file(const std::string& path) {
  return parse_instance_json(slurp(path));
}

Allocation load_allocation_file(const std::string& path, int n, int m) {
  return parse_allocation_json(slurp(path), n, m);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) raise(Errc::parse_error, "cannot write '" + path + "'");
  out << text;
}

}  // namespace fairdiv
