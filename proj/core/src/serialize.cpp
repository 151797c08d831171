#include "regreg/serialize.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "regreg/error.hpp"

namespace regreg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

Value as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(
                                                              std::numeric_limits<Value>::max())) {
    bad(std::string(what) + " out of 64-bit range");
  }
  return j.get<Value>();
}

std::vector<Value> as_int_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Value> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

}  // namespace

Json to_json(const FiniteFn& f) {
  Json entries = Json::array();
  for (const auto& [x, v] : f.entries()) {
    Json e;
    e["x"] = std::vector<Value>(x.coords().begin(), x.coords().end());
    e["v"] = v;
    entries.push_back(std::move(e));
  }
  Json j;
  j["k"] = f.arity();
  j["entries"] = std::move(entries);
  return j;
}

FiniteFn finite_fn_from_json(const Json& j) {
  if (!j.is_object()) bad("function must be a JSON object");
  const Value k = as_int(member(j, "k"), "k");
  const Json& entries = member(j, "entries");
  if (!entries.is_array()) bad("entries must be an array");
  std::map<KTuple, Value> values;
  for (const auto& e : entries) {
    if (!e.is_object()) bad("entry must be an object");
    try {
      KTuple x(as_int_array(member(e, "x"), "x"));
      if (static_cast<Value>(x.arity()) != k) bad("entry arity differs from k");
      if (!values.emplace(std::move(x), as_int(member(e, "v"), "v")).second) {
        bad("duplicate entry");
      }
    } catch (const Error& err) {
      if (err.code() == Errc::parse_error) throw;
      bad(err.what());
    }
  }
  try {
    return FiniteFn(std::move(values));
  } catch (const Error& err) {
    bad(err.what());
  }
}

Json to_json(const RegRegReport& report) {
  Json classes = Json::object();
  for (const auto& [sig, verdict] : report.classes) {
    Json v;
    switch (verdict.kind) {
      case VerdictKind::constant_below_min:
        v["verdict"] = "constant_below_min";
        v["value"] = *verdict.value;
        break;
      case VerdictKind::geq_min:
        v["verdict"] = "geq_min";
        break;
      case VerdictKind::fail: {
        v["verdict"] = "fail";
        Json w = Json::array();
        for (const auto& x : verdict.witness) {
          w.push_back(std::vector<Value>(x.coords().begin(), x.coords().end()));
        }
        v["witness"] = std::move(w);
        break;
      }
    }
    classes[sig.to_string()] = std::move(v);
  }
  Json j;
  j["is_regular"] = report.is_regular;
  j["regressive_value_count"] = report.regressive_value_count;
  j["classes"] = std::move(classes);
  return j;
}

Json to_json(const StructuredInstance& inst) {
  if (inst.zero_kept) {
    throw Error(Errc::invariant_violation, "an instance with a kept zero has no file form");
  }
  Json j;
  j["k"] = inst.k;
  j["p"] = inst.p;
  j["t"] = inst.t;
  j["e0"] = inst.e0;
  j["negatives"] = inst.negatives;
  j["small_positives"] = inst.small_positives;
  j["large_positives"] = inst.large_positives;
  j["dropped_zeros"] = inst.dropped_zeros;
  return j;
}

StructuredInstance instance_from_json(const Json& j) {
  static constexpr std::array<const char*, 8> kKeys = {
      "k", "p", "t", "e0", "negatives", "small_positives", "large_positives", "dropped_zeros"};
  if (!j.is_object()) bad("instance must be a JSON object");
  for (const auto& item : j.items()) {
    if (std::find_if(kKeys.begin(), kKeys.end(),
                     [&](const char* k) { return item.key() == k; }) == kKeys.end()) {
      bad("unexpected key '" + item.key() + "'");
    }
  }
  StructuredInstance inst;
  const Value k = as_int(member(j, "k"), "k");
  const Value p = as_int(member(j, "p"), "p");
  const Value t = as_int(member(j, "t"), "t");
  const Value dz = as_int(member(j, "dropped_zeros"), "dropped_zeros");
  if (k < 2 || k > 8 || p < 2 || t < 1 || t > 64 || dz < 0) {
    throw Error(Errc::invariant_violation, "instance parameters out of range");
  }
  inst.k = static_cast<int>(k);
  inst.p = static_cast<std::size_t>(p);
  inst.t = static_cast<int>(t);
  inst.e0 = as_int(member(j, "e0"), "e0");
  inst.negatives = as_int_array(member(j, "negatives"), "negatives");
  inst.small_positives = as_int_array(member(j, "small_positives"), "small_positives");
  inst.large_positives = as_int_array(member(j, "large_positives"), "large_positives");
  inst.dropped_zeros = static_cast<std::size_t>(dz);
  inst.validate();
  return inst;
}

std::string serialize_instance(const StructuredInstance& inst) {
  return to_json(inst).dump() + "\n";
}

StructuredInstance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
  return instance_from_json(j);
}

Json to_json(const SolveResult& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["sums_enumerated"] = r.stats.sums_enumerated;
  j["comparisons"] = r.stats.comparisons;
  return j;
}

}  // namespace regreg
