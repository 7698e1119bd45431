#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mwrc/errors.hpp"
#include "mwrc/ordering.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/snr_profile.hpp"

namespace mwrc {

// Ordering interchange document: {"n": ..., "pairs": [[a,b],...]} with an
// optional "labels" array naming the users. Pairs are 1-based user indices in
// the caller's numbering. serialize(parse(serialize(x))) is byte-identical.
struct OrderingDocument {
  int n = 0;
  Ordering ordering;
  std::vector<std::string> labels;  // empty means the field is absent

  friend bool operator==(const OrderingDocument&, const OrderingDocument&) =
      default;
};

[[nodiscard]] inline OrderingDocument parse_ordering_json(
    const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("ordering document is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("pairs"))
    throw DomainError("ordering document needs fields \"n\" and \"pairs\"");
  if (!doc["n"].is_number_integer())
    throw DomainError("field \"n\" must be an integer");
  OrderingDocument out;
  out.n = doc["n"].get<int>();
  if (out.n < 2) throw DomainError("an ordering needs at least two users");
  if (!doc["pairs"].is_array() || doc["pairs"].empty())
    throw DomainError("field \"pairs\" must be a non-empty array");
  for (const auto& entry : doc["pairs"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw DomainError("each pair must be a 2-element integer array");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    if (a < 1 || a > out.n || b < 1 || b > out.n)
      throw DomainError("pair index out of range 1..n");
    if (a == b) throw DomainError("a user cannot be paired with itself");
    out.ordering.pairs.push_back({a, b});
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() ||
        static_cast<int>(doc["labels"].size()) != out.n)
      throw DomainError("field \"labels\" must be an array of n strings");
    for (const auto& label : doc["labels"]) {
      if (!label.is_string())
        throw DomainError("field \"labels\" must be an array of n strings");
      out.labels.push_back(label.get<std::string>());
    }
  }
  return out;
}

[[nodiscard]] inline std::string ordering_to_json(const OrderingDocument& doc) {
  nlohmann::ordered_json out;
  out["n"] = doc.n;
  out["pairs"] = nlohmann::ordered_json::array();
  for (UserPair p : doc.ordering.pairs)
    out["pairs"].push_back(nlohmann::ordered_json::array({p.a, p.b}));
  if (!doc.labels.empty()) out["labels"] = doc.labels;
  return out.dump(2) + "\n";
}

// Rate report keyed back to the caller's user numbering: per_user[k] is the
// rate of the user whose SNR arrived k-th.
[[nodiscard]] inline nlohmann::ordered_json rate_report_to_json(
    const RateReport& report, const SnrProfile& profile) {
  std::vector<double> by_original(report.per_user.size(), 0.0);
  for (int i = 1; i <= profile.size(); ++i)
    by_original[static_cast<std::size_t>(profile.original_label(i)) - 1] =
        report.per_user[static_cast<std::size_t>(i) - 1];
  nlohmann::ordered_json out;
  out["per_user"] = by_original;
  out["common_rate"] = report.common_rate;
  out["sum_rate"] = report.sum_rate;
  out["bound_kind"] = report.bound_kind == BoundKind::Exact ? "exact" : "weak";
  out["m"] = report.m;
  return out;
}

}  // namespace mwrc
