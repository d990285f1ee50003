#include "modinv/report.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace modinv {

void VerificationReport::add(std::string identity, int genus, bool pass, std::optional<std::string> witness) {
  entries_.push_back({std::move(identity), genus, pass, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void VerificationReport::sort() {
  std::stable_sort(entries_.begin(), entries_.end(), [](const VerificationEntry& a, const VerificationEntry& b) {
    return std::tie(a.identity, a.genus) < std::tie(b.identity, b.genus);
  });
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.pass; });
}

const VerificationEntry* VerificationReport::first_failure() const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.pass; });
  return it == entries_.end() ? nullptr : &*it;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json item;
    item["identity"] = e.identity;
    item["genus"] = e.genus;
    item["pass"] = e.pass;
    item["witness"] = e.witness ? nlohmann::ordered_json(*e.witness) : nlohmann::ordered_json(nullptr);
    out.push_back(std::move(item));
  }
  return out.dump(indent);
}

}  // namespace modinv
