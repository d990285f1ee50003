#pragma once

#include <optional>
#include <string>
#include <vector>

namespace modinv {

struct VerificationEntry {
  std::string identity;
  int genus;
  bool pass;
  std::optional<std::string> witness;  // serialized counterexample or error
};

/// Named identity checks. Entries are emitted sorted by (identity, genus)
/// so the output does not depend on the order checks finished in.
class VerificationReport {
 public:
  void add(VerificationEntry entry) { entries_.push_back(std::move(entry)); }
  void add(std::string identity, int genus, bool pass, std::optional<std::string> witness = std::nullopt);
  void merge(const VerificationReport& other);

  void sort();
  bool all_pass() const;
  const std::vector<VerificationEntry>& entries() const { return entries_; }
  /// First failing entry after sort(), if any.
  const VerificationEntry* first_failure() const;

  /// [{"identity": ..., "genus": ..., "pass": ..., "witness": null|"..."}, ...]
  std::string to_json(int indent = 2) const;

 private:
  std::vector<VerificationEntry> entries_;
};

}  // namespace modinv
