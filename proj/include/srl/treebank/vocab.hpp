#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace srl {

// Insertion-ordered string interner. When constructed with an unknown marker
// that marker occupies id 0 and lookups of unseen strings fall back to it.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(const std::string& unk_marker) : has_unk_(true) { add(unk_marker); }

  int add(const std::string& s) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(items_.size());
    items_.push_back(s);
    index_.emplace(s, id);
    return id;
  }

  // id of s, or the unknown id (0) when a marker was configured, else -1.
  int lookup(const std::string& s) const {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    return has_unk_ ? 0 : -1;
  }

  bool contains(const std::string& s) const { return index_.count(s) != 0; }
  const std::string& name(int id) const { return items_[id]; }
  int size() const { return static_cast<int>(items_.size()); }
  bool has_unk() const { return has_unk_; }
  const std::vector<std::string>& items() const { return items_; }

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, int> index_;
  bool has_unk_ = false;
};

}  // namespace srl
