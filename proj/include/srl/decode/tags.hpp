#pragma once

#include <string>
#include <vector>

#include "srl/errors.hpp"

namespace srl {

// Fixed numbering of the BIO tag set over a role list: tag 0 is O, then B-r
// and I-r per role in list order. This order is also the decoding tie-break
// order (lower index preferred).
class TagLayout {
 public:
  TagLayout() = default;
  explicit TagLayout(std::vector<std::string> roles) : roles_(std::move(roles)) {}

  int num_roles() const { return static_cast<int>(roles_.size()); }
  int num_tags() const { return 1 + 2 * num_roles(); }

  static constexpr int kOutside = 0;
  int b_tag(int role) const { return 1 + 2 * role; }
  int i_tag(int role) const { return 2 + 2 * role; }

  bool is_b(int tag) const { return tag > 0 && tag % 2 == 1; }
  bool is_i(int tag) const { return tag > 0 && tag % 2 == 0; }
  int role_of(int tag) const { return (tag - 1) / 2; }

  const std::string& role_name(int role) const { return roles_[role]; }
  const std::vector<std::string>& roles() const { return roles_; }

  std::string tag_name(int tag) const {
    if (tag == kOutside) return "O";
    return (is_b(tag) ? "B-" : "I-") + roles_[role_of(tag)];
  }

  int tag_id(const std::string& name) const {
    if (name == "O") return kOutside;
    if (name.size() < 3 || name[1] != '-' || (name[0] != 'B' && name[0] != 'I'))
      throw DataError("TagLayout: bad tag name '" + name + "'");
    const std::string role = name.substr(2);
    for (int r = 0; r < num_roles(); ++r)
      if (roles_[r] == role) return name[0] == 'B' ? b_tag(r) : i_tag(r);
    throw DataError("TagLayout: unknown role in tag '" + name + "'");
  }

 private:
  std::vector<std::string> roles_;
};

}  // namespace srl
