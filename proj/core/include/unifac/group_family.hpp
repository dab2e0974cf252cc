#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "unifac/errors.hpp"

namespace unifac::cover {

/// One finite group of a family window. Elements are opaque uint64 keys;
/// `element_at` enumerates them lazily in a fixed canonical order, so very
/// large permutation groups work without ever being materialized.
class GroupRealization {
public:
  virtual ~GroupRealization() = default;
  virtual uint64_t size() const = 0;
  virtual uint64_t identity() const = 0;
  virtual uint64_t mul(uint64_t a, uint64_t b) const = 0;
  virtual uint64_t inv(uint64_t a) const = 0;
  virtual uint64_t element_at(uint64_t index) const = 0;
  virtual std::string print(uint64_t a) const = 0;
  virtual uint64_t parse(const std::string& text) const = 0;
  virtual std::string descriptor() const = 0;
};

/// Descriptors: "sym:N", "alt:N", "cyclic:N", "sl:d,q".
std::shared_ptr<const GroupRealization> make_group(const std::string& descriptor);

struct GroupFamily {
  std::vector<std::shared_ptr<const GroupRealization>> groups;
  uint32_t window() const { return static_cast<uint32_t>(groups.size()); }
};

GroupFamily make_family(const std::vector<std::string>& descriptors);

}  // namespace unifac::cover
