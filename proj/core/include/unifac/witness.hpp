#pragma once
#include <functional>
#include <string>
#include <vector>

#include "unifac/errors.hpp"

namespace unifac {

/// Ordered word of tagged group elements whose product equals a target.
/// The product is letters[0] * letters[1] * ... in the library-wide
/// left-action convention. Tags name the subgroup or class each letter
/// must belong to; `validate` re-multiplies and re-checks every tag.
template <class G>
struct Witness {
  struct Letter {
    G element;
    std::string tag;
  };

  G target;
  std::vector<Letter> letters;

  G product() const {
    G acc = target;  // only for shape; overwritten below
    bool first = true;
    for (const auto& l : letters) {
      if (first) {
        acc = l.element;
        first = false;
      } else {
        acc = acc * l.element;
      }
    }
    return acc;
  }

  bool multiplies_back() const {
    if (letters.empty()) return is_trivial(target);
    return product() == target;
  }

  /// True iff the product equals the target and every letter passes the
  /// tag predicate. Predicates receive (element, tag).
  bool validate(const std::function<bool(const G&, const std::string&)>& tag_ok) const {
    if (!multiplies_back()) return false;
    for (const auto& l : letters)
      if (!tag_ok(l.element, l.tag)) return false;
    return true;
  }

  static bool is_trivial(const G& g) { return g.is_identity(); }
};

}  // namespace unifac
