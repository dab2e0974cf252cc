#pragma once
#include <optional>

#include "unifac/group_family.hpp"

namespace unifac::cover {

/// Per-index finite symmetric subsets of a family window: nonempty, containing
/// the identity and closed under inverse. Sets hold sorted element keys.
struct Cover {
  std::vector<std::vector<uint64_t>> sets;
};

/// f(n) bound for f-covers; the default is 2^(n+2).
struct BoundFunction {
  enum class Kind { exp2_plus2, constant } kind = Kind::exp2_plus2;
  uint64_t c = 0;
  uint64_t operator()(uint32_t n) const {
    return kind == Kind::exp2_plus2 ? (uint64_t(1) << (n + 2)) : c;
  }
  std::string description() const {
    return kind == Kind::exp2_plus2 ? "2^(n+2)" : std::to_string(c);
  }
};

void validate_cover(const GroupFamily& fam, const Cover& c);
bool is_f_cover(const GroupFamily& fam, const Cover& c, const BoundFunction& f);

bool covers(const GroupFamily& fam, const Cover& c, const std::vector<uint64_t>& g);

/// (c1*c2)(n) = { ab, (ab)^-1 : a in c1(n), b in c2(n) }.
Cover star(const GroupFamily& fam, const Cover& c1, const Cover& c2);

/// All distinct values of *-expressions over C with at most `depth` stars,
/// deduplicated by value. Throws DepthExplosion past the configured cap.
std::vector<Cover> closure_enumerate(const GroupFamily& fam, const std::vector<Cover>& C,
                                     uint32_t depth);

/// True iff some cover in the depth-bounded closure covers g.
bool covered_subgroup_contains(const GroupFamily& fam, const std::vector<Cover>& C,
                               uint32_t depth, const std::vector<uint64_t>& g);

struct EscapeResult {
  std::vector<uint64_t> g;
  uint64_t checked_covers = 0;  // scheduled (distinct) closure covers
};

/// Diagonal escape: schedules the depth-bounded closure by size then shape,
/// assigns every scheduled cover a window index with room left, and picks g(n)
/// as the least element outside everything assigned to index n. The result is
/// covered by no scheduled cover. Preconditions: the inputs are f-covers and
/// every window index satisfies |G_n| > 2^n f(n)^(n+1).
EscapeResult escape_element(const GroupFamily& fam, const std::vector<Cover>& C,
                            uint32_t depth, const BoundFunction& f);

// JSON text formats: {"window": [...], "sets": [[...], ...]} for one cover,
// {"window": [...], "covers": [[[...], ...], ...]} for a batch.
std::string cover_to_json(const GroupFamily& fam, const Cover& c);
std::pair<GroupFamily, std::vector<Cover>> covers_from_json(const std::string& text);

}  // namespace unifac::cover
