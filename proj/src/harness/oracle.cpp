#include "agrp/autgroup.hpp"
#include "agrp/harness.hpp"
#include "../image_search.hpp"

namespace agrp {

namespace {

// Candidates for g_i start at the index of g_i itself, so equal tables
// yield the identity first.
bool search(detail::ImageSearch& s, const std::vector<Elem>& gens, int order_h) {
  if (s.depth() == s.generator_count()) return s.complete();
  const Elem start = gens[s.depth()] % order_h;
  for (int t = 0; t < order_h; ++t) {
    if (!s.push((start + t) % order_h)) continue;
    if (search(s, gens, order_h)) return true;
    s.pop();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> oracle_iso(const CayleyGroup& G, const CayleyGroup& H, std::uint64_t budget,
                                            OracleStats* stats) {
  if (G.order() != H.order()) return std::nullopt;
  const auto gens = small_generating_set(G);
  detail::ImageSearch s(G, H, gens, budget);
  std::optional<std::vector<Elem>> out;
  try {
    if (search(s, gens, H.order())) out = s.map();
  } catch (const ResourceExhausted&) {
    if (stats) *stats = {s.nodes(), gens};
    throw;
  }
  if (stats) *stats = {s.nodes(), gens};
  if (out) ensure(is_homomorphism(G, H, GroupHom{H.order(), *out}) && is_bijective(GroupHom{H.order(), *out}),
                  "oracle_iso: result is not an isomorphism");
  return out;
}

PermGroup oracle_aut(const CayleyGroup& G, std::uint64_t budget) { return aut_bruteforce(G, budget); }

}  // namespace agrp
