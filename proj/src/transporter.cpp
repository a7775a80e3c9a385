#include "agrp/transporter.hpp"

#include <algorithm>
#include <unordered_map>

namespace agrp {

std::vector<int> GroupString::preimage(int letter) const {
  std::vector<int> out;
  for (int x = 0; x < domain(); ++x)
    if (letters[x] == letter) out.push_back(x);
  return out;
}

GroupString GroupString::act(const Perm& pi) const {
  GroupString r{std::vector<int>(letters.size()), alphabet};
  for (int x = 0; x < domain(); ++x) r.letters[pi[x]] = letters[x];
  return r;
}

namespace {

bool distinct_in_range(std::span<const int> s, int n) {
  std::vector<char> seen(n, 0);
  for (int x : s) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

Coset subset_transporter(const Coset& C, std::span<const int> A, std::span<const int> B, int cap) {
  const int n = C.subgroup.degree();
  require(distinct_in_range(A, n) && distinct_in_range(B, n), "subset_transporter: bad point set");
  if (A.size() != B.size() || C.empty) return Coset::none(n);
  const int k = static_cast<int>(A.size());
  if (k > cap || k > 31) throw ResourceExhausted("subset_transporter: |A| exceeds the subset cap");
  if (k == 0) return C;

  // layer i: C-subsets of B of size i (as bitmasks over positions in B)
  std::unordered_map<std::uint32_t, Coset> layer;
  layer.emplace(0u, C);
  for (int i = 0; i < k; ++i) {
    const int x = A[i];
    std::unordered_map<std::uint32_t, Coset> next;
    std::vector<std::uint32_t> masks;
    for (const auto& [mask, c] : layer) {
      if (c.empty) continue;
      for (int j = 0; j < k; ++j)
        if (!(mask >> j & 1)) masks.push_back(mask | (1u << j));
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (std::uint32_t m : masks) {
      std::vector<Coset> parts;
      for (int j = 0; j < k; ++j) {
        if (!(m >> j & 1)) continue;
        auto it = layer.find(m & ~(1u << j));
        if (it == layer.end() || it->second.empty) continue;
        Coset t = point_transporter(it->second, x, B[j]);
        if (!t.empty) parts.push_back(std::move(t));
      }
      if (!parts.empty()) next.emplace(m, union_of_cosets(parts));
    }
    layer = std::move(next);
  }
  auto it = layer.find((1u << k) - 1u);
  return it == layer.end() ? Coset::none(n) : it->second;
}

Coset subset_transporter(const PermGroup& P, std::span<const int> A, std::span<const int> B, int cap) {
  return subset_transporter(Coset::of(P), A, B, cap);
}

Coset string_isomorphisms(const Coset& C, const GroupString& f1, const GroupString& f2, int cap) {
  require(f1.alphabet == f2.alphabet, "string_isomorphisms: alphabet mismatch");
  require(f1.domain() == f2.domain() && f1.domain() == C.subgroup.degree(),
          "string_isomorphisms: domain mismatch");
  for (const auto* f : {&f1, &f2})
    for (int l : f->letters) require(l >= 1 && l <= f->alphabet, "string_isomorphisms: letter out of range");
  Coset cur = C;
  for (int i = 1; i < f1.alphabet && !cur.empty; ++i) {
    auto a = f1.preimage(i), b = f2.preimage(i);
    cur = subset_transporter(cur, a, b, cap);
  }
  return cur;
}

Coset string_isomorphisms(const PermGroup& P, const GroupString& f1, const GroupString& f2, int cap) {
  return string_isomorphisms(Coset::of(P), f1, f2, cap);
}

}  // namespace agrp
