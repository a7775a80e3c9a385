// Depth-first extension of generator images to an injective homomorphism.
#pragma once

#include <cstdint>
#include <vector>

#include "agrp/cayley.hpp"
#include "agrp/common.hpp"

namespace agrp::detail {

// Partial maps on ⟨g_1..g_i⟩ extended one generator at a time.
class ImageSearch {
 public:
  ImageSearch(const CayleyGroup& G, const CayleyGroup& H, std::vector<Elem> gens, std::uint64_t budget)
      : G_(G), H_(H), gens_(std::move(gens)), budget_(budget), f_(G.order(), -1), used_(H.order(), 0) {
    f_[0] = 0;
    used_[0] = 1;
    defined_.push_back(0);
  }

  int depth() const { return static_cast<int>(stack_.size()); }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Elem>& map() const { return f_; }

  /// Assigns the next generator's image; false (and nothing changed) when
  /// the extension is not an injective homomorphism.
  bool push(Elem v) {
    if (++nodes_ > budget_) throw ResourceExhausted("brute-force search exceeded its node budget");
    const int i = depth();
    if (H_.elem_order(v) != G_.elem_order(gens_[i])) return false;
    img_.push_back(v);
    stack_.push_back(defined_.size());
    const std::size_t mark = defined_.size();
    bool ok = true;
    for (std::size_t k = 0; k < defined_.size() && ok; ++k) {
      const Elem x = defined_[k];
      for (int j = 0; j <= i; ++j) {
        const Elem y = G_.mul(x, gens_[j]);
        const Elem w = H_.mul(f_[x], img_[j]);
        if (f_[y] < 0) {
          if (used_[w]) {
            ok = false;
            break;
          }
          f_[y] = w;
          used_[w] = 1;
          defined_.push_back(y);
        } else if (f_[y] != w) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      undo(mark);
      stack_.pop_back();
      img_.pop_back();
    }
    return ok;
  }

  void pop() {
    undo(stack_.back());
    stack_.pop_back();
    img_.pop_back();
  }

  bool complete() const { return static_cast<int>(defined_.size()) == G_.order(); }
  int generator_count() const { return static_cast<int>(gens_.size()); }

 private:
  void undo(std::size_t mark) {
    while (defined_.size() > mark) {
      used_[f_[defined_.back()]] = 0;
      f_[defined_.back()] = -1;
      defined_.pop_back();
    }
  }

  const CayleyGroup& G_;
  const CayleyGroup& H_;
  std::vector<Elem> gens_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Elem> f_;
  std::vector<char> used_;
  std::vector<Elem> defined_;
  std::vector<std::size_t> stack_;
  std::vector<Elem> img_;
};

}  // namespace agrp::detail
