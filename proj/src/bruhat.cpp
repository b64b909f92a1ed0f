#include "weylpol/bruhat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylpol {

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int l = 0;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++l;
  return l;
}

Permutation Permutation::swapped(int i, int j) const {
  Permutation q = *this;
  std::swap(q.p[i - 1], q.p[j - 1]);
  return q;
}

int SignatureTable::sign(const Permutation& from, const Permutation& to) const {
  auto it = signs.find({from, to});
  if (it == signs.end()) throw std::invalid_argument("SignatureTable: unknown arrow");
  return it->second;
}

namespace {

// Covers of π going down: π(i,j) with π(i) > π(j) and no intermediate value
// between them at positions strictly inside (i, j).
std::vector<ArrowPair> covers_down(const Permutation& w) {
  std::vector<ArrowPair> out;
  int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) <= w(j)) continue;
      bool cover = true;
      for (int k = i + 1; k < j; ++k)
        if (w(j) < w(k) && w(k) < w(i)) {
          cover = false;
          break;
        }
      if (!cover) continue;
      out.push_back({w, w.swapped(i, j), i, j, w(i) - w(j)});
    }
  return out;
}

}  // namespace

std::vector<ArrowPair> arrow_pairs(int n) {
  std::vector<Permutation> all;
  Permutation w = Permutation::identity(n);
  do {
    all.push_back(w);
  } while (std::next_permutation(w.p.begin(), w.p.end()));
  std::vector<ArrowPair> out;
  for (const auto& v : all)
    for (auto& a : covers_down(v)) out.push_back(std::move(a));
  std::sort(out.begin(), out.end(), [](const ArrowPair& a, const ArrowPair& b) {
    int la = a.source.length(), lb = b.source.length();
    if (la != lb) return la > lb;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  return out;
}

ArrowPair make_arrow(const Permutation& source, const Permutation& target) {
  for (auto& a : covers_down(source))
    if (a.target == target) return a;
  throw std::invalid_argument("make_arrow: not a Bruhat cover");
}

std::vector<Square> squares(int n) {
  std::vector<Square> out;
  Permutation w1 = Permutation::identity(n);
  do {
    auto down1 = covers_down(w1);
    for (size_t a = 0; a < down1.size(); ++a)
      for (size_t b = a + 1; b < down1.size(); ++b) {
        const Permutation& w2 = down1[a].target;
        const Permutation& w3 = down1[b].target;
        for (const auto& a2 : covers_down(w2))
          for (const auto& a4 : covers_down(w3))
            if (a2.target == a4.target) out.push_back({down1[a], a2, down1[b], a4});
      }
  } while (std::next_permutation(w1.p.begin(), w1.p.end()));
  return out;
}

std::vector<Permutation> canonical_chain(int n) {
  std::vector<Permutation> chain{Permutation::identity(n)};
  for (int b = n - 1; b >= 1; --b)
    for (int s = b; s <= n - 1; ++s) chain.push_back(chain.back().swapped(s, s + 1));
  return chain;
}

std::vector<Permutation> lower_interval(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::vector<Permutation> queue{w};
  while (!queue.empty()) {
    Permutation v = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : covers_down(v))
      if (seen.insert(a.target).second) queue.push_back(a.target);
  }
  return {seen.begin(), seen.end()};
}

SignatureTable akin_signature(int n) {
  SignatureTable t;
  t.n = n;
  auto chain = canonical_chain(n);
  std::set<Permutation> prev{Permutation::identity(n)};
  for (size_t p = 0; p + 1 < chain.size(); ++p) {
    const Permutation& wnext = chain[p + 1];
    // The chain step swaps adjacent positions (ip, ip+1).
    int ip = 0;
    for (int k = 1; k < n; ++k)
      if (chain[p](k) != wnext(k)) {
        ip = k;
        break;
      }
    auto interval = lower_interval(wnext);
    for (const auto& w : interval) {
      if (prev.count(w)) continue;
      Permutation wt = w.swapped(ip, ip + 1);
      for (const auto& a : covers_down(w)) {
        int s;
        if (a.i == ip && a.j == ip + 1) {
          s = 1;
        } else {
          Permutation wpt = a.target.swapped(ip, ip + 1);
          s = -t.sign(wt, wpt);
          if (prev.count(a.target)) s *= t.sign(a.target, wpt);
        }
        t.signs[{a.source, a.target}] = s;
      }
    }
    prev.clear();
    prev.insert(interval.begin(), interval.end());
  }
  if (!verify_square_property(t)) throw std::logic_error("akin_signature: square property failed");
  return t;
}

bool verify_square_property(const SignatureTable& t) {
  for (const auto& sq : squares(t.n)) {
    int prod = t.sign(sq.top_left.source, sq.top_left.target) *
               t.sign(sq.left_bottom.source, sq.left_bottom.target) *
               t.sign(sq.top_right.source, sq.top_right.target) *
               t.sign(sq.right_bottom.source, sq.right_bottom.target);
    if (prod != -1) return false;
  }
  return true;
}

}  // namespace weylpol
