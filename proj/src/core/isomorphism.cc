// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mlogic/isomorphism.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mlogic/errors.h"
#include "mlogic/explicit.h"

namespace mlogic {
namespace {

using Signature = std::vector<std::uint32_t>;

bool is_circuit_mask(const std::vector<std::uint8_t>& t, std::uint32_t s) {
  int size = std::popcount(s);
  if (t[s] != size - 1) return false;
  for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
    std::uint32_t low = bits & (~bits + 1);
    if (t[s ^ low] != size - 1) return false;
  }
  return true;
}

// sig[e][k] = number of circuits of size k containing e.
std::vector<Signature> signatures(const std::vector<std::uint8_t>& t,
                                  std::size_t n) {
  std::vector<Signature> sig(n, Signature(n + 1, 0));
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t s = 1; s < total; ++s) {
    if (!is_circuit_mask(t, s)) continue;
    int size = std::popcount(s);
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      sig[std::countr_zero(bits)][size]++;
    }
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
            std::size_t n, const std::vector<Signature>& sig_a,
            const std::vector<Signature>& sig_b)
      : a_(a), b_(b), n_(n), sig_a_(sig_a), sig_b_(sig_b) {}

  std::optional<Bijection> run() {
    std::vector<std::size_t> candidates(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (sig_a_[i] == sig_b_[j]) candidates[i]++;
      }
      if (candidates[i] == 0) return std::nullopt;
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) {
                       return candidates[x] < candidates[y];
                     });
    sub_a_.assign(std::size_t{1} << n_, 0);
    sub_b_.assign(std::size_t{1} << n_, 0);
    perm_.assign(n_, n_);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return perm_;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    std::size_t x = order_[depth];
    std::uint32_t bx = std::uint32_t{1} << x;
    const std::size_t span = std::size_t{1} << depth;
    for (std::size_t y = 0; y < n_; ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      std::uint32_t by = std::uint32_t{1} << y;
      bool ok = true;
      for (std::size_t i = 0; i < span && ok; ++i) {
        ok = a_[sub_a_[i] | bx] == b_[sub_b_[i] | by];
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < span; ++i) {
        sub_a_[span + i] = sub_a_[i] | bx;
        sub_b_[span + i] = sub_b_[i] | by;
      }
      used_[y] = true;
      perm_[x] = y;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      perm_[x] = n_;
    }
    return false;
  }

  const std::vector<std::uint8_t>& a_;
  const std::vector<std::uint8_t>& b_;
  std::size_t n_;
  const std::vector<Signature>& sig_a_;
  const std::vector<Signature>& sig_b_;
  std::vector<std::size_t> order_;
  // Entries [0, 2^depth) enumerate subsets of the mapped prefix.
  std::vector<std::uint32_t> sub_a_;
  std::vector<std::uint32_t> sub_b_;
  Bijection perm_;
  std::vector<bool> used_;
};

std::optional<Bijection> iso_with_signatures(
    const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
    std::size_t n, const std::vector<Signature>& sig_a) {
  const std::size_t last = (std::size_t{1} << n) - 1;
  if (a[last] != b[last]) return std::nullopt;
  auto sig_b = signatures(b, n);
  auto sorted_a = sig_a;
  auto sorted_b = sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  return IsoSearch(a, b, n, sig_a, sig_b).run();
}

}  // namespace

std::optional<Bijection> find_isomorphism(const std::vector<std::uint8_t>& a,
                                          const std::vector<std::uint8_t>& b,
                                          std::size_t n) {
  if (a.size() != b.size() || a.size() != (std::size_t{1} << n)) {
    return std::nullopt;
  }
  return iso_with_signatures(a, b, n, signatures(a, n));
}

std::optional<Bijection> is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.full_rank() != b.full_rank()) {
    return std::nullopt;
  }
  return find_isomorphism(rank_table(a), rank_table(b), a.size());
}

std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& n) {
  const std::size_t host = m.size();
  const std::size_t k = n.size();
  if (k > host || n.full_rank() > m.full_rank()) return std::nullopt;
  const auto tm = rank_table(m);
  const auto tn = rank_table(n);
  const auto sig_n = signatures(tn, k);
  const int rank_n = n.full_rank();
  int loops_n = 0;
  for (std::size_t i = 0; i < k; ++i) loops_n += tn[std::size_t{1} << i] == 0;

  std::vector<std::uint8_t> minor(std::size_t{1} << k);
  std::vector<std::size_t> kept_idx(k);
  const std::uint32_t total = std::uint32_t{1} << host;
  for (std::uint32_t c = 0; c < total; ++c) {
    const int rc = tm[c];
    if (rc != std::popcount(c)) continue;  // contract independent sets only
    if (host - static_cast<std::size_t>(rc) < k) continue;
    if (rc + rank_n > m.full_rank()) continue;
    std::uint32_t rest = (total - 1) & ~c;
    // k-subsets of `rest`, lexicographic over its compressed indices.
    std::vector<std::size_t> rest_idx;
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
      rest_idx.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
    }
    if (rest_idx.size() < k) continue;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t t_mask = 0;
      for (std::size_t i = 0; i < k; ++i) {
        kept_idx[i] = rest_idx[pick[i]];
        t_mask |= std::uint32_t{1} << kept_idx[i];
      }
      if (tm[c | t_mask] - rc == rank_n) {
        int loops = 0;
        for (std::size_t i = 0; i < k; ++i) {
          loops += tm[c | (std::uint32_t{1} << kept_idx[i])] == rc;
        }
        if (loops == loops_n) {
          for (std::uint32_t s = 0; s < minor.size(); ++s) {
            std::uint32_t lifted = c;
            for (std::size_t i = 0; i < k; ++i) {
              if (s & (1u << i)) lifted |= std::uint32_t{1} << kept_idx[i];
            }
            minor[s] = static_cast<std::uint8_t>(tm[lifted] - rc);
          }
          // Map N onto the candidate: the bijection goes N -> minor.
          if (auto iso = iso_with_signatures(tn, minor, k, sig_n)) {
            MinorWitness w;
            w.contracted = Subset::from_mask(host, c);
            w.kept = Subset::from_mask(host, t_mask);
            w.map.resize(k);
            for (std::size_t i = 0; i < k; ++i) w.map[i] = kept_idx[(*iso)[i]];
            return w;
          }
        }
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == rest_idx.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (k == 0) break;
  }
  return std::nullopt;
}

}  // namespace mlogic
