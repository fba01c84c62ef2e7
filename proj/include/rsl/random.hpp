#pragma once

#include "rsl/moves.hpp"

#include <random>

namespace rsl {

using Rng = std::mt19937_64;

struct RandomLinkOptions {
  int max_crossings = 8;
  int max_extra_width = 2;  // strands temporarily added by cups
  double kink_rate = 0.1;
  double cup_rate = 0.15;
};

// A random string link on n strands with at most opt.max_crossings crossings.
// Built from braid generators, kinks and cup/cap hooks; rejects diagrams that
// fail validation or close off a component.
inline SlicedDiagram random_string_link(Rng& rng, int n, const RandomLinkOptions& opt = {}) {
  if (n < 0) throw std::invalid_argument("random_string_link: negative n");
  if (n == 0) return identity_link(0);
  std::uniform_real_distribution<double> coin(0, 1);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Event> ev;
    std::vector<int> up(n, 1);
    int target = uni(0, opt.max_crossings), used = 0;
    int w = n;
    for (int guard = 0; guard < 200 && (used < target || w > n); ++guard) {
      bool close = w > n && (used >= target || coin(rng) < 0.3);
      if (close) {
        std::vector<int> ps;
        for (int p = 0; p + 1 < w; ++p)
          if (up[p] != up[p + 1]) ps.push_back(p);
        if (ps.empty()) break;
        int p = ps[uni(0, static_cast<int>(ps.size()) - 1)];
        ev.push_back(cap(p, up[p] ? 'l' : 'r'));
        up.erase(up.begin() + p, up.begin() + p + 2);
        w -= 2;
        continue;
      }
      double r = coin(rng);
      if (r < opt.cup_rate && w + 2 <= n + opt.max_extra_width && used + 2 <= target) {
        int p = uni(0, w);
        bool l = coin(rng) < 0.5;
        ev.push_back(cup(p, l ? 'l' : 'r'));
        up.insert(up.begin() + p, {l ? 1 : 0, l ? 0 : 1});
        w += 2;
      } else if (r < opt.cup_rate + opt.kink_rate && used < target) {
        int p = uni(0, w - 1);
        auto k = kink(coin(rng) < 0.5, coin(rng) < 0.5, p, up[p] == 1);
        ev.insert(ev.end(), k.begin(), k.end());
        ++used;
      } else if (w >= 2 && used < target) {
        int p = uni(0, w - 2);
        ev.push_back(xing(coin(rng) < 0.5, p));
        std::swap(up[p], up[p + 1]);
        ++used;
      } else if (w < 2 && used < target) {
        auto k = kink(coin(rng) < 0.5, coin(rng) < 0.5, 0, up[0] == 1);
        ev.insert(ev.end(), k.begin(), k.end());
        ++used;
      }
    }
    if (w != n) continue;
    try {
      auto d = validate(ev, DiagramType::StringLink, n);
      if (is_string_link(d, n)) return d;
    } catch (const DiagramError&) {
    }
  }
  throw std::runtime_error("random_string_link: no valid sample");
}

inline std::vector<SlicedDiagram> random_string_links(std::uint64_t seed, int count, int n_min, int n_max,
                                                      const RandomLinkOptions& opt = {}) {
  Rng rng(seed);
  std::vector<SlicedDiagram> out;
  for (int k = 0; k < count; ++k) {
    int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    out.push_back(random_string_link(rng, n, opt));
  }
  return out;
}

} // namespace rsl
