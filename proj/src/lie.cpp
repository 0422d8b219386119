#include "nilmassey/lie.hpp"

#include "nilmassey/group_elt.hpp"

namespace nilmassey {
namespace {

// Dynkin map on one homogeneous block of length k, split on the last letter:
// D(t a) = [D(t), a].
std::vector<uint32_t> dyn_block(std::span<const uint32_t> in, int k, const Modulus& mod) {
  std::vector<uint32_t> out(in.size(), 0);
  if (k == 0) return out;
  if (k == 1) {
    out.assign(in.begin(), in.end());
    return out;
  }
  const std::size_t half = in.size() / 2;
  std::vector<uint32_t> part(half);
  for (uint32_t a = 0; a < 2; ++a) {
    bool any = false;
    for (std::size_t j = 0; j < half; ++j) {
      part[j] = in[2 * j + a];
      any |= part[j] != 0;
    }
    if (!any) continue;
    std::vector<uint32_t> d = dyn_block(part, k - 1, mod);
    const std::size_t hi = static_cast<std::size_t>(a) << (k - 1);
    for (std::size_t u = 0; u < half; ++u) {
      if (d[u] == 0) continue;
      out[(u << 1) | a] = mod.add(out[(u << 1) | a], d[u]);
      out[hi | u] = mod.sub(out[hi | u], d[u]);
    }
  }
  return out;
}

}  // namespace

Series dynkin(const Series& s) {
  Series out(s.degree(), s.modulus());
  for (int k = 1; k <= s.degree(); ++k) {
    auto d = dyn_block(s.block(k), k, s.modulus());
    std::ranges::copy(d, out.block(k).begin());
  }
  return out;
}

bool is_lie(const Series& s) {
  if (s.constant() != 0) return false;
  const Modulus& mod = s.modulus();
  for (int k = 1; k <= s.degree(); ++k) {
    auto blk = s.block(k);
    auto d = dyn_block(blk, k, mod);
    const uint32_t kk = mod.reduce(k);
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (d[i] != mod.mul(kk, blk[i])) return false;
  }
  return true;
}

Series lie_project(const Series& s) {
  Series out(s.degree(), s.modulus());
  const Modulus& mod = s.modulus();
  for (int k = 1; k <= s.degree(); ++k) {
    auto d = dyn_block(s.block(k), k, mod);
    const uint32_t inv = mod.inv_int(static_cast<uint64_t>(k));
    auto dst = out.block(k);
    for (std::size_t i = 0; i < d.size(); ++i) dst[i] = mod.mul(d[i], inv);
  }
  return out;
}

LieSeries::LieSeries(Series s) : s_(std::move(s)) {
  if (s_.constant() != 0 || !is_lie(to_exponential_coordinates(s_))) throw NotLie("series is not a Lie element");
}

}  // namespace nilmassey
