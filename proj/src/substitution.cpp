#include "nilmassey/substitution.hpp"

namespace nilmassey {

std::vector<bool> nonzero_suffixes(const Series& t) {
  const int n = t.degree();
  auto c = t.data();
  std::vector<bool> nz(c.size(), false);
  for (int len = n; len >= 0; --len) {
    for (uint64_t b = 0; b < block_size(len); ++b) {
      std::size_t i = block_offset(len) + b;
      bool v = c[i] != 0;
      if (len < n) {
        // X u keeps the bits, Y u sets bit len.
        v = v || nz[block_offset(len + 1) + b] || nz[block_offset(len + 1) + (b | (uint64_t{1} << len))];
      }
      nz[i] = v;
    }
  }
  return nz;
}

Substitution::Substitution(const GroupElt& img_x, const GroupElt& img_y) : n_(img_x.degree()) {
  if (img_y.degree() != n_) throw DegreeMismatch("substitution images have different degrees");
  if (!(img_x.modulus() == img_y.modulus())) throw ModulusMismatch();
  Series px = img_x.series(), py = img_y.series();
  px.data()[0] = 0;
  py.data()[0] = 0;
  for (int d = 0; d <= n_; ++d) {
    px_.push_back(px.resized(d));
    py_.push_back(py.resized(d));
  }
}

namespace {

// Evaluates t_u = sum_v c_{vu} v at degree n - |u| via
// t_u = c_u + t_{Xu} X + t_{Yu} Y.
struct Evaluator {
  const Series& t;
  const std::vector<Series>& px;
  const std::vector<Series>& py;
  const std::vector<bool>& nz;
  int n;

  Series eval(int len, uint64_t bits) const {
    const int d = n - len;
    Series out(d, t.modulus());
    out.data()[0] = t.data()[block_offset(len) + bits];
    if (d == 0) return out;
    const uint64_t xb = bits, yb = bits | (uint64_t{1} << len);
    if (nz[block_offset(len + 1) + xb]) mul_acc(out, eval(len + 1, xb), px[static_cast<std::size_t>(d)]);
    if (nz[block_offset(len + 1) + yb]) mul_acc(out, eval(len + 1, yb), py[static_cast<std::size_t>(d)]);
    return out;
  }
};

}  // namespace

Series Substitution::apply(const Series& t) const {
  if (t.degree() > n_) throw DegreeMismatch("series degree exceeds substitution degree");
  if (!(t.modulus() == px_[0].modulus())) throw ModulusMismatch();
  auto nz = nonzero_suffixes(t);
  if (!nz[0]) return Series(t.degree(), t.modulus());
  Evaluator ev{t, px_, py_, nz, t.degree()};
  return ev.eval(0, 0);
}

}  // namespace nilmassey
