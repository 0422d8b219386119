#include "nilmassey/finite_group.hpp"

#include <string>

namespace nilmassey {

void ValidationReport::fail(std::string check, std::string witness) {
  ++total_;
  if (violations_.size() < kMaxViolations) violations_.push_back({std::move(check), std::move(witness)});
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations_) fail(v.check, v.witness);
  total_ += other.total_ - other.violations_.size();
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  return violations_.front().check + " at " + violations_.front().witness;
}

FiniteGroup::FiniteGroup(Table table) : table_(std::move(table)) {
  const std::size_t d = table_.size();
  if (d == 0) throw ValidationError("group table is empty");
  for (std::size_t g = 0; g < d; ++g) {
    if (table_[g].size() != d) throw ValidationError("group table row " + std::to_string(g) + " has wrong length");
    for (uint32_t v : table_[g])
      if (v >= d) throw ValidationError("group table entry out of range in row " + std::to_string(g));
  }
  bool found = false;
  for (uint32_t e = 0; e < d && !found; ++e) {
    bool ok = true;
    for (uint32_t g = 0; g < d && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group table has no identity");
  inverse_.assign(d, 0);
  for (uint32_t g = 0; g < d; ++g) {
    bool ok = false;
    for (uint32_t h = 0; h < d && !ok; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverse_[g] = h;
        ok = true;
      }
    if (!ok) throw ValidationError("element " + std::to_string(g) + " has no inverse");
  }
  for (uint32_t a = 0; a < d; ++a)
    for (uint32_t b = 0; b < d; ++b)
      for (uint32_t c = 0; c < d; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ValidationError("group table not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
}

FiniteGroup FiniteGroup::cyclic(uint32_t d) {
  if (d == 0) throw InvalidArgument("cyclic group order must be positive");
  Table t(d, std::vector<uint32_t>(d));
  for (uint32_t a = 0; a < d; ++a)
    for (uint32_t b = 0; b < d; ++b) t[a][b] = (a + b) % d;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const uint32_t dg = g.order(), dh = h.order();
  Table t(dg * dh, std::vector<uint32_t>(dg * dh));
  for (uint32_t a = 0; a < dg * dh; ++a)
    for (uint32_t b = 0; b < dg * dh; ++b)
      t[a][b] = g.mul(a / dh, b / dh) * dh + h.mul(a % dh, b % dh);
  return FiniteGroup(std::move(t));
}

ValidationReport validate_character(const FiniteGroup& g, const std::vector<uint32_t>& chi, const Modulus& mod) {
  ValidationReport r;
  if (chi.size() != g.order()) {
    r.fail("character has wrong length", "size=" + std::to_string(chi.size()));
    return r;
  }
  if (chi[g.identity()] != 1) r.fail("chi(e) != 1", "g=" + std::to_string(g.identity()));
  for (uint32_t a = 0; a < g.order(); ++a)
    if (chi[a] >= mod.value() || !mod.is_unit(chi[a])) r.fail("chi value not a unit", "g=" + std::to_string(a));
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b)
      if (chi[g.mul(a, b)] != mod.mul(chi[a], chi[b]))
        r.fail("chi(gh) != chi(g) chi(h)", "g=" + std::to_string(a) + " h=" + std::to_string(b));
  return r;
}

TwistedGroup::TwistedGroup(FiniteGroup group, Modulus mod, std::vector<uint32_t> chi)
    : group_(std::move(group)), mod_(std::move(mod)), chi_(std::move(chi)) {
  auto rep = validate_character(group_, chi_, mod_);
  if (!rep.ok()) throw BadCharacter("invalid character: " + rep.summary());
  pow_.push_back(std::vector<uint32_t>(group_.order(), 1));
  for (int k = 1; k <= 16; ++k) {
    std::vector<uint32_t> row(group_.order());
    for (uint32_t g = 0; g < group_.order(); ++g) row[g] = mod_.mul(pow_.back()[g], chi_[g]);
    pow_.push_back(std::move(row));
  }
}

uint32_t TwistedGroup::chi_pow(uint32_t g, int k) const {
  if (k < 0) throw InvalidArgument("negative twist");
  if (static_cast<std::size_t>(k) < pow_.size()) return pow_[static_cast<std::size_t>(k)][g];
  return mod_.pow(chi_[g], static_cast<uint64_t>(k));
}

}  // namespace nilmassey
