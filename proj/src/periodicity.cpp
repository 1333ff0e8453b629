#include "dict2d/periodicity.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace dict2d {

namespace {

// Largest modulus we allow before declaring signature overflow. One more
// CRT merge multiplies by at most the row period, so leave headroom.
constexpr u128 kModulusLimit = (u128(1) << 100);

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  // extended Euclid; gcd(a, m) == 1 by construction
  std::int64_t old_r = a % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  assert(old_r == 1 || old_r == -1);
  std::int64_t inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

}  // namespace

int compute_period(std::string_view s) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return 0;
  std::vector<int> border(static_cast<size_t>(n) + 1, 0);
  border[0] = -1;
  int k = -1;
  for (int i = 0; i < n; ++i) {
    while (k >= 0 && s[static_cast<size_t>(k)] != s[static_cast<size_t>(i)])
      k = border[static_cast<size_t>(k)];
    ++k;
    border[static_cast<size_t>(i) + 1] = k;
  }
  return n - border[static_cast<size_t>(n)];
}

int least_rotation_index(std::string_view s) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return 0;
  int i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    char a = s[static_cast<size_t>((i + k) % n)];
    char b = s[static_cast<size_t>((j + k) % n)];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i = i + k + 1;
    else
      j = j + k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return i < j ? i : j;
}

CanonizedRow canonize_row(std::string_view row) {
  CanonizedRow out;
  const int p = compute_period(row);
  out.meta.period = p;
  if (p == 0) return out;
  std::string_view u = row.substr(0, static_cast<size_t>(p));
  const int r0 = least_rotation_index(u);
  out.meta.lwpos = r0 + 1;
  std::string rot(u.substr(static_cast<size_t>(r0)));
  rot.append(u.substr(0, static_cast<size_t>(r0)));
  out.canonical.reserve(row.size());
  while (out.canonical.size() < row.size())
    out.canonical.append(rot, 0,
                         std::min(rot.size(), row.size() - out.canonical.size()));
  return out;
}

Classification classify_pattern(const PatternMatrix& p) {
  Classification c;
  c.small_periods = true;
  const int threshold = p.width() / 4;
  for (int i = 0; i < p.height(); ++i) {
    if (compute_period(p.rows[static_cast<size_t>(i)]) > threshold) {
      c.small_periods = false;
      c.filter_row = i + 1;
      return c;
    }
  }
  return c;
}

LcmTable build_lcm_table(std::span<const int> periods, std::int64_t cap) {
  LcmTable table;
  table.cap = cap;
  table.values.reserve(periods.size() + 1);
  table.values.push_back(1);
  std::int64_t cur = 1;
  for (int p : periods) {
    if (cur != LcmTable::kInfinity) {
      std::int64_t g = std::gcd(cur, static_cast<std::int64_t>(p));
      // cur <= cap and p <= width, so this product cannot overflow int64
      cur = (cur / g) * p;
      if (cur > cap) cur = LcmTable::kInfinity;
    }
    table.values.push_back(cur);
  }
  return table;
}

CanonicalSignature canonical_signature(std::span<const RowMeta> metas) {
  CanonicalSignature sig;
  sig.residues.reserve(metas.size());
  u128 a = 0;  // solution set: c-1 = a (mod modulus)
  u128 m = 1;
  for (const RowMeta& meta : metas) {
    const std::int64_t p = meta.period;
    assert(p >= 1);
    const std::int64_t lw = meta.lwpos;  // may be absolute; only mod p matters
    const std::int64_t m_mod_p = static_cast<std::int64_t>(m % static_cast<u128>(p));
    const std::int64_t g = std::gcd(m_mod_p == 0 ? p : m_mod_p, p);
    // achievable residues at this row form { rho : rho = a - (lw-1) (mod g) };
    // the least one is forced, no scan over [1, L] ever happens
    const std::int64_t a_mod_g = static_cast<std::int64_t>(a % static_cast<u128>(g));
    std::int64_t rho = (a_mod_g - (lw - 1)) % g;
    if (rho < 0) rho += g;
    sig.residues.push_back(static_cast<int>(rho));
    // merge c-1 = a (mod m) with c-1 = b (mod p), b = rho + lw - 1 (mod p)
    std::int64_t b = (rho + lw - 1) % p;
    if (b < 0) b += p;
    const std::int64_t pg = p / g;
    if (pg > 1) {
      if (m > kModulusLimit / static_cast<u128>(pg)) {
        sig.overflow = true;
        return sig;
      }
      const std::int64_t a_mod_p = static_cast<std::int64_t>(a % static_cast<u128>(p));
      std::int64_t diff = (b - a_mod_p) % p;
      if (diff < 0) diff += p;
      assert(diff % g == 0);
      // (m/g) mod pg == ((m mod p)/g) mod pg, all small
      std::int64_t mg_mod = ((m_mod_p == 0 ? p : m_mod_p) / g) % pg;
      std::int64_t t = ((diff / g) % pg) * mod_inverse(mg_mod, pg) % pg;
      a += m * static_cast<u128>(t);
      m *= static_cast<u128>(pg);
      a %= m;
    }
  }
  sig.z = a + 1;
  sig.modulus = m;
  return sig;
}

std::vector<PBlockToken> tokenize_pblocks(std::span<const RowMeta> metas,
                                          int pi, BlockClassNamer& namer,
                                          bool assign_names) {
  std::vector<PBlockToken> tokens;
  if (pi <= 0) return tokens;
  const size_t chunks = metas.size() / static_cast<size_t>(pi);
  tokens.reserve(chunks);
  for (size_t t = 0; t < chunks; ++t) {
    PBlockToken tok;
    std::span<const RowMeta> chunk =
        metas.subspan(t * static_cast<size_t>(pi), static_cast<size_t>(pi));
    // Text chunks may contain rows that were never classified (period 0).
    // They cannot equal any dictionary chunk, so emit a sentinel that fails
    // every comparison and breaks the delta chain instead of a signature.
    const bool valid =
        std::all_of(chunk.begin(), chunk.end(),
                    [](const RowMeta& m) { return m.period >= 1; });
    if (!valid) {
      tok.sig.overflow = true;
      tokens.push_back(std::move(tok));
      continue;
    }
    tok.sig = canonical_signature(chunk);
    if (!tok.sig.overflow) {
      // periods are implied by class names, so (classes, residues) is the key
      BlockClassNamer::Key key;
      key.reserve(chunk.size() * 2);
      for (const RowMeta& meta : chunk) key.push_back(meta.class_name);
      for (int r : tok.sig.residues) key.push_back(static_cast<std::uint64_t>(r));
      tok.block_class = assign_names ? namer.name(key)
                                     : namer.lookup(key).value_or(0);
      if (t > 0 && !tokens.back().sig.overflow) {
        const u128 m = tok.sig.modulus;
        const u128 prev = tokens.back().sig.z % m;
        tok.has_delta = true;
        tok.delta_z = (tok.sig.z % m + m - prev) % m;
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

}  // namespace dict2d
