#pragma once

#include "plumbkit/arith.hpp"
#include "plumbkit/seifert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plumbkit {

/// Closed integer interval [lo, hi]; zero is always skipped when enumerating.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty_without_zero() const { return hi < lo || (lo == 0 && hi == 0); }
  bool contains(std::int64_t x) const { return x != 0 && lo <= x && x <= hi; }
};

struct ScanParams {
  std::int64_t p_bound = 100;
  std::int64_t q_bound = 100;
  IntRange r_range{-20, 20};
  IntRange s_range{-20, 20};
};

/// r s (p+q)^2 + p q.
Integer surgery_coefficient(const Integer& p, const Integer& q, const Integer& r, const Integer& s);

/// Sorted (|r s|, |p|, |q|), the Seifert triple assumed for +-1 surgery on
/// K_{p,q}(r,s). Throws HypothesisError when |r s| < 2 and DomainError when
/// the coefficient is not +-1 or |p|, |q| < 2.
BrieskornTriple candidate_triple(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

struct ScanRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::optional<BrieskornTriple> triple;
  bool all_odd = false;
  std::optional<int> mu;

  Integer coefficient() const { return surgery_coefficient(p, q, r, s); }

  /// Satisfies the checkable parts of the target: coefficient +-1, odd
  /// indices, Rohlin invariant 1.
  bool is_hit() const { return triple && all_odd && mu == 1; }

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Sort order of scan output: (|p|, |q|, r, s, p, q).
bool scan_order(const ScanRecord& a, const ScanRecord& b);

/// Every (p, q, r, s) in the box with gcd(p, q) = 1, |p|, |q| >= 2 and
/// |coefficient| = 1, in scan_order. An empty r or s range yields no records.
/// `threads` = 0 picks the hardware concurrency; output is independent of it.
std::vector<ScanRecord> scan_range(const ScanParams& params, unsigned threads = 1);

/// Distinct triples among the hits, ascending.
std::vector<BrieskornTriple> hit_triples(const std::vector<ScanRecord>& records);

/// One JSON object per line with fixed key order.
std::string records_jsonl(const std::vector<ScanRecord>& records);

/// Human-readable summary table.
std::string summary_table(const ScanParams& params, const std::vector<ScanRecord>& records);

}  // namespace plumbkit
