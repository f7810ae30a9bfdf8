#include "plumbkit/scan.hpp"

#include "plumbkit/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace plumbkit {

Integer surgery_coefficient(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  const Integer sum = p + q;
  return r * s * sum * sum + p * q;
}

BrieskornTriple candidate_triple(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  const Integer c = surgery_coefficient(p, q, r, s);
  if (abs(c) != 1) throw DomainError("surgery coefficient " + c.str() + " is not +-1");
  if (std::abs(p) < 2 || std::abs(q) < 2) throw DomainError("|p| and |q| must be >= 2");
  const Integer rs = abs(Integer(r) * s);
  if (rs < 2) throw HypothesisError("|r s| = " + rs.str() + " gives fewer than three exceptional fibers");
  // Any common factor of two indices divides the coefficient, so the
  // constructor's coprimality check can only fail on a broken invariant.
  try {
    return BrieskornTriple(static_cast<std::int64_t>(rs), std::abs(p), std::abs(q));
  } catch (const DomainError& e) {
    throw ParityError(std::string("coefficient +-1 but triple not coprime: ") + e.what());
  }
}

bool scan_order(const ScanRecord& a, const ScanRecord& b) {
  return std::make_tuple(std::abs(a.p), std::abs(a.q), a.r, a.s, a.p, a.q) <
         std::make_tuple(std::abs(b.p), std::abs(b.q), b.r, b.s, b.p, b.q);
}

namespace {

void scan_p_values(const ScanParams& params, const std::vector<std::int64_t>& ps, std::vector<ScanRecord>& out) {
  for (std::int64_t p : ps) {
    for (std::int64_t q = -params.q_bound; q <= params.q_bound; ++q) {
      if (std::abs(q) < 2 || std::gcd(p, q) != 1) continue;
      const Integer sum = Integer(p) + q;
      const Integer square = sum * sum;
      const Integer pq = Integer(p) * q;
      // r s (p+q)^2 = target - p q; solve for the product r s.
      for (int target : {-1, 1}) {
        const Integer rhs = target - pq;
        if (rhs % square != 0) continue;
        const Integer product = rhs / square;
        if (product == 0) continue;
        for (std::int64_t r = params.r_range.lo; r <= params.r_range.hi; ++r) {
          if (r == 0 || product % r != 0) continue;
          const Integer s_big = product / r;
          if (s_big < params.s_range.lo || s_big > params.s_range.hi) continue;
          const auto s = static_cast<std::int64_t>(s_big);
          if (!params.s_range.contains(s)) continue;
          out.push_back({p, q, r, s, std::nullopt, false, std::nullopt});
        }
      }
    }
  }
}

}  // namespace

std::vector<ScanRecord> scan_range(const ScanParams& params, unsigned threads) {
  if (params.p_bound < 2 || params.q_bound < 2) return {};
  if (params.r_range.empty_without_zero() || params.s_range.empty_without_zero()) return {};

  std::vector<std::int64_t> ps;
  for (std::int64_t p = -params.p_bound; p <= params.p_bound; ++p)
    if (std::abs(p) >= 2) ps.push_back(p);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ps.size()));
  std::vector<std::vector<std::int64_t>> shards(threads);
  for (std::size_t i = 0; i < ps.size(); ++i) shards[i % threads].push_back(ps[i]);

  std::vector<std::vector<ScanRecord>> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] { scan_p_values(params, shards[t], partial[t]); });
  }
  std::vector<ScanRecord> records;
  for (auto& part : partial) records.insert(records.end(), part.begin(), part.end());
  std::sort(records.begin(), records.end(), scan_order);

  std::map<BrieskornTriple, int> mu_cache;
  for (auto& rec : records) {
    try {
      rec.triple = candidate_triple(rec.p, rec.q, rec.r, rec.s);
    } catch (const HypothesisError&) {
      continue;
    }
    rec.all_odd = all_odd(*rec.triple);
    if (!rec.all_odd) continue;
    auto it = mu_cache.find(*rec.triple);
    if (it == mu_cache.end()) it = mu_cache.emplace(*rec.triple, rohlin_from_signature(*rec.triple)).first;
    rec.mu = it->second;
  }
  return records;
}

std::vector<BrieskornTriple> hit_triples(const std::vector<ScanRecord>& records) {
  std::vector<BrieskornTriple> out;
  for (const auto& r : records)
    if (r.is_hit()) out.push_back(*r.triple);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string records_jsonl(const std::vector<ScanRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["r"] = r.r;
    j["s"] = r.s;
    j["coefficient"] = static_cast<int>(r.coefficient());
    if (r.triple) {
      j["triple"] = r.triple->indices();
    } else {
      j["triple"] = nullptr;
    }
    j["all_odd"] = r.all_odd;
    if (r.mu) {
      j["mu"] = *r.mu;
    } else {
      j["mu"] = nullptr;
    }
    j["hit"] = r.is_hit();
    out += j.dump() + "\n";
  }
  return out;
}

namespace {

std::string range_str(const IntRange& r) {
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]\\{0}";
}

std::string tuple_str(const ScanRecord& r) {
  return "(" + std::to_string(r.p) + "," + std::to_string(r.q) + "," + std::to_string(r.r) + "," +
         std::to_string(r.s) + ")";
}

}  // namespace

std::string summary_table(const ScanParams& params, const std::vector<ScanRecord>& records) {
  std::size_t with_triple = 0;
  std::size_t odd = 0;
  std::size_t hits = 0;
  std::map<BrieskornTriple, std::vector<const ScanRecord*>> odd_triples;
  for (const auto& r : records) {
    if (!r.triple) continue;
    ++with_triple;
    if (!r.all_odd) continue;
    ++odd;
    if (r.is_hit()) ++hits;
    odd_triples[*r.triple].push_back(&r);
  }

  std::ostringstream out;
  out << "surgery scan: |p| <= " << params.p_bound << ", |q| <= " << params.q_bound << ", r in "
      << range_str(params.r_range) << ", s in " << range_str(params.s_range) << "\n";
  out << "triple hypothesis: Sigma(|rs|, |p|, |q|)\n";
  out << "records with |coefficient| = 1: " << records.size() << "\n";
  out << "records with a triple (|rs| >= 2): " << with_triple << "\n";
  out << "records with all-odd triple: " << odd << "\n";
  out << "hits (all odd, mu = 1): " << hits << " records, " << hit_triples(records).size()
      << " distinct triples\n";
  if (!odd_triples.empty()) {
    out << "\n  triple            mu  tuples  first (p,q,r,s)\n";
    for (const auto& [t, recs] : odd_triples) {
      std::string name = "Sigma" + t.str();
      name.resize(std::max<std::size_t>(name.size(), 18), ' ');
      out << "  " << name << *recs.front()->mu << "   " << recs.size();
      out << std::string(recs.size() < 10 ? 7 : recs.size() < 100 ? 6 : 5, ' ') << tuple_str(*recs.front())
          << (recs.front()->is_hit() ? "  HIT" : "") << "\n";
    }
  }
  return out.str();
}

}  // namespace plumbkit
