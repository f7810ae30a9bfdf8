#include "plumbkit/lemma.hpp"

#include "plumbkit/calculus.hpp"
#include "plumbkit/fixtures.hpp"
#include "plumbkit/graph_io.hpp"
#include "plumbkit/lattice.hpp"
#include "plumbkit/scan.hpp"

#include "json.hpp"

#include <sstream>

namespace plumbkit {

LemmaCheck check_lemma(const BrieskornTriple& t) {
  LemmaCheck c(t);
  c.odd = all_odd(t);
  c.mu_plumbing = rohlin_mu_bar(star_plumbing(brieskorn_seifert(t)));
  if (c.odd) {
    c.mu_lattice = rohlin_from_signature(t);
    c.mu_agree = *c.mu_lattice == c.mu_plumbing;
  }

  // Prefer a tuple with r, s > 0 when the triple has one.
  const auto records = scan_range(ScanParams{});
  const ScanRecord* found = nullptr;
  for (const auto& rec : records) {
    if (rec.triple != t) continue;
    if (!found || (rec.r > 0 && rec.s > 0 && !(found->r > 0 && found->s > 0))) found = &rec;
  }
  if (found) {
    {
      const auto& rec = *found;
      std::ostringstream ev;
      ev << "scan: (p,q,r,s) = (" << rec.p << "," << rec.q << "," << rec.r << "," << rec.s
         << "), coefficient " << rec.coefficient() << ", triple hypothesis Sigma(|rs|,|p|,|q|)";
      c.surgery = true;
      c.surgery_evidence = ev.str();
      return c;
    }
  }
  for (const auto& f : fixtures()) {
    if (f.surgery_certificate_for != t) continue;
    const auto red = reduce_to_s3(parse_graph(std::string(f.text)));
    if (red.verdict == VerdictKind::S3) {
      c.surgery = true;
      c.surgery_evidence = "fixture " + std::string(f.name) + ": sphere plus one 2-handle reduces to S3 in " +
                           std::to_string(red.trace->moves.size()) + " moves";
      return c;
    }
  }
  c.surgery_evidence = "none found";
  return c;
}

std::string render_text(const LemmaCheck& c) {
  std::ostringstream out;
  out << "Sigma" << c.triple.str() << "\n";
  out << "  (i)   +-1 surgery on a knot: " << (c.surgery ? "yes" : "not established") << " [" << c.surgery_evidence
      << "]\n";
  out << "  (ii)  Rohlin invariant: mu = " << c.mu_plumbing << " [plumbing " << c.mu_plumbing;
  if (c.mu_lattice) out << ", lattice " << *c.mu_lattice << (c.mu_agree ? ", agree" : ", DISAGREE");
  out << "]\n";
  out << "  (iii) free involution: " << (c.odd ? "yes, all indices odd" : "not guaranteed, an index is even") << "\n";
  out << "  verdict: " << (c.satisfied() ? "satisfies (i)-(iii)" : "does not satisfy (i)-(iii)") << "\n";
  return out.str();
}

std::string render_record(const LemmaCheck& c) {
  nlohmann::ordered_json j;
  j["triple"] = c.triple.indices();
  j["surgery"] = c.surgery;
  j["surgery_evidence"] = c.surgery_evidence;
  j["mu_plumbing"] = c.mu_plumbing;
  if (c.mu_lattice) {
    j["mu_lattice"] = *c.mu_lattice;
  } else {
    j["mu_lattice"] = nullptr;
  }
  j["all_odd"] = c.odd;
  j["satisfied"] = c.satisfied();
  return j.dump() + "\n";
}

}  // namespace plumbkit
