#pragma once

#include "plumbkit/seifert.hpp"

#include <optional>
#include <string>

namespace plumbkit {

// Checkable parts of the target properties of a homology sphere:
//   (i)   +-1 surgery on a knot in S^3,
//   (ii)  Rohlin invariant 1,
//   (iii) a free orientation-preserving involution isotopic to the identity,
//         which for Sigma(a1,a2,a3) holds when all indices are odd.
struct LemmaCheck {
  explicit LemmaCheck(BrieskornTriple t) : triple(t) {}

  BrieskornTriple triple;
  bool surgery = false;
  std::string surgery_evidence;  // "scan ..." / "fixture ..." / "none found"
  std::optional<int> mu_lattice;  // all-odd triples only
  int mu_plumbing = 0;
  bool mu_agree = true;
  bool odd = false;

  bool satisfied() const { return surgery && mu_plumbing == 1 && mu_agree && odd; }
};

/// Looks for surgery evidence in the default scan box, then among fixtures.
LemmaCheck check_lemma(const BrieskornTriple& t);

std::string render_text(const LemmaCheck& c);
std::string render_record(const LemmaCheck& c);

}  // namespace plumbkit
