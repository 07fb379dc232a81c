#pragma once

#include <json.hpp>

#include "affhecke/braid.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/kernel.hpp"
#include "affhecke/kl.hpp"
#include "affhecke/koszul.hpp"
#include "affhecke/polyrep.hpp"

namespace affhecke {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

// Simple reflections are 1-based in every serialised form, as in "s1s2".
// Readers throw std::invalid_argument on malformed input.

/// {"exp": coeff, ...} in increasing exponent order.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const Weight& x);
Weight weight_from_json(const Json& j, std::size_t rank);

/// {"fin": [reduced word], "trans": [coords]}
Json to_json(const AffineWeylGroup& G, const AffWeylElt& a);
AffWeylElt aff_from_json(const AffineWeylGroup& G, const Json& j);

/// [{"T": s, "e": 1}, {"theta": [coords]}, ...]
Json to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j, std::size_t rank);

/// {"terms": [{"w": ..., "c": ...}]} ordered by length, then element.
Json to_json(const HeckeAlgebra& H, const HeckeElt& h);
HeckeElt hecke_from_json(const HeckeAlgebra& H, const Json& j);

/// {"terms": [{"w": [word], "x": [coords], "c": ...}]}
Json to_json(const WeylGroup& W, const StdCoords& c);

/// {"terms": [{"x": [coords], "c": ...}]}
Json to_json(const CharFunc& f);

/// {"n": vars, "weights": [...], "terms": [{"m": [exps], "c": "p/q"}]};
/// "weights" is optional on input and defaults to all 1.
Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);
/// Either an array of polynomials or {"generators": [...]}.
std::vector<QPoly> qpolys_from_json(const Json& j);

Json to_json(const KoszulReport& r);
Json to_json(const PresentationReport& r);
Json to_json(const Conventions& c);
Json to_json(const KernelClass& k, const HeckeAlgebra& H, const Conventions& c);
Json to_json(const ConvolutionReport& r, const HeckeAlgebra& H);
/// [{"y": ..., "w": ..., "P": ..., "P(1)": ...}] in kl_rows order.
Json to_json(const KLTable& T);

/// Square integer matrix given as an array of rows.
IntMatrix cartan_from_json(const Json& j);

}  // namespace affhecke
