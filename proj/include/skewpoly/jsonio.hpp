/*
   Copyright 2026 The skewpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON serialization of descriptors (domains, rings, ideals, families) and
// of the report structures the command line tool emits. Field layouts are
// documented in docs/formats.md and mirrored by docs/schemas. Serializers
// use ordered JSON so byte output is stable across runs.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "skewpoly/amitsur.hpp"
#include "skewpoly/leftideal.hpp"
#include "skewpoly/modcenter.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/scalar.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly {

using Json = nlohmann::ordered_json;

// ---- descriptors ----

Json domain_to_json(const DomainPtr& dom);
DomainPtr domain_from_json(const Json& j);

/// Twist text forms: "identity", "frobenius^j", "inner(<scalar>)",
/// "scale(<scalar>)".
std::string endo_to_text(const EndoSpec& s);
EndoSpec endo_from_text(const DomainPtr& dom, const std::string& text);

/// Derivation text forms: "zero", "formal_deriv", "inner(<scalar>)". Inner
/// derivations twist by the variable's sigma.
std::string der_to_text(const DerSpec& d);
DerSpec der_from_text(const DomainPtr& dom, const EndoSpec& sigma, const std::string& text);

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

Json ideal_to_json(const std::vector<SkewPoly>& gens);
std::vector<SkewPoly> ideal_from_json(const RingPtr& ring, const Json& j);

Json family_to_json(const IdealFamily& fam);
IdealFamily family_from_json(const Json& j);

// ---- multi-indices ----

/// "(5,0)"; parsing also accepts the form without parentheses.
std::string multiindex_to_text(const MultiIndex& u);
MultiIndex multiindex_from_text(const std::string& text);
Json multiindex_to_json(const MultiIndex& u);

// ---- reports ----

Json validation_to_json(const RingDescriptor::Validation& v);
Json gb_to_json(const GroebnerBasis& gb);
Json member_witness_to_json(const MemberWitness& w);
Json staircase_to_json(const StaircaseReport& st);
Json ascheck_to_json(const ASCheck& c);
Json aswitness_to_json(const ASWitness& w);
Json extract_to_json(const ExtractResult& r);
Json invariant_to_json(const InvariantField& f);
Json center_to_json(const CenterReport& rep);
Json module_to_json(const SemilinearModule& m);
Json simplicity_to_json(const SimplicityReport& rep);
Json pipeline_to_json(const PipelineReport& rep);

/// Structured engine-error payload: {"error": message, "witness": ...}.
Json error_to_json(const std::string& message, const Json& witness = Json());

} // namespace skewpoly
