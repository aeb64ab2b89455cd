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

#include "skewpoly/jsonio.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

#include "skewpoly/errors.hpp"
#include "skewpoly/textio.hpp"

namespace skewpoly {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing required key \"" + key + "\"");
    return *it;
}

std::string need_string(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_string())
        throw ParseError(std::string(what) + ": key \"" + key + "\" must be a string");
    return v.get<std::string>();
}

uint64_t need_uint(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_number_unsigned())
        throw ParseError(std::string(what) + ": key \"" + key + "\" must be a nonnegative integer");
    return v.get<uint64_t>();
}

/// "name(arg)" -> arg, for twist/derivation text forms.
std::string paren_arg(const std::string& text, const std::string& head, const char* what) {
    if (text.size() < head.size() + 2 || text.compare(0, head.size(), head) != 0 ||
        text[head.size()] != '(' || text.back() != ')')
        throw ParseError(std::string(what) + ": malformed \"" + text + "\"");
    return text.substr(head.size() + 1, text.size() - head.size() - 2);
}

} // namespace

Json domain_to_json(const DomainPtr& dom) {
    Json j;
    switch (dom->kind()) {
        case DomainKind::PrimeField:
            j["kind"] = "fp";
            j["p"] = dom->char_p();
            break;
        case DomainKind::GaloisField:
            j["kind"] = "gf";
            j["p"] = dom->char_p();
            j["k"] = dom->ext_degree();
            j["modulus"] = dom->modulus();
            j["gen"] = dom->gen_name();
            break;
        case DomainKind::Rationals: j["kind"] = "rationals"; break;
        case DomainKind::Quaternions: j["kind"] = "quaternions"; break;
        case DomainKind::PolyPrime:
            j["kind"] = "poly_fp";
            j["p"] = dom->char_p();
            j["var"] = dom->gen_name();
            break;
        case DomainKind::PolyRational:
            j["kind"] = "poly_q";
            j["var"] = dom->gen_name();
            break;
    }
    return j;
}

DomainPtr domain_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("domain: expected a JSON object");
    const std::string kind = need_string(j, "kind", "domain");
    if (kind == "fp") return Domain::prime_field(need_uint(j, "p", "domain"));
    if (kind == "gf") {
        const Json& m = need(j, "modulus", "domain");
        if (!m.is_array()) throw ParseError("domain: \"modulus\" must be an array");
        std::vector<uint64_t> mod;
        for (const Json& c : m) {
            if (!c.is_number_unsigned())
                throw ParseError("domain: modulus entries must be nonnegative integers");
            mod.push_back(c.get<uint64_t>());
        }
        std::string gen = j.contains("gen") ? need_string(j, "gen", "domain") : "w";
        return Domain::galois_field(need_uint(j, "p", "domain"),
                                    static_cast<uint32_t>(need_uint(j, "k", "domain")),
                                    std::move(mod), std::move(gen));
    }
    if (kind == "rationals") return Domain::rationals();
    if (kind == "quaternions") return Domain::quaternions();
    if (kind == "poly_fp") {
        std::string var = j.contains("var") ? need_string(j, "var", "domain") : "y";
        return Domain::poly_over_prime(need_uint(j, "p", "domain"), std::move(var));
    }
    if (kind == "poly_q") {
        std::string var = j.contains("var") ? need_string(j, "var", "domain") : "y";
        return Domain::poly_over_rationals(std::move(var));
    }
    throw ParseError("domain: unknown kind \"" + kind + "\"");
}

std::string endo_to_text(const EndoSpec& s) {
    switch (s.kind()) {
        case EndoKind::Identity: return "identity";
        case EndoKind::Frobenius: return "frobenius^" + std::to_string(s.frob_power());
        case EndoKind::Inner: return "inner(" + scalar_to_string(s.unit()) + ")";
        case EndoKind::Scale: return "scale(" + scalar_to_string(s.unit()) + ")";
    }
    throw Error("endo_to_text: unreachable");
}

EndoSpec endo_from_text(const DomainPtr& dom, const std::string& text) {
    if (text == "identity") return EndoSpec::identity(dom);
    if (text.rfind("frobenius^", 0) == 0) {
        const std::string arg = text.substr(10);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("twist: malformed \"" + text + "\"");
        return EndoSpec::frobenius(dom, static_cast<uint32_t>(std::strtoull(arg.c_str(), nullptr, 10)));
    }
    if (text.rfind("inner", 0) == 0)
        return EndoSpec::inner(parse_scalar(dom, paren_arg(text, "inner", "twist")));
    if (text.rfind("scale", 0) == 0)
        return EndoSpec::scale(parse_scalar(dom, paren_arg(text, "scale", "twist")));
    throw ParseError("twist: unknown form \"" + text +
                     "\" (expected identity, frobenius^j, inner(u), or scale(c))");
}

std::string der_to_text(const DerSpec& d) {
    switch (d.kind()) {
        case DerKind::Zero: return "zero";
        case DerKind::FormalDeriv: return "formal_deriv";
        case DerKind::Inner: return "inner(" + scalar_to_string(d.element()) + ")";
    }
    throw Error("der_to_text: unreachable");
}

DerSpec der_from_text(const DomainPtr& dom, const EndoSpec& sigma, const std::string& text) {
    if (text == "zero") return DerSpec::zero(dom);
    if (text == "formal_deriv") return DerSpec::formal_deriv(dom);
    if (text.rfind("inner", 0) == 0)
        return DerSpec::inner(parse_scalar(dom, paren_arg(text, "inner", "derivation")), sigma);
    throw ParseError("derivation: unknown form \"" + text +
                     "\" (expected zero, formal_deriv, or inner(b))");
}

Json ring_to_json(const RingPtr& ring) {
    Json j;
    j["domain"] = domain_to_json(ring->domain());
    j["vars"] = ring->vars();

    bool uniform_sigma = true, uniform_delta = true;
    for (uint32_t k = 1; k < ring->arity(); ++k) {
        uniform_sigma = uniform_sigma && ring->sigma(k).same_map(ring->sigma(0));
        uniform_delta = uniform_delta && ring->delta(k).same_map(ring->delta(0));
    }
    if (uniform_sigma) {
        j["sigma"] = endo_to_text(ring->sigma(0));
    } else {
        Json a = Json::array();
        for (uint32_t k = 0; k < ring->arity(); ++k) a.push_back(endo_to_text(ring->sigma(k)));
        j["sigma"] = std::move(a);
    }
    if (uniform_delta) {
        j["delta"] = der_to_text(ring->delta(0));
    } else {
        Json a = Json::array();
        for (uint32_t k = 0; k < ring->arity(); ++k) a.push_back(der_to_text(ring->delta(k)));
        j["delta"] = std::move(a);
    }

    Json comm = Json::object();
    for (uint32_t i = 0; i < ring->arity(); ++i)
        for (uint32_t l = i + 1; l < ring->arity(); ++l) {
            Scalar d = ring->commutator(i, l);
            if (!is_zero(d))
                comm[std::to_string(i) + "," + std::to_string(l)] = scalar_to_string(d);
        }
    j["commutators"] = std::move(comm);

    j["order"] = ring->order().kind == TermOrderSpec::Kind::Lex ? "lex" : "deglex";
    if (!ring->order().prio.empty()) j["prio"] = ring->order().prio;
    return j;
}

RingPtr ring_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("ring: expected a JSON object");
    DomainPtr dom = domain_from_json(need(j, "domain", "ring"));

    const Json& jv = need(j, "vars", "ring");
    if (!jv.is_array() || jv.empty()) throw ParseError("ring: \"vars\" must be a nonempty array");
    std::vector<std::string> vars;
    for (const Json& v : jv) {
        if (!v.is_string()) throw ParseError("ring: variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    const uint32_t n = static_cast<uint32_t>(vars.size());

    auto texts_of = [&](const char* key, const char* fallback) {
        std::vector<std::string> out;
        if (!j.contains(key)) {
            out.assign(n, fallback);
        } else if (j.at(key).is_string()) {
            out.assign(n, j.at(key).get<std::string>());
        } else if (j.at(key).is_array()) {
            for (const Json& e : j.at(key)) {
                if (!e.is_string()) throw ParseError(std::string("ring: \"") + key +
                                                     "\" array entries must be strings");
                out.push_back(e.get<std::string>());
            }
            if (out.size() != n)
                throw ParseError(std::string("ring: \"") + key +
                                 "\" array must have one entry per variable");
        } else {
            throw ParseError(std::string("ring: \"") + key + "\" must be a string or an array");
        }
        return out;
    };

    std::vector<EndoSpec> sigma;
    for (const std::string& t : texts_of("sigma", "identity"))
        sigma.push_back(endo_from_text(dom, t));
    std::vector<DerSpec> delta;
    {
        std::vector<std::string> dt = texts_of("delta", "zero");
        for (uint32_t k = 0; k < n; ++k) delta.push_back(der_from_text(dom, sigma[k], dt[k]));
    }

    std::map<std::pair<uint32_t, uint32_t>, Scalar> comm;
    if (j.contains("commutators")) {
        const Json& jc = j.at("commutators");
        if (!jc.is_object()) throw ParseError("ring: \"commutators\" must be an object");
        for (auto it = jc.begin(); it != jc.end(); ++it) {
            std::istringstream key(it.key());
            uint32_t a = 0, b = 0;
            char sep = 0;
            if (!(key >> a >> sep >> b) || sep != ',' || !key.eof() || a >= b || b >= n)
                throw ParseError("ring: commutator key \"" + it.key() +
                                 "\" must be \"i,j\" with i < j < arity");
            if (!it.value().is_string())
                throw ParseError("ring: commutator values must be scalar strings");
            comm[{a, b}] = parse_scalar(dom, it.value().get<std::string>());
        }
    }

    TermOrderSpec order;
    const std::string ot = j.contains("order") ? need_string(j, "order", "ring") : "lex";
    if (ot == "lex") order.kind = TermOrderSpec::Kind::Lex;
    else if (ot == "deglex") order.kind = TermOrderSpec::Kind::DegLex;
    else throw ParseError("ring: unknown order \"" + ot + "\" (expected lex or deglex)");
    if (j.contains("prio")) {
        const Json& jp = j.at("prio");
        if (!jp.is_array()) throw ParseError("ring: \"prio\" must be an array of positions");
        for (const Json& e : jp) {
            if (!e.is_number_unsigned() || e.get<uint64_t>() >= n)
                throw ParseError("ring: \"prio\" entries must be variable positions");
            order.prio.push_back(static_cast<uint32_t>(e.get<uint64_t>()));
        }
    }

    return RingDescriptor::make(std::move(dom), std::move(vars), std::move(sigma),
                                std::move(delta), std::move(comm), order);
}

Json ideal_to_json(const std::vector<SkewPoly>& gens) {
    Json a = Json::array();
    for (const SkewPoly& g : gens) a.push_back(skew_poly_to_string(g));
    return a;
}

std::vector<SkewPoly> ideal_from_json(const RingPtr& ring, const Json& j) {
    const Json& arr = j.is_object() && j.contains("generators") ? j.at("generators") : j;
    if (!arr.is_array()) throw ParseError("ideal: expected an array of polynomial strings");
    std::vector<SkewPoly> out;
    for (const Json& g : arr) {
        if (!g.is_string()) throw ParseError("ideal: generators must be polynomial strings");
        out.push_back(parse_skew_poly(ring, g.get<std::string>()));
    }
    return out;
}

Json family_to_json(const IdealFamily& fam) {
    Json j;
    j["domain"] = domain_to_json(fam.dom);
    j["arity"] = fam.arity;
    Json bases = Json::array();
    for (const FamilyBase& b : fam.bases) {
        Json e;
        e["index"] = multiindex_to_json(b.index);
        e["gen"] = scalar_to_string(b.gen);
        bases.push_back(std::move(e));
    }
    j["bases"] = std::move(bases);
    Json sg = Json::array(), dl = Json::array();
    for (const EndoSpec& s : fam.sigma) sg.push_back(endo_to_text(s));
    for (const DerSpec& d : fam.delta) dl.push_back(der_to_text(d));
    j["sigma"] = std::move(sg);
    j["delta"] = std::move(dl);
    return j;
}

IdealFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("family: expected a JSON object");
    DomainPtr dom = domain_from_json(need(j, "domain", "family"));
    const uint32_t arity = static_cast<uint32_t>(need_uint(j, "arity", "family"));

    std::vector<FamilyBase> bases;
    const Json& jb = need(j, "bases", "family");
    if (!jb.is_array()) throw ParseError("family: \"bases\" must be an array");
    for (const Json& e : jb) {
        FamilyBase b;
        const Json& idx = need(e, "index", "family base");
        if (!idx.is_array()) throw ParseError("family base: \"index\" must be an array");
        for (const Json& c : idx) b.index.e.push_back(static_cast<uint32_t>(c.get<uint64_t>()));
        b.gen = parse_scalar(dom, need_string(e, "gen", "family base"));
        bases.push_back(std::move(b));
    }

    std::vector<EndoSpec> sigma;
    if (j.contains("sigma")) {
        const Json& js = j.at("sigma");
        if (js.is_string()) {
            for (uint32_t k = 0; k < arity; ++k)
                sigma.push_back(endo_from_text(dom, js.get<std::string>()));
        } else {
            for (const Json& e : js) sigma.push_back(endo_from_text(dom, e.get<std::string>()));
        }
    } else {
        for (uint32_t k = 0; k < arity; ++k) sigma.push_back(EndoSpec::identity(dom));
    }
    if (sigma.size() != arity) throw ParseError("family: one twist per variable required");

    std::vector<DerSpec> delta;
    if (j.contains("delta")) {
        const Json& jd = j.at("delta");
        if (jd.is_string()) {
            for (uint32_t k = 0; k < arity; ++k)
                delta.push_back(der_from_text(dom, sigma[k], jd.get<std::string>()));
        } else {
            uint32_t k = 0;
            for (const Json& e : jd)
                delta.push_back(der_from_text(dom, sigma[k++], e.get<std::string>()));
        }
        if (delta.size() != arity) throw ParseError("family: one derivation per variable required");
    }

    return IdealFamily::make(std::move(dom), arity, std::move(bases), std::move(sigma),
                             std::move(delta));
}

std::string multiindex_to_text(const MultiIndex& u) {
    std::string s = "(";
    for (size_t i = 0; i < u.e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u.e[i]);
    }
    return s + ")";
}

MultiIndex multiindex_from_text(const std::string& text) {
    std::string body = text;
    while (!body.empty() && (body.front() == ' ' || body.front() == '(')) body.erase(body.begin());
    while (!body.empty() && (body.back() == ' ' || body.back() == ')')) body.pop_back();
    if (body.empty()) throw ParseError("multi-index: empty text");
    MultiIndex u;
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
        size_t pos = part.find_first_not_of(" \t");
        size_t end = part.find_last_not_of(" \t");
        if (pos == std::string::npos) throw ParseError("multi-index: empty component");
        part = part.substr(pos, end - pos + 1);
        if (part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("multi-index: component \"" + part + "\" is not a number");
        u.e.push_back(static_cast<uint32_t>(std::strtoull(part.c_str(), nullptr, 10)));
    }
    return u;
}

Json multiindex_to_json(const MultiIndex& u) {
    Json a = Json::array();
    for (uint32_t c : u.e) a.push_back(c);
    return a;
}

Json validation_to_json(const RingDescriptor::Validation& v) {
    Json j;
    j["ok"] = v.ok;
    j["failure"] = v.ok ? Json() : Json(v.failure);
    j["notes"] = v.notes;
    return j;
}

Json gb_to_json(const GroebnerBasis& gb) {
    std::vector<SkewPoly> sorted = gb.basis;
    std::sort(sorted.begin(), sorted.end(), [&](const SkewPoly& a, const SkewPoly& b) {
        return gb.ring->order().less(leading(a).exp, leading(b).exp);
    });
    Json j;
    j["basis"] = ideal_to_json(sorted);
    j["contains_one"] = gb.contains_one();
    return j;
}

Json member_witness_to_json(const MemberWitness& w) {
    Json j;
    j["member"] = w.yes;
    j["cap"] = w.cap;
    j["multipliers"] = ideal_to_json(w.multipliers);
    return j;
}

Json staircase_to_json(const StaircaseReport& st) {
    Json leads = Json::array();
    for (const MultiIndex& u : st.leads) leads.push_back(multiindex_to_json(u));
    Json j;
    j["finite"] = st.finite;
    j["dimension"] = st.finite ? Json(st.dimension) : Json();
    j["witness_axis"] = st.finite ? Json() : Json(st.witness_axis);
    j["leads"] = std::move(leads);
    Json mono = Json::array();
    for (const MultiIndex& u : st.std_monomials) mono.push_back(multiindex_to_json(u));
    j["std_monomials"] = std::move(mono);
    return j;
}

Json ascheck_to_json(const ASCheck& c) {
    Json j;
    j["pass"] = c.pass;
    j["nonzero_ok"] = c.nonzero_ok;
    j["nonunit_ok"] = c.nonunit_ok;
    j["normalizing_ok"] = c.normalizing_ok;
    j["transporters_ok"] = c.transporters_ok;
    j["failure"] = c.pass ? Json() : Json(c.failure);
    j["failed_index"] = c.failed_index ? multiindex_to_json(*c.failed_index) : Json();
    j["indices_checked"] = c.indices_checked;
    j["grid_bound"] = c.grid_bound;
    return j;
}

Json aswitness_to_json(const ASWitness& w) {
    Json j;
    j["r0"] = scalar_to_string(w.r0);
    j["certification"] = ascheck_to_json(w.cert);
    j["stream_position"] = w.stream_position;
    j["skipped_offenders"] = w.skipped_offenders;
    j["skipped_invariance"] = w.skipped_invariance;
    j["skipped_certification"] = w.skipped_certification;
    return j;
}

Json extract_to_json(const ExtractResult& r) {
    Json j;
    j["element"] = scalar_to_string(r.element);
    j["immediate"] = r.immediate;
    j["q"] = r.immediate ? Json() : Json(skew_poly_to_string(r.q));
    j["a_final"] = r.immediate ? Json() : Json(scalar_to_string(r.a_final));
    Json trace = Json::array();
    for (const DescentStep& s : r.trace) {
        Json e;
        e["le_q"] = multiindex_to_json(s.le_q);
        e["a"] = scalar_to_string(s.a);
        e["b"] = scalar_to_string(s.b);
        e["lt_p1"] = skew_poly_to_string(s.p1);
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    return j;
}

Json invariant_to_json(const InvariantField& f) {
    Json j;
    j["ambient_dim"] = f.ambient_dim;
    j["dim"] = f.basis.size();
    Json basis = Json::array();
    for (const Scalar& a : f.basis) basis.push_back(scalar_to_string(a));
    j["basis"] = std::move(basis);
    j["whole_domain"] = f.whole_domain();
    return j;
}

Json center_to_json(const CenterReport& rep) {
    Json j;
    j["cap"] = rep.cap;
    j["basis"] = ideal_to_json(rep.basis);
    j["h0"] = rep.h0 ? Json(skew_poly_to_string(*rep.h0)) : Json();
    return j;
}

Json module_to_json(const SemilinearModule& m) {
    Json j;
    j["dim"] = m.dim;
    Json labels = Json::array();
    for (const MultiIndex& u : m.basis_labels) labels.push_back(multiindex_to_json(u));
    j["labels"] = std::move(labels);
    Json action = Json::array();
    for (const Mat& t : m.action) {
        Json rows = Json::array();
        for (size_t r = 0; r < t.nrows; ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < t.ncols; ++c) row.push_back(scalar_to_string(t.at(r, c)));
            rows.push_back(std::move(row));
        }
        action.push_back(std::move(rows));
    }
    j["action"] = std::move(action);
    return j;
}

Json simplicity_to_json(const SimplicityReport& rep) {
    Json j;
    switch (rep.verdict) {
        case SimplicityReport::Verdict::Simple: j["verdict"] = "simple"; break;
        case SimplicityReport::Verdict::NotSimple: j["verdict"] = "not_simple"; break;
        case SimplicityReport::Verdict::Unknown: j["verdict"] = "unknown"; break;
    }
    j["vectors_checked"] = rep.vectors_checked;
    Json w = Json::array();
    for (const auto& row : rep.witness) {
        Json r = Json::array();
        for (const Scalar& a : row) r.push_back(scalar_to_string(a));
        w.push_back(std::move(r));
    }
    j["witness"] = std::move(w);
    return j;
}

Json pipeline_to_json(const PipelineReport& rep) {
    Json j;
    j["p"] = rep.p;
    j["k"] = rep.k;
    j["n"] = rep.n;
    j["bound"] = rep.bound;
    j["power_central"] = rep.power_central;
    j["h0"] = rep.h0_text.empty() ? Json() : Json(rep.h0_text);
    j["case_count"] = rep.cases.size();
    j["simple_count"] = rep.simple_count;
    j["distinct_maximal"] = rep.distinct_maximal;
    j["max_simple_dim"] = rep.max_simple_dim;
    j["all_intersections_nonzero"] = rep.all_intersections_nonzero;
    Json cases = Json::array();
    for (const PipelineCase& pc : rep.cases) {
        Json e;
        e["generators"] = ideal_to_json(pc.gens);
        e["proper"] = pc.proper;
        e["finite"] = pc.proper ? Json(pc.finite) : Json();
        e["dim"] = (pc.proper && pc.finite) ? Json(pc.dim) : Json();
        if (!pc.proper || !pc.finite) {
            e["verdict"] = Json();
        } else {
            switch (pc.verdict) {
                case SimplicityReport::Verdict::Simple: e["verdict"] = "simple"; break;
                case SimplicityReport::Verdict::NotSimple: e["verdict"] = "not_simple"; break;
                case SimplicityReport::Verdict::Unknown: e["verdict"] = "unknown"; break;
            }
        }
        Json deg = Json::array();
        for (int64_t v : pc.univariate_member_degree) deg.push_back(v);
        e["univariate_member_degree"] = std::move(deg);
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j;
}

Json error_to_json(const std::string& message, const Json& witness) {
    Json j;
    j["error"] = message;
    j["witness"] = witness;
    return j;
}

} // namespace skewpoly
