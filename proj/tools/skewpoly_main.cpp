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

// Command line front end. JSON is the machine interface (single line on
// stdout); --human renders the same data readably. Exit codes: 0 success,
// 1 verification failure or engine error (structured {error, witness} JSON),
// 2 usage error. Input grammars are documented in docs/formats.md.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewpoly/amitsur.hpp"
#include "skewpoly/errors.hpp"
#include "skewpoly/jsonio.hpp"
#include "skewpoly/leftideal.hpp"
#include "skewpoly/linalg.hpp"
#include "skewpoly/modcenter.hpp"
#include "skewpoly/monomial.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/rng.hpp"
#include "skewpoly/scalar.hpp"
#include "skewpoly/skewring.hpp"
#include "skewpoly/textio.hpp"

using namespace skewpoly;

namespace {

struct Ctx {
    uint64_t seed = 12345;
    bool human = false;
    int exit_code = 0;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return Json::parse(in);
}

RingPtr load_ring(const std::string& path) { return ring_from_json(read_json_file(path)); }

LeftIdeal load_ideal(const RingPtr& ring, const std::string& path) {
    return LeftIdeal::make(ring, ideal_from_json(ring, read_json_file(path)));
}

void emit(const Ctx& ctx, const Json& j) {
    std::cout << (ctx.human ? j.dump(2) : j.dump()) << "\n";
}

/// Human mode for verbs whose payload is one short string.
void emit_value(const Ctx& ctx, const Json& j, const char* key) {
    if (ctx.human)
        std::cout << j.at(key).get<std::string>() << "\n";
    else
        emit(ctx, j);
}

TermOrderSpec order_from_args(const std::string& name, const std::vector<uint32_t>& prio) {
    TermOrderSpec o;
    if (name == "lex") o.kind = TermOrderSpec::Kind::Lex;
    else if (name == "deglex") o.kind = TermOrderSpec::Kind::DegLex;
    else throw ParseError("order: unknown name \"" + name + "\" (expected lex or deglex)");
    o.prio = prio;
    return o;
}

std::string cmp_name(Cmp c) { return c == Cmp::LT ? "LT" : c == Cmp::EQ ? "EQ" : "GT"; }

/// Descent trace, one step per line: le(Q), a, b, lt(P1).
void print_trace_human(const ExtractResult& res) {
    std::cout << "element = " << scalar_to_string(res.element) << "\n";
    if (res.immediate) {
        std::cout << "immediate member, no descent needed\n";
        return;
    }
    std::cout << "q = " << skew_poly_to_string(res.q) << "\n";
    std::cout << "a_final = " << scalar_to_string(res.a_final) << "\n";
    for (const DescentStep& s : res.trace)
        std::cout << "le(Q)=" << multiindex_to_text(s.le_q) << "  a=" << scalar_to_string(s.a)
                  << "  b=" << scalar_to_string(s.b) << "  lt(P1)=" << skew_poly_to_string(s.p1)
                  << "\n";
}

/// Flat PID encoding matching a loaded ring: variable 0 is the PID
/// generator over a prime field or the rationals, the rest are the skew
/// variables, commutators [x_k, y] encode coefficient derivations.
PidEncoding encoding_of_ring(const RingPtr& ring) {
    const DomainPtr& dom = ring->domain();
    if (ring->arity() < 2)
        throw InvalidConstruction("as extract: ring must have the PID variable plus at least one "
                                  "skew variable");
    DomainPtr pid;
    if (dom->kind() == DomainKind::PrimeField)
        pid = Domain::poly_over_prime(dom->char_p(), ring->vars()[0]);
    else if (dom->kind() == DomainKind::Rationals)
        pid = Domain::poly_over_rationals(ring->vars()[0]);
    else
        throw InvalidConstruction("as extract: ring domain must be a prime field or the rationals");
    std::vector<std::string> xvars(ring->vars().begin() + 1, ring->vars().end());
    std::vector<Scalar> comm;
    for (uint32_t k = 1; k < ring->arity(); ++k) comm.push_back(ring->commutator(0, k));
    PidEncoding enc = PidEncoding::make(pid, xvars, comm);
    if (!enc.big->equals(*ring))
        throw InvalidConstruction("as extract: ring is not a flat PID encoding (variable 0 must "
                                  "be an ordinary polynomial variable under lex, twists identity, "
                                  "derivations zero, skew variables commuting)");
    return enc;
}

// ---- subcommand handlers ----

void cmd_ring_check(Ctx& ctx, const std::string& ring_path, uint32_t samples) {
    RingPtr ring = load_ring(ring_path);
    Rng rng(ctx.seed);
    RingDescriptor::Validation v = ring->validate(rng, samples);
    Json j;
    j["ring"] = ring_to_json(ring);
    j["validation"] = validation_to_json(v);
    emit(ctx, j);
    ctx.exit_code = v.ok ? 0 : 1;
}

void cmd_poly_mul(Ctx& ctx, const std::string& ring_path, const std::string& ft,
                  const std::string& gt) {
    RingPtr ring = load_ring(ring_path);
    SkewPoly h = parse_skew_poly(ring, ft) * parse_skew_poly(ring, gt);
    Json j;
    j["product"] = skew_poly_to_string(h);
    emit_value(ctx, j, "product");
}

void cmd_poly_divmod(Ctx& ctx, const std::string& ring_path, const std::string& ft,
                     const std::string& gt) {
    RingPtr ring = load_ring(ring_path);
    OreRingPtr ore = ore_of_ring(ring);
    auto [q, r] = right_divmod(to_ore(parse_skew_poly(ring, ft), ore),
                               to_ore(parse_skew_poly(ring, gt), ore));
    Json j;
    j["q"] = skew_poly_to_string(from_ore(q, ring));
    j["r"] = skew_poly_to_string(from_ore(r, ring));
    if (ctx.human)
        std::cout << "q = " << j["q"].get<std::string>() << "\nr = " << j["r"].get<std::string>()
                  << "\n";
    else
        emit(ctx, j);
}

void cmd_poly_lead(Ctx& ctx, const std::string& ring_path, const std::string& ft) {
    RingPtr ring = load_ring(ring_path);
    SkewPoly f = parse_skew_poly(ring, ft);
    LeadingData ld = leading(f);
    Json j;
    j["zero"] = ld.zero;
    if (ld.zero) {
        j["le"] = Json();
        j["lc"] = Json();
        j["lt"] = Json();
    } else {
        SkewPoly lt(ring);
        lt.add_term(ld.exp, ld.coeff);
        j["le"] = multiindex_to_json(ld.exp);
        j["lc"] = scalar_to_string(ld.coeff);
        j["lt"] = skew_poly_to_string(lt);
    }
    if (ctx.human) {
        if (ld.zero)
            std::cout << "zero polynomial\n";
        else
            std::cout << "le = " << multiindex_to_text(ld.exp)
                      << "\nlc = " << j["lc"].get<std::string>()
                      << "\nlt = " << j["lt"].get<std::string>() << "\n";
    } else {
        emit(ctx, j);
    }
}

void cmd_poly_nf(Ctx& ctx, const std::string& ring_path, const std::string& ft,
                 const std::string& ideal_path) {
    RingPtr ring = load_ring(ring_path);
    GroebnerBasis gb = buchberger(load_ideal(ring, ideal_path));
    SkewPoly nf = left_reduce(parse_skew_poly(ring, ft), gb.basis);
    Json j;
    j["nf"] = skew_poly_to_string(nf);
    j["member"] = nf.term_count() == 0;
    emit(ctx, j);
}

void cmd_order_cmp(Ctx& ctx, const std::string& name, const std::vector<uint32_t>& prio,
                   const std::string& ut, const std::string& vt) {
    TermOrderSpec o = order_from_args(name, prio);
    MultiIndex u = multiindex_from_text(ut), v = multiindex_from_text(vt);
    if (u.e.size() != v.e.size())
        throw ParseError("order cmp: multi-indices must have equal arity");
    Json j;
    j["cmp"] = cmp_name(o.compare(u, v));
    emit_value(ctx, j, "cmp");
}

void cmd_order_sanity(Ctx& ctx, const std::string& name, const std::vector<uint32_t>& prio,
                      uint32_t arity, uint64_t samples) {
    TermOrderSpec o = order_from_args(name, prio);
    Rng rng(ctx.seed);
    OrderSanityReport rep = order_sanity(o, arity, samples, rng);
    Json j;
    j["ok"] = rep.ok;
    j["samples"] = rep.samples;
    j["failure"] = rep.ok ? Json() : Json(rep.failure);
    Json w = Json::array();
    for (const MultiIndex& u : rep.witness) w.push_back(multiindex_to_json(u));
    j["witness"] = std::move(w);
    emit(ctx, j);
    ctx.exit_code = rep.ok ? 0 : 1;
}

void cmd_ideal_gb(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path) {
    RingPtr ring = load_ring(ring_path);
    emit(ctx, gb_to_json(buchberger(load_ideal(ring, ideal_path))));
}

void cmd_ideal_member(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path,
                      const std::string& ft, bool with_witness, int cap) {
    RingPtr ring = load_ring(ring_path);
    LeftIdeal I = load_ideal(ring, ideal_path);
    SkewPoly f = parse_skew_poly(ring, ft);
    Json j;
    j["member"] = member(f, I);
    j["witness"] = with_witness ? member_witness_to_json(member_bruteforce(f, I, cap)) : Json();
    emit(ctx, j);
}

void cmd_ideal_eliminate(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path,
                         const std::vector<std::string>& keep_names) {
    RingPtr ring = load_ring(ring_path);
    std::vector<uint32_t> keep;
    for (const std::string& name : keep_names) {
        if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
            keep.push_back(static_cast<uint32_t>(std::stoul(name)));
            continue;
        }
        const auto& vars = ring->vars();
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw ParseError("eliminate: unknown variable \"" + name + "\"");
        keep.push_back(static_cast<uint32_t>(it - vars.begin()));
    }
    std::vector<SkewPoly> gens = eliminate(load_ideal(ring, ideal_path), keep);
    Json j;
    j["keep"] = keep;
    j["generators"] = ideal_to_json(gens);
    emit(ctx, j);
}

void cmd_ideal_slice(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path,
                     uint32_t degree) {
    RingPtr ring = load_ring(ring_path);
    std::vector<SkewPoly> basis = slice_basis(load_ideal(ring, ideal_path), degree);
    Json j;
    j["degree"] = degree;
    j["dimension"] = basis.size();
    j["basis"] = ideal_to_json(basis);
    emit(ctx, j);
}

void cmd_ideal_staircase(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path) {
    RingPtr ring = load_ring(ring_path);
    emit(ctx, staircase_to_json(staircase(load_ideal(ring, ideal_path))));
}

void cmd_as_check(Ctx& ctx, const std::string& family_path, const std::string& rt, long grid) {
    IdealFamily fam = family_from_json(read_json_file(family_path));
    ASCheck c = as_check(fam, parse_scalar(fam.dom, rt), grid);
    emit(ctx, ascheck_to_json(c));
    ctx.exit_code = c.pass ? 0 : 1;
}

void cmd_as_witness(Ctx& ctx, const std::string& family_path, const std::string& ring_path,
                    uint32_t max_degree) {
    IdealFamily fam = family_from_json(read_json_file(family_path));
    ASWitness w = as_witness(fam, load_ring(ring_path), max_degree);
    emit(ctx, aswitness_to_json(w));
    ctx.exit_code = w.cert.pass ? 0 : 1;
}

void cmd_as_extract(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path,
                    const std::string& r0_text, uint32_t max_degree, uint32_t ceiling,
                    int ydeg_cap, const std::string& floor_text) {
    RingPtr ring = load_ring(ring_path);
    PidEncoding enc = encoding_of_ring(ring);
    LeftIdeal I = load_ideal(enc.big, ideal_path);
    GroebnerBasis gb = buchberger(I);
    IdealFamily fam = leading_family(gb, enc);

    ASWitness w;
    if (!r0_text.empty()) {
        w.r0 = parse_scalar(enc.pid, r0_text);
        w.cert = as_check(fam, w.r0, -1);
    } else {
        w = as_witness(fam, enc, max_degree);
    }

    ExtractOptions opts;
    opts.degree_ceiling = ceiling;
    opts.ydeg_cap = ydeg_cap;
    if (!floor_text.empty()) {
        MultiIndex floor = multiindex_from_text(floor_text);
        if (floor.e.size() != enc.nvars)
            throw ParseError("as extract: --floor arity must match the skew variable count");
        opts.support_floor = floor;
    }
    ExtractResult res = extract_intersection(I, w, enc, opts);
    Json j;
    j["witness"] = aswitness_to_json(w);
    j["extract"] = extract_to_json(res);
    if (ctx.human)
        print_trace_human(res);
    else
        emit(ctx, j);
}

void cmd_as_offenders(Ctx& ctx, const std::string& domain_path, const std::string& r0_text) {
    DomainPtr dom = domain_from_json(read_json_file(domain_path));
    Scalar r0 = parse_scalar(dom, r0_text);
    std::vector<Scalar> off = transporter_offenders(r0);
    Json offs = Json::array();
    for (const Scalar& a : off) offs.push_back(scalar_to_string(a));
    Json j;
    j["r0"] = scalar_to_string(r0);
    j["offenders"] = std::move(offs);
    emit(ctx, j);
}

void cmd_center_compute(Ctx& ctx, const std::string& ring_path, uint32_t cap) {
    emit(ctx, center_to_json(center_upto(load_ring(ring_path), cap)));
}

void cmd_center_invariant(Ctx& ctx, const std::string& ring_path, uint32_t var) {
    RingPtr ring = load_ring(ring_path);
    if (var >= ring->arity()) throw ParseError("invariant-field: variable index out of range");
    InvariantField f = invariant_field(ring->domain(), ring->sigma(var), ring->delta(var));
    emit(ctx, invariant_to_json(f));
}

void cmd_module_build(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path) {
    RingPtr ring = load_ring(ring_path);
    emit(ctx, module_to_json(quotient_module(load_ideal(ring, ideal_path))));
}

void cmd_module_dim(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path) {
    RingPtr ring = load_ring(ring_path);
    StaircaseReport st = staircase(load_ideal(ring, ideal_path));
    Json j;
    j["finite"] = st.finite;
    j["dim"] = st.finite ? Json(st.dimension) : Json();
    j["witness_axis"] = st.finite ? Json() : Json(st.witness_axis);
    emit(ctx, j);
}

void cmd_module_simple(Ctx& ctx, const std::string& ring_path, const std::string& ideal_path,
                       uint64_t bound) {
    RingPtr ring = load_ring(ring_path);
    SemilinearModule M = quotient_module(load_ideal(ring, ideal_path));
    SimplicityReport rep = is_simple(M, bound);
    Json j = simplicity_to_json(rep);
    j["dim"] = M.dim;
    emit(ctx, j);
    ctx.exit_code = rep.simple() ? 0 : 1;
}

void cmd_demo_frobenius(Ctx& ctx, uint64_t p, uint32_t k, uint32_t n, uint32_t bound,
                        uint64_t element_bound) {
    PipelineReport rep = frobenius_pipeline(p, k, n, bound, element_bound);
    emit(ctx, pipeline_to_json(rep));
    bool ok = rep.power_central && rep.all_intersections_nonzero && rep.simple_count > 0;
    ctx.exit_code = ok ? 0 : 1;
}

void cmd_demo_weyl(Ctx& ctx, uint32_t max_degree, uint32_t cap) {
    DomainPtr dom = Domain::rationals();
    std::map<std::pair<uint32_t, uint32_t>, Scalar> comm;
    comm[{0, 1}] = dom->from_int(1);
    RingPtr ring = RingDescriptor::make_uniform(dom, {"x", "t"}, EndoSpec::identity(dom),
                                                DerSpec::zero(dom), comm,
                                                TermOrderSpec::deglex());
    LeftIdeal I = LeftIdeal::make(ring, {parse_skew_poly(ring, "t")});

    bool one_in = member(parse_skew_poly(ring, "1"), I);

    // dim(span A cap span B) = rk A + rk B - rk(A stacked on B), with
    // A = degree slice of I and B = the x-only monomials, as coefficient
    // rows over all monomials of total degree <= d.
    Json dims = Json::array();
    bool all_zero = true;
    for (uint32_t d = 0; d <= max_degree; ++d) {
        std::vector<MultiIndex> monos = monomials_up_to(ring, d);
        auto row_of = [&](const SkewPoly& f) {
            std::vector<Scalar> row;
            for (const MultiIndex& u : monos) row.push_back(f.coeff(u));
            return row;
        };
        std::vector<SkewPoly> A = slice_basis(I, d);
        Mat ma = Mat::zero(dom, A.size(), monos.size());
        Mat both = Mat::zero(dom, A.size() + d + 1, monos.size());
        for (size_t i = 0; i < A.size(); ++i) {
            std::vector<Scalar> row = row_of(A[i]);
            for (size_t c = 0; c < row.size(); ++c) both.at(i, c) = ma.at(i, c) = row[c];
        }
        Mat mb = Mat::zero(dom, d + 1, monos.size());
        for (uint32_t a = 0; a <= d; ++a) {
            SkewPoly xa(ring);
            xa.add_term(MultiIndex{{a, 0}}, dom->from_int(1));
            std::vector<Scalar> row = row_of(xa);
            for (size_t c = 0; c < row.size(); ++c)
                both.at(A.size() + a, c) = mb.at(a, c) = row[c];
        }
        size_t cut = mat_rank(ma) + mat_rank(mb) - mat_rank(both);
        dims.push_back(cut);
        all_zero = all_zero && cut == 0;
    }

    CenterReport center = center_upto(ring, cap);

    Json j;
    j["one_in_It"] = one_in;
    j["slice_intersection_dims"] = std::move(dims);
    j["center_nonconstant"] = center.h0 ? Json(skew_poly_to_string(*center.h0)) : Json();
    emit(ctx, j);
    ctx.exit_code = (!one_in && all_zero && !center.h0) ? 0 : 1;
}

void cmd_demo_descent(Ctx& ctx) {
    PidEncoding enc = PidEncoding::make(Domain::poly_over_prime(2, "y"), {"x1"});
    LeftIdeal I = LeftIdeal::make(
        enc.big, {parse_skew_poly(enc.big, "x1 + y"), parse_skew_poly(enc.big, "y^2 + y + 1")});
    GroebnerBasis gb = buchberger(I);
    ASWitness w = as_witness(leading_family(gb, enc), enc);
    ExtractOptions opts;
    opts.support_floor = MultiIndex{{1}}; // skip constant-support solutions to force a descent
    ExtractResult res = extract_intersection(I, w, enc, opts);
    Json j;
    j["ideal"] = ideal_to_json(I.gens);
    j["witness"] = aswitness_to_json(w);
    j["extract"] = extract_to_json(res);
    if (ctx.human)
        print_trace_human(res);
    else
        emit(ctx, j);
    ctx.exit_code = (w.cert.pass && !res.trace.empty()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    CLI::App app{"skew polynomial rings in several variables: arithmetic, term orders, left "
                 "ideals, extension-condition checks, centers, and semilinear modules"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted anywhere on the line
    app.set_help_all_flag("--help-all", "print the full subcommand tree");
    app.add_option("--seed", ctx.seed, "seed for randomized checks")->capture_default_str();
    app.add_flag("--human", ctx.human, "human-readable formatting of the same data");

    // shared option storage; each subcommand binds the fields it uses
    std::string ring_path, ideal_path, family_path, domain_path;
    std::string f_text, g_text, r_text, u_text, v_text, order_name, floor_text;
    std::vector<uint32_t> prio;
    std::vector<std::string> keep;
    uint32_t samples32 = 50, arity = 2, degree = 0, cap = 6, max_degree = 8, ceiling = 8, var = 0;
    uint64_t samples64 = 2000, bound = uint64_t(1) << 16, pp = 2, element_bound = uint64_t(1) << 16;
    uint32_t kk = 2, nn = 2, dbound = 2, weyl_deg = 10, weyl_cap = 6;
    int cap_i = -1, grid = -1, ydeg_cap = -1;
    bool with_witness = false;

    auto ring_opt = [&](CLI::App* c) {
        c->add_option("--ring", ring_path, "ring descriptor JSON file")->required();
    };
    auto ideal_opt = [&](CLI::App* c) {
        c->add_option("--ideal", ideal_path, "ideal JSON file (array of polynomial strings)")
            ->required();
    };

    // ring
    CLI::App* ring = app.add_subcommand("ring", "ring descriptor operations");
    ring->require_subcommand(1);
    CLI::App* ring_check = ring->add_subcommand("check", "validate the descriptor laws");
    ring_opt(ring_check);
    ring_check->add_option("--samples", samples32, "sampled law checks")->capture_default_str();
    ring_check->callback([&] { cmd_ring_check(ctx, ring_path, samples32); });

    // poly
    CLI::App* poly = app.add_subcommand("poly", "polynomial arithmetic");
    poly->require_subcommand(1);
    CLI::App* poly_mul = poly->add_subcommand("mul", "product of two polynomials");
    ring_opt(poly_mul);
    poly_mul->add_option("f", f_text, "left factor")->required();
    poly_mul->add_option("g", g_text, "right factor")->required();
    poly_mul->callback([&] { cmd_poly_mul(ctx, ring_path, f_text, g_text); });
    CLI::App* poly_divmod = poly->add_subcommand("divmod", "right division f = q g + r (one "
                                                           "variable)");
    ring_opt(poly_divmod);
    poly_divmod->add_option("f", f_text, "dividend")->required();
    poly_divmod->add_option("g", g_text, "divisor")->required();
    poly_divmod->callback([&] { cmd_poly_divmod(ctx, ring_path, f_text, g_text); });
    CLI::App* poly_lead = poly->add_subcommand("lead", "leading exponent, coefficient, term");
    ring_opt(poly_lead);
    poly_lead->add_option("f", f_text, "polynomial")->required();
    poly_lead->callback([&] { cmd_poly_lead(ctx, ring_path, f_text); });
    CLI::App* poly_nf = poly->add_subcommand("nf", "normal form modulo a left ideal");
    ring_opt(poly_nf);
    ideal_opt(poly_nf);
    poly_nf->add_option("f", f_text, "polynomial")->required();
    poly_nf->callback([&] { cmd_poly_nf(ctx, ring_path, f_text, ideal_path); });

    // order
    CLI::App* order = app.add_subcommand("order", "term order operations");
    order->require_subcommand(1);
    CLI::App* order_cmp = order->add_subcommand("cmp", "compare two multi-indices");
    order_cmp->add_option("order", order_name, "lex or deglex")->required();
    order_cmp->add_option("u", u_text, "multi-index, e.g. \"(5,0)\"")->required();
    order_cmp->add_option("v", v_text, "multi-index")->required();
    order_cmp->add_option("--prio", prio, "priority list, most significant position first");
    order_cmp->callback([&] { cmd_order_cmp(ctx, order_name, prio, u_text, v_text); });
    CLI::App* order_sane = order->add_subcommand("sanity", "randomized term-order axiom checks");
    order_sane->add_option("order", order_name, "lex or deglex")->required();
    order_sane->add_option("--arity", arity, "number of variables")->required();
    order_sane->add_option("--samples", samples64, "sample count")->capture_default_str();
    order_sane->add_option("--prio", prio, "priority list, most significant position first");
    order_sane->callback([&] { cmd_order_sanity(ctx, order_name, prio, arity, samples64); });

    // ideal
    CLI::App* ideal = app.add_subcommand("ideal", "left ideal computations");
    ideal->require_subcommand(1);
    CLI::App* ideal_gb = ideal->add_subcommand("gb", "left Groebner basis");
    ring_opt(ideal_gb);
    ideal_opt(ideal_gb);
    ideal_gb->callback([&] { cmd_ideal_gb(ctx, ring_path, ideal_path); });
    CLI::App* ideal_member = ideal->add_subcommand("member", "left ideal membership");
    ring_opt(ideal_member);
    ideal_opt(ideal_member);
    ideal_member->add_option("f", f_text, "polynomial")->required();
    ideal_member->add_flag("--witness", with_witness, "also search an explicit combination");
    ideal_member->add_option("--cap", cap_i, "multiplier degree cap for the witness search")
        ->capture_default_str();
    ideal_member->callback(
        [&] { cmd_ideal_member(ctx, ring_path, ideal_path, f_text, with_witness, cap_i); });
    CLI::App* ideal_elim = ideal->add_subcommand("eliminate", "intersect with a variable subring");
    ring_opt(ideal_elim);
    ideal_opt(ideal_elim);
    ideal_elim->add_option("--keep", keep, "variables to keep (names or positions)")->required();
    ideal_elim->callback([&] { cmd_ideal_eliminate(ctx, ring_path, ideal_path, keep); });
    CLI::App* ideal_slice = ideal->add_subcommand("slice", "vector-space basis of a degree slice");
    ring_opt(ideal_slice);
    ideal_opt(ideal_slice);
    ideal_slice->add_option("--degree", degree, "total degree bound")->required();
    ideal_slice->callback([&] { cmd_ideal_slice(ctx, ring_path, ideal_path, degree); });
    CLI::App* ideal_stairs = ideal->add_subcommand("staircase", "leading-exponent staircase and "
                                                                "quotient dimension");
    ring_opt(ideal_stairs);
    ideal_opt(ideal_stairs);
    ideal_stairs->callback([&] { cmd_ideal_staircase(ctx, ring_path, ideal_path); });

    // as (extension condition)
    CLI::App* as = app.add_subcommand("as", "extension-condition checks, witnesses, descent");
    as->require_subcommand(1);
    CLI::App* as_chk = as->add_subcommand("check", "certify a candidate r against a family");
    as_chk->add_option("--family", family_path, "ideal family JSON file")->required();
    as_chk->add_option("--r", r_text, "candidate element of the coefficient ring")->required();
    as_chk->add_option("--grid", grid, "transporter grid bound (-1: automatic)")
        ->capture_default_str();
    as_chk->callback([&] { cmd_as_check(ctx, family_path, r_text, grid); });
    CLI::App* as_wit = as->add_subcommand("witness", "search the maximal-ideal stream for a "
                                                     "certified r");
    as_wit->add_option("--family", family_path, "ideal family JSON file")->required();
    ring_opt(as_wit);
    as_wit->add_option("--max-degree", max_degree, "stream degree bound")->capture_default_str();
    as_wit->callback([&] { cmd_as_witness(ctx, family_path, ring_path, max_degree); });
    CLI::App* as_ext = as->add_subcommand("extract", "constructive nonzero element of the "
                                                     "coefficient-ring intersection");
    ring_opt(as_ext);
    ideal_opt(as_ext);
    as_ext->add_option("--r0", r_text, "witness element (default: search the stream)");
    as_ext->add_option("--max-degree", max_degree, "witness stream degree bound")
        ->capture_default_str();
    as_ext->add_option("--ceiling", ceiling, "largest skew lead searched")->capture_default_str();
    as_ext->add_option("--ydeg-cap", ydeg_cap, "coefficient degree cap (-1: automatic)")
        ->capture_default_str();
    as_ext->add_option("--floor", floor_text, "restrict solutions to skew support >= this "
                                              "multi-index");
    as_ext->callback([&] {
        cmd_as_extract(ctx, ring_path, ideal_path, r_text, max_degree, ceiling, ydeg_cap,
                       floor_text);
    });
    CLI::App* as_off = as->add_subcommand("offenders", "transporter offenders of r0 over F_p[y]");
    as_off->add_option("--domain", domain_path, "domain descriptor JSON file")->required();
    as_off->add_option("--r0", r_text, "nonzero element of F_p[y]")->required();
    as_off->callback([&] { cmd_as_offenders(ctx, domain_path, r_text); });

    // center
    CLI::App* center = app.add_subcommand("center", "central elements and invariant subfields");
    center->require_subcommand(1);
    CLI::App* center_c = center->add_subcommand("compute", "central elements up to a degree cap");
    ring_opt(center_c);
    center_c->add_option("--cap", cap, "total degree cap")->capture_default_str();
    center_c->callback([&] { cmd_center_compute(ctx, ring_path, cap); });
    CLI::App* center_i = center->add_subcommand("invariant-field", "fixed subfield of one "
                                                                   "variable's twist and "
                                                                   "derivation");
    ring_opt(center_i);
    center_i->add_option("--var", var, "variable index")->capture_default_str();
    center_i->callback([&] { cmd_center_invariant(ctx, ring_path, var); });

    // module
    CLI::App* module = app.add_subcommand("module", "semilinear quotient modules");
    module->require_subcommand(1);
    CLI::App* module_b = module->add_subcommand("build", "quotient module of a left ideal");
    ring_opt(module_b);
    ideal_opt(module_b);
    module_b->callback([&] { cmd_module_build(ctx, ring_path, ideal_path); });
    CLI::App* module_d = module->add_subcommand("dim", "quotient dimension or witness of "
                                                       "infinitude");
    ring_opt(module_d);
    ideal_opt(module_d);
    module_d->callback([&] { cmd_module_dim(ctx, ring_path, ideal_path); });
    CLI::App* module_s = module->add_subcommand("simple", "exhaustive simplicity test");
    ring_opt(module_s);
    ideal_opt(module_s);
    module_s->add_option("--bound", bound, "enumeration budget")->capture_default_str();
    module_s->callback([&] { cmd_module_simple(ctx, ring_path, ideal_path, bound); });

    // demo
    CLI::App* demo = app.add_subcommand("demo", "end-to-end scenario reports");
    demo->require_subcommand(1);
    CLI::App* demo_f = demo->add_subcommand("frobenius", "finite-field pipeline: centers, "
                                                         "maximal ideals, simple quotients");
    demo_f->add_option("--p", pp, "characteristic")->capture_default_str();
    demo_f->add_option("--k", kk, "extension degree")->capture_default_str();
    demo_f->add_option("--n", nn, "number of variables")->capture_default_str();
    demo_f->add_option("--bound", dbound, "seed degree bound")->capture_default_str();
    demo_f->add_option("--element-bound", element_bound, "enumeration budget")
        ->capture_default_str();
    demo_f->callback([&] { cmd_demo_frobenius(ctx, pp, kk, nn, dbound, element_bound); });
    CLI::App* demo_w = demo->add_subcommand("weyl", "negative control: the Weyl algebra");
    demo_w->add_option("--max-degree", weyl_deg, "largest slice degree")->capture_default_str();
    demo_w->add_option("--cap", weyl_cap, "center search cap")->capture_default_str();
    demo_w->callback([&] { cmd_demo_weyl(ctx, weyl_deg, weyl_cap); });
    CLI::App* demo_d = demo->add_subcommand("descent", "worked descent to a coefficient-ring "
                                                       "element");
    demo_d->callback([&] { cmd_demo_descent(ctx); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << error_to_json(e.what()).dump() << "\n";
        std::cerr << "input grammars are documented in docs/formats.md; see --help-all\n";
        return 2;
    } catch (const Error& e) {
        std::cout << error_to_json(e.what()).dump() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << error_to_json(e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_to_json(e.what()).dump() << "\n";
        return 2;
    }
    return ctx.exit_code;
}
