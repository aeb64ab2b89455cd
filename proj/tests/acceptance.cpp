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

// Acceptance battery: one pass/fail line per criterion, exit 0 only when
// every criterion passes. Sample counts, caps, and time limits are pinned
// below; randomized parts run on fixed seeds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "skewpoly/amitsur.hpp"
#include "skewpoly/errors.hpp"
#include "skewpoly/jsonio.hpp"
#include "skewpoly/leftideal.hpp"
#include "skewpoly/linalg.hpp"
#include "skewpoly/modcenter.hpp"
#include "skewpoly/monomial.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/pid.hpp"
#include "skewpoly/rng.hpp"
#include "skewpoly/scalar.hpp"
#include "skewpoly/skewring.hpp"
#include "skewpoly/textio.hpp"

using namespace skewpoly;

namespace {

// pinned budgets
constexpr uint64_t kLeadPairs = 10000;       // random pairs per ring, criterion 1
constexpr double kLeadTimeLimit = 30.0;      // seconds, criterion 1
constexpr uint64_t kHomPairs = 1000;         // homomorphism samples per map, criterion 2
constexpr uint64_t kDivPairs = 10000;        // division samples, criterion 3
constexpr int kIdealsPerRing = 200;          // random ideals per ring, criterion 4
constexpr int kMemberGenDeg = 3;             // generator degree cap, criterion 4
constexpr int kMemberCap = 6;                // witness multiplier cap, criterion 4
constexpr double kMemberTimeLimit = 120.0;   // seconds, criterion 4
constexpr uint32_t kOffenderDegF2 = 5;       // exhaustive degree caps, criterion 5
constexpr uint32_t kOffenderDegF3 = 3;
constexpr int kMaximalIdeals = 20;           // constructed ideals, criterion 6
constexpr uint32_t kWeylSliceDeg = 10;       // slice degrees checked, criterion 7
constexpr uint32_t kWeylCenterCap = 6;       // center search cap, criterion 7
constexpr uint64_t kPipelineMinMaximal = 5;  // criterion 9
constexpr uint64_t kPipelineDimCap = 8;
constexpr double kPipelineTimeLimit = 300.0; // seconds, criterion 9
constexpr uint64_t kSeed = 20260813;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int g_failures = 0;

void report(int number, const std::string& label, const Outcome& o, double elapsed) {
    std::printf("criterion %2d: %-58s %s  %6.2fs%s%s\n", number, label.c_str(),
                o.pass ? "PASS" : "FAIL", elapsed, o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++g_failures;
}

RingPtr shipped_ring(const std::string& name) {
    std::ifstream in(std::string(RINGS_DIR) + "/" + name);
    if (!in) throw Error("missing ring file " + name);
    return ring_from_json(Json::parse(in));
}

/// Random nonzero polynomial with total degree <= cap.
SkewPoly random_capped(const RingPtr& ring, Rng& rng, uint32_t cap, uint32_t max_terms) {
    for (;;) {
        SkewPoly f = random_skew_poly(ring, rng, cap, max_terms, true);
        SkewPoly g(ring);
        for (const auto& [u, c] : f.terms()) {
            uint32_t total = 0;
            for (uint32_t e : u.e) total += e;
            if (total <= cap) g.add_term(u, c);
        }
        if (g.term_count() > 0) return g;
    }
}

// 1: leading exponents add under multiplication, on every listed ring.
void criterion_lead_additivity(const std::vector<RingPtr>& rings) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    Rng rng(kSeed);
    for (const RingPtr& ring : rings) {
        for (uint64_t t = 0; t < kLeadPairs; ++t) {
            SkewPoly f = random_skew_poly(ring, rng, 3, 4, true);
            SkewPoly g = random_skew_poly(ring, rng, 3, 4, true);
            LeadingData lf = leading(f), lg = leading(g), lh = leading(f * g);
            MultiIndex want = lf.exp;
            for (size_t i = 0; i < want.e.size(); ++i) want.e[i] += lg.exp.e[i];
            if (lh.zero || !(lh.exp == want)) {
                o.fail("le(fg) != le(f)+le(g) in " + ring->describe());
                break;
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= kLeadTimeLimit) o.fail("time limit exceeded");
    report(1, "leading-exponent additivity, 4 rings x 10000 pairs", o, dt);
}

// 2: the structural twist extractor recovers sigma on the shipped
// descriptors, and the recovered maps are ring homomorphisms.
void criterion_structural_endo(const std::vector<RingPtr>& rings) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    Rng rng(kSeed + 1);
    for (const RingPtr& ring : rings) {
        for (uint32_t k = 0; k < ring->arity() && o.pass; ++k) {
            EndoSpec got = structural_endo(ring, k);
            if (!got.same_map(ring->sigma(k))) {
                o.fail("recovered map differs from sigma in " + ring->describe());
                break;
            }
            const DomainPtr& dom = ring->domain();
            for (uint64_t t = 0; t < kHomPairs; ++t) {
                Scalar a = random_scalar(dom, rng), b = random_scalar(dom, rng);
                if (!(got.apply(a * b) == got.apply(a) * got.apply(b)) ||
                    !(got.apply(a + b) == got.apply(a) + got.apply(b))) {
                    o.fail("homomorphism law fails in " + ring->describe());
                    break;
                }
            }
        }
    }
    report(2, "structural twist recovery + homomorphism laws, 6 rings", o, seconds_since(t0));
}

// 3: right division contract over GF(4)[x; Frobenius].
void criterion_division() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    DomainPtr gf4 = Domain::galois_field(2, 2, {1, 1, 1}, "w");
    OreRingPtr ore = OreRing::make(gf4, EndoSpec::frobenius(gf4, 1), DerSpec::zero(gf4), "x");
    Rng rng(kSeed + 2);
    auto random_ore = [&](int maxdeg, bool nonzero) {
        for (;;) {
            std::vector<Scalar> c;
            int d = static_cast<int>(rng.below(static_cast<uint64_t>(maxdeg + 1)));
            for (int i = 0; i <= d; ++i) c.push_back(gf4->element_at(rng.below(4)));
            OrePoly f = OrePoly::from_coeffs(ore, c);
            if (!nonzero || f.degree() >= 0) return f;
        }
    };
    for (uint64_t t = 0; t < kDivPairs; ++t) {
        OrePoly f = random_ore(6, false), g = random_ore(4, true);
        auto [q, r] = right_divmod(f, g);
        if (!(ore_add(ore_mul(q, g), r) == f) || r.degree() >= g.degree()) {
            o.fail("f != q g + r or deg r >= deg g at sample " + std::to_string(t));
            break;
        }
    }
    report(3, "right division re-multiplication, 10000 samples", o, seconds_since(t0));
}

// 4: Groebner membership against the degree-capped linear-solve oracle.
void criterion_member_oracle(const std::vector<RingPtr>& rings) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    Rng rng(kSeed + 3);
    for (const RingPtr& ring : rings) {
        for (int t = 0; t < kIdealsPerRing && o.pass; ++t) {
            std::vector<SkewPoly> gens;
            uint32_t count = 1 + static_cast<uint32_t>(rng.below(3));
            for (uint32_t i = 0; i < count; ++i)
                gens.push_back(random_capped(ring, rng, kMemberGenDeg, 3));
            LeftIdeal I = LeftIdeal::make(ring, gens);

            SkewPoly f(ring);
            if (t % 2 == 0) {
                f = random_capped(ring, rng, kMemberGenDeg, 3);
            } else {
                // scalar combination of the generators: a guaranteed member
                // within the tested degree window
                for (const SkewPoly& g : gens) {
                    Scalar c = random_scalar(ring->domain(), rng, 2);
                    SkewPoly cg(ring);
                    for (const auto& [u, a] : g.terms()) cg.add_term(u, c * a);
                    f = f + cg;
                }
                if (f.term_count() == 0) f = gens.front();
            }

            bool via_gb = member(f, I);
            MemberWitness w = member_bruteforce(f, I, kMemberCap);
            if (via_gb != w.yes) {
                o.fail("membership disagreement in " + ring->describe());
                break;
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= kMemberTimeLimit) o.fail("time limit exceeded");
    report(4, "membership vs bruteforce oracle, 4 rings x 200 ideals", o, dt);
}

// 5: transporter offenders equal the monic irreducible factor sets,
// exhaustively over small degrees.
void criterion_offenders() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    auto run_field = [&](uint64_t p, uint32_t degcap) {
        DomainPtr dom = Domain::poly_over_prime(p, "y");
        // all monic polynomials of degree d: odometer over the low coefficients
        auto each_monic = [&](uint32_t d, auto&& fn) {
            std::vector<long long> c(d + 1, 0);
            c[d] = 1;
            for (;;) {
                fn(dom->poly_from_ints(c));
                size_t i = 0;
                while (i < d && ++c[i] == static_cast<long long>(p)) c[i++] = 0;
                if (i == d) break;
            }
        };
        for (uint32_t d = 1; d <= degcap && o.pass; ++d) {
            each_monic(d, [&](const Scalar& r0) {
                if (!o.pass) return;
                std::set<std::string> expected;
                for (uint32_t e = 1; e <= d; ++e)
                    each_monic(e, [&](const Scalar& q) {
                        if (pid_irreducible(q) && pid_divides(q, r0))
                            expected.insert(scalar_to_string(q));
                    });
                std::set<std::string> got;
                for (const Scalar& q : transporter_offenders(r0)) got.insert(scalar_to_string(q));
                if (got != expected)
                    o.fail("offender set mismatch at r0 = " + scalar_to_string(r0) + " over F_" +
                           std::to_string(p));
            });
        }
    };
    run_field(2, kOffenderDegF2);
    run_field(3, kOffenderDegF3);
    report(5, "offenders = irreducible factor sets, F2 deg<=5, F3 deg<=3", o, seconds_since(t0));
}

// 6: constructed maximal ideals of F2[y][x1,x2]: nonzero elimination and a
// certified extraction with a strictly decreasing descent trace.
void criterion_extraction() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    DomainPtr pid = Domain::poly_over_prime(2, "y");
    PidEncoding enc = PidEncoding::make(pid, {"x1", "x2"});
    TermOrderSpec xorder = TermOrderSpec::lex();

    // ideals <x1 + u1, x2 + u2, p> with p monic irreducible and the u_i
    // nonzero residues mod p, hence invertible: the quotient is F2[y]/(p)
    struct Case {
        Scalar u1, u2, p;
    };
    std::vector<Case> cases;
    MaximalIdealStream stream(pid);
    while (cases.size() < static_cast<size_t>(kMaximalIdeals)) {
        Scalar p = stream.next();
        std::vector<Scalar> residues;
        uint32_t d = static_cast<uint32_t>(poly_degree(p));
        std::vector<long long> c(d, 0);
        for (;;) {
            size_t i = 0;
            while (i < d && ++c[i] == 2) c[i++] = 0;
            if (i == d) break;
            residues.push_back(pid->poly_from_ints(c));
        }
        for (const Scalar& u1 : residues)
            for (const Scalar& u2 : residues) {
                if (cases.size() < static_cast<size_t>(kMaximalIdeals))
                    cases.push_back({u1, u2, p});
            }
    }

    for (const Case& cs : cases) {
        if (!o.pass) break;
        SkewPoly g1 = parse_skew_poly(enc.big, "x1") + enc.lift(cs.u1);
        SkewPoly g2 = parse_skew_poly(enc.big, "x2") + enc.lift(cs.u2);
        LeftIdeal I = LeftIdeal::make(enc.big, {g1, g2, enc.lift(cs.p)});
        std::string name = "<" + skew_poly_to_string(g1) + ", " + skew_poly_to_string(g2) + ", " +
                           scalar_to_string(cs.p) + ">";

        std::vector<SkewPoly> elim = eliminate(I, {0});
        bool nonzero_elim = false;
        for (const SkewPoly& e : elim) nonzero_elim = nonzero_elim || e.term_count() > 0;
        if (!nonzero_elim) {
            o.fail("elimination to the coefficient ring is zero for " + name);
            break;
        }

        GroebnerBasis gb = buchberger(I);
        ASWitness w;
        try {
            w = as_witness(leading_family(gb, enc), enc);
        } catch (const Error& e) {
            o.fail("no certified witness for " + name + ": " + e.what());
            break;
        }
        if (!w.cert.pass) {
            o.fail("witness certification failed for " + name);
            break;
        }

        ExtractOptions opts;
        opts.support_floor = MultiIndex{{1, 0}};
        ExtractResult res;
        try {
            res = extract_intersection(I, w, enc, opts);
        } catch (const Error& e) {
            o.fail("extraction failed for " + name + ": " + e.what());
            break;
        }
        if (is_zero(res.element)) {
            o.fail("extracted element is zero for " + name);
            break;
        }
        if (left_reduce(enc.lift(res.element), gb.basis).term_count() != 0) {
            o.fail("extracted element is not a member for " + name);
            break;
        }
        if (res.trace.empty()) {
            o.fail("descent trace is empty for " + name);
            break;
        }
        for (size_t i = 0; i + 1 < res.trace.size(); ++i)
            if (!xorder.less(res.trace[i + 1].le_q, res.trace[i].le_q)) {
                o.fail("descent trace is not strictly decreasing for " + name);
                break;
            }
    }
    report(6, "certified descent on 20 constructed maximal ideals", o, seconds_since(t0));
}

// 7: the Weyl algebra negative control: 1 is not in S t, the ideal meets
// Q[x] trivially degree by degree, and no nonconstant center element.
void criterion_weyl_control(const RingPtr& weyl) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    const DomainPtr& dom = weyl->domain();
    LeftIdeal I = LeftIdeal::make(weyl, {parse_skew_poly(weyl, "t")});
    if (member(parse_skew_poly(weyl, "1"), I)) o.fail("1 found in S t");

    for (uint32_t d = 0; d <= kWeylSliceDeg && o.pass; ++d) {
        std::vector<MultiIndex> monos = monomials_up_to(weyl, d);
        std::vector<SkewPoly> A = slice_basis(I, d);
        Mat ma = Mat::zero(dom, A.size(), monos.size());
        Mat mb = Mat::zero(dom, d + 1, monos.size());
        Mat both = Mat::zero(dom, A.size() + d + 1, monos.size());
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t c = 0; c < monos.size(); ++c)
                both.at(i, c) = ma.at(i, c) = A[i].coeff(monos[c]);
        for (uint32_t a = 0; a <= d; ++a) {
            SkewPoly xa(weyl);
            xa.add_term(MultiIndex{{a, 0}}, dom->from_int(1));
            for (size_t c = 0; c < monos.size(); ++c)
                both.at(A.size() + a, c) = mb.at(a, c) = xa.coeff(monos[c]);
        }
        size_t cut = mat_rank(ma) + mat_rank(mb) - mat_rank(both);
        if (cut != 0) o.fail("S t meets Q[x] at degree " + std::to_string(d));
    }

    CenterReport center = center_upto(weyl, kWeylCenterCap);
    if (center.h0) o.fail("nonconstant central element " + skew_poly_to_string(*center.h0));
    report(7, "Weyl negative control: membership, slices, center", o, seconds_since(t0));
}

// 8: the center of GF(p^k)[x; Frobenius] up to degree 2k is spanned by
// exactly {1, x^k, x^2k}.
void criterion_frobenius_center() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    const std::pair<uint64_t, uint32_t> cases[] = {{2, 2}, {3, 2}, {2, 3}};
    for (auto [p, k] : cases) {
        DomainPtr F = galois_field_default(p, k);
        OreRingPtr ore = OreRing::make(F, EndoSpec::frobenius(F, 1), DerSpec::zero(F), "x");
        CenterReport rep = center_upto(ore, 2 * k);
        std::vector<std::string> got;
        for (const SkewPoly& b : rep.basis) got.push_back(skew_poly_to_string(b));
        std::vector<std::string> want = {"1", "x^" + std::to_string(k),
                                         "x^" + std::to_string(2 * k)};
        if (got != want)
            o.fail("center basis mismatch for GF(" + std::to_string(p) + "^" + std::to_string(k) +
                   ")");
    }
    report(8, "center of GF(p^k)[x;Frob] up to 2k is {1, x^k, x^2k}", o, seconds_since(t0));
}

// 9: the finite-field pipeline constructs enough distinct maximal ideals,
// with small simple quotients and nonzero per-variable intersections.
PipelineReport criterion_pipeline() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    PipelineReport rep = frobenius_pipeline(2, 2, 2, 2);
    if (!rep.power_central) o.fail("x^k not certified central and minimal");
    if (rep.distinct_maximal < kPipelineMinMaximal)
        o.fail("only " + std::to_string(rep.distinct_maximal) + " distinct maximal ideals");
    if (rep.simple_count < kPipelineMinMaximal)
        o.fail("only " + std::to_string(rep.simple_count) + " certified simple quotients");
    if (!rep.all_intersections_nonzero) o.fail("an elimination intersection is zero");
    for (const PipelineCase& pc : rep.cases) {
        if (pc.verdict != SimplicityReport::Verdict::Simple) continue;
        if (!pc.finite || pc.dim > kPipelineDimCap) {
            o.fail("a simple quotient is missing or exceeds dimension " +
                   std::to_string(kPipelineDimCap));
            break;
        }
        for (int64_t d : pc.univariate_member_degree)
            if (d < 1) {
                o.fail("a univariate intersection is trivial");
                break;
            }
    }
    double dt = seconds_since(t0);
    if (dt >= kPipelineTimeLimit) o.fail("time limit exceeded");
    report(9, "finite-field pipeline: >=5 maximal ideals, dims <= 8", o, dt);
    return rep;
}

// 10: every module constructed anywhere in the battery satisfies the
// semilinear and exchange laws exactly.
void criterion_module_laws(const PipelineReport& pipeline) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::vector<SemilinearModule> modules;

    DomainPtr pid = Domain::poly_over_prime(2, "y");
    PidEncoding enc = PidEncoding::make(pid, {"x1", "x2"});
    MaximalIdealStream stream(pid);
    for (int i = 0; i < 4; ++i) {
        Scalar p = stream.next();
        SkewPoly g1 = parse_skew_poly(enc.big, "x1") + enc.lift(pid->from_int(1));
        SkewPoly g2 = parse_skew_poly(enc.big, "x2") + enc.lift(pid->from_int(1));
        modules.push_back(quotient_module(LeftIdeal::make(enc.big, {g1, g2, enc.lift(p)})));
    }

    RingPtr gf4 = shipped_ring("gf4_frob_lex.json");
    modules.push_back(quotient_module(LeftIdeal::make(
        gf4, {parse_skew_poly(gf4, "x1+1"), parse_skew_poly(gf4, "x2^3+x2+1")})));

    // characteristic-2 matrix representation of the exchange relation
    DomainPtr f2 = Domain::prime_field(2);
    std::map<std::pair<uint32_t, uint32_t>, Scalar> comm;
    comm[{0, 1}] = f2->from_int(1);
    RingPtr f2w = RingDescriptor::make_uniform(f2, {"x", "t"}, EndoSpec::identity(f2),
                                               DerSpec::zero(f2), comm, TermOrderSpec::deglex());
    Mat A = Mat::zero(f2, 2, 2), B = Mat::zero(f2, 2, 2);
    A.at(0, 1) = f2->from_int(1);
    B.at(1, 0) = f2->from_int(1);
    modules.push_back(SemilinearModule::make(f2w, {A, B}));

    int rebuilt = 0;
    for (const PipelineCase& pc : pipeline.cases) {
        if (pc.verdict != SimplicityReport::Verdict::Simple || rebuilt >= 5) continue;
        modules.push_back(quotient_module(LeftIdeal::make(pipeline.ring, pc.gens)));
        ++rebuilt;
    }

    for (const SemilinearModule& M : modules) {
        ModuleLawReport rep = module_check_laws(M);
        if (!rep.ok) {
            o.fail("module law violation: " + rep.failure);
            break;
        }
    }
    report(10, "semilinear + exchange laws on " + std::to_string(modules.size()) +
                   " constructed modules",
           o, seconds_since(t0));
}

} // namespace

int main() {
    try {
        std::vector<RingPtr> four = {
            shipped_ring("gf4_frob_lex.json"),
            shipped_ring("gf9_frob_deglex.json"),
            shipped_ring("weyl.json"),
            shipped_ring("f2_y_x1_x2.json"),
        };
        std::vector<RingPtr> all = four;
        all.push_back(shipped_ring("gf4_frob_uni.json"));
        all.push_back(shipped_ring("quat_inner_i.json"));

        criterion_lead_additivity(four);
        criterion_structural_endo(all);
        criterion_division();
        criterion_member_oracle(four);
        criterion_offenders();
        criterion_extraction();
        criterion_weyl_control(four[2]);
        criterion_frobenius_center();
        PipelineReport rep = criterion_pipeline();
        criterion_module_laws(rep);
    } catch (const std::exception& e) {
        std::printf("acceptance battery aborted: %s\n", e.what());
        return 1;
    }
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
