#include "zadual/verify.hpp"

#include <sstream>

#include "zadual/arthur.hpp"
#include "zadual/duality.hpp"
#include "zadual/parse.hpp"

namespace zadual {

std::string VerifyReport::summary() const {
    std::ostringstream out;
    out << "cases=" << cases << " involution=" << involution_checks
        << " commutation=" << commutation_checks << " inverse=" << inverse_checks
        << " irreducibility=" << irreducibility_checks << " failures=" << failure_count;
    return out.str();
}

namespace {

std::string brief(const LanglandsDatum& d) { return format_rep_json(d); }

} // namespace

VerifyReport verify(const EnumParams& params, const VerifyOptions& opts) {
    VerifyReport rep;
    auto der = opts.der ? opts.der
                        : [](const LanglandsDatum& d, const Point& p) {
                              return derivative_at(d, p);
                          };

    auto fail = [&](const std::string& what, const LanglandsDatum& d) {
        ++rep.failure_count;
        if (rep.failures.size() < opts.max_failures)
            rep.failures.push_back(what + " at " + brief(d));
    };

    for (const auto& d : enumerate_reps(params)) {
        ++rep.cases;
        try {
            int n = rank(d);
            LanglandsDatum dd;
            if (opts.involution || opts.commutation) {
                auto [d1, tr1] = dual(d);
                dd = d1;
                if (rank(dd) != n) fail("dual changed rank", d);
                auto [d2, tr2] = dual(dd);
                ++rep.involution_checks;
                if (!(d2 == d)) fail("dual o dual != id", d);
                DualOptions rev;
                rev.reverse_scan = true;
                auto [d3, tr3] = dual(d, rev);
                if (!(d3 == dd)) fail("dual depends on the scan order", d);
            }

            for (const auto& p : candidate_points(d)) {
                DerivativeResult dr = der(d, p);
                if (dr.k == 0) continue;
                if (rank(dr.value) != n - dr.k * p.rho.dim) fail("rank drop wrong", d);

                if (opts.commutation) {
                    ++rep.commutation_checks;
                    auto [dv, trv] = dual(dr.value);
                    DerivativeResult other = derivative_at(dd, p.conj());
                    if (other.k != dr.k || !(other.value == dv))
                        fail("duality/derivative commutation fails at " + p.rho.id + ":" +
                                 p.x.str(),
                             d);
                }
                if (opts.inverse_laws) {
                    ++rep.inverse_checks;
                    // S^(k) o D^(k) = id at the highest order
                    LanglandsDatum back = socle_at(dr.value, p, dr.k);
                    if (!(back == d)) fail("S^k o D^k != id", d);
                    // D^(k+1) o S^(1) = D^(k) is asserted inside socle_at; run it
                    socle_at(d, p, 1);
                }
            }

            // Delta[0,-1] / Z[0,1] pair on fully reduced non-tempered data.
            if (!d.is_tempered() && !find_candidate(d)) {
                for (const auto& seg : d.segments) {
                    if (!seg.rho.is_self_dual()) continue;
                    Rho rho = seg.rho;
                    DerivativeResult d01 = derivative_delta01(d, rho);
                    if (opts.inverse_laws) {
                        ++rep.inverse_checks;
                        LanglandsDatum back = socle_z01(dual(d01.value).first, rho, d01.k);
                        if (!(dual(d).first == back))
                            fail("step-2 reconstruction differs from dual", d);
                        if (rank(d01.value) != n - 2 * d01.k * rho.dim)
                            fail("Delta[0,-1] rank drop wrong", d);
                    }
                    if (opts.commutation) {
                        ++rep.commutation_checks;
                        DerivativeResult z01 = derivative_z01(dd, rho);
                        if (z01.k != d01.k || !(z01.value == dual(d01.value).first))
                            fail("Delta[0,-1]/Z[0,1] commutation fails", d);
                    }
                    break;
                }
            }

            // Z[0,1] inverse law on its own domain.
            if (opts.inverse_laws) {
                for (const auto& seg : d.segments) {
                    if (!seg.rho.is_self_dual()) continue;
                    Rho rho = seg.rho;
                    try {
                        DerivativeResult z = derivative_z01(d, rho);
                        if (z.k > 0) {
                            ++rep.inverse_checks;
                            LanglandsDatum back = socle_z01(z.value, rho, z.k);
                            if (!(back == d)) fail("S_Z01^k o D_Z01^k != id", d);
                        }
                    } catch (const ValidationError&) {
                        // outside the (a),(b) domain; nothing to check
                    }
                    break;
                }
            }

            if (opts.irreducibility) {
                for (int x2 = 1; x2 <= opts.irr_max_x2; ++x2) {
                    for (const auto& rho : params.lines) {
                        if (!rho.is_self_dual()) continue;
                        HalfInt x(x2);
                        if (classify_line(rho, exp_class_of(rho, x), d.group) !=
                            LineClass::Good)
                            continue;
                        ++rep.irreducibility_checks;
                        // irreducible_at cross-checks combinatorial vs socle
                        // comparison internally and throws on disagreement.
                        bool irr = irreducible_at(d, Point{rho, x});
                        if (d.is_tempered()) {
                            // tempered specialization: irreducible iff
                            // m_psi(rho x S_{2x-1}) = 0
                            LanglandsDatum core;
                            core.group = d.group;
                            core.temp = d.temp;
                            AParamForm a = to_aparam(core, rho, x);
                            // m_psi(rho x S_{2x-1}) = 0; at x = 1/2 the formal
                            // S_0 is consumed exactly when the l = 0 branch fires
                            bool expect =
                                x.twice == 1 ? a.l == 0 : mprime_of(a) == 0;
                            if (irr != expect)
                                fail("tempered irreducibility specialization fails", d);
                        }
                    }
                }
            }
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what(), d);
        }
    }
    return rep;
}

} // namespace zadual
