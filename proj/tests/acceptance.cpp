// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "orbiheat/classifier.hpp"
#include "orbiheat/conway.hpp"
#include "orbiheat/flat_spectrum.hpp"
#include "orbiheat/golden_tables.hpp"
#include "orbiheat/heat_invariants.hpp"
#include "orbiheat/trig_sums.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

using namespace orbiheat;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

OrbifoldSignature sig(std::string_view s) { return conway::parse(s); }
Rational q(long long a, long long b) { return Rational(a) / Rational(b); }

void expect(Outcome& o, bool ok, const std::string& what) {
    if (ok) return;
    if (o.pass) o.detail = what;
    else o.detail += "; " + what;
    o.pass = false;
}

Outcome pillow_table() {
    Outcome o;
    const auto check = tables::check_pillow_table();
    for (const auto& m : check.mismatches) expect(o, false, m.notation + " " + m.field);
    expect(o, tables::pillow_rows().size() == 12, "row count " + std::to_string(tables::pillow_rows().size()));
    expect(o, euler_characteristic(sig("2,3,5")) == q(1, 30) && spectral_c(sig("2,3,5")) == q(271, 30), "O(2,3,5)");
    expect(o, euler_characteristic(sig("3,3,4")) == q(-1, 12) && spectral_c(sig("3,3,4")) == q(107, 12), "O(3,3,4)");
    if (o.pass) o.detail = std::to_string(check.entries_checked) + " entries over 12 rows, exact";
    return o;
}

Outcome expansion_table() {
    Outcome o;
    const auto check = tables::check_expansion_table();
    for (const auto& m : check.mismatches) expect(o, false, m.notation + " " + m.field);
    expect(o, degree_zero_term(sig("2,3,5")) == q(271, 360), "O(2,3,5)");
    expect(o, degree_zero_term(sig("*2,3,4")) == q(97, 288), "O(*2,3,4)");
    expect(o, degree_zero_term(sig("2,2,2,2")) == q(1, 2), "O(2,2,2,2)");
    expect(o, degree_zero_term(sig("2,2x")) == q(1, 4), "O(2,2x)");
    expect(o, degree_zero_term(sig("torus")) == 0 && degree_zero_term(sig("klein")) == 0, "torus/klein");
    if (o.pass) o.detail = std::to_string(check.entries_checked) + " entries, exact";
    return o;
}

Outcome trig_identities() {
    Outcome o;
    double worst = 0;
    for (std::int64_t m = 1; m <= 500; ++m) {
        for (int power : {2, 4}) {
            const double exact =
                (power == 2 ? trig::cosecant2_sum(m) : trig::cosecant4_sum(m)).to_double();
            const double numeric = trig::cosecant_sum_numeric(m, power);
            const double err = exact == 0 ? std::abs(numeric) : std::abs(numeric - exact) / exact;
            worst = std::max(worst, err);
            expect(o, err <= 1e-9, "m=" + std::to_string(m) + " power " + std::to_string(power));
        }
    }
    std::ostringstream ss;
    ss << "max rel err " << std::setprecision(3) << worst;
    if (o.pass) o.detail = ss.str();
    else o.detail += "; " + ss.str();
    return o;
}

Outcome flat_fits() {
    Outcome o;
    std::ostringstream summary;
    summary << std::setprecision(3);
    for (flat::FlatModel m : flat::kAllModels) {
        const auto report = flat::verify_model(m, flat::SampleGrid{1e-2, 0.7, 12});
        double worst = 0;
        for (const auto& d : report.degrees) {
            const double err = d.predicted != 0 ? d.rel_err : d.abs_err;
            worst = std::max(worst, err);
            if (!d.within(1e-6)) {
                std::ostringstream w;
                w << std::setprecision(6) << to_string(m) << " t^" << to_string(d.degree) << " fitted " << d.fitted
                  << " predicted " << d.predicted;
                expect(o, false, w.str());
            }
        }
        summary << to_string(m) << " " << worst << " ";
    }
    const std::string s = "max err per model: " + summary.str();
    o.detail = o.pass ? s : o.detail + "; " + s;
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    double worst = 0;
    for (flat::FlatModel m : flat::kAllModels) {
        for (double t : {0.05, 0.1, 0.2}) {
            const double diff = std::abs(flat::heat_trace(m, t) - flat::brute_force_trace(m, t, 80 * pi * pi));
            worst = std::max(worst, diff);
            expect(o, diff < 1e-10, std::string(to_string(m)) + " t=" + std::to_string(t));
        }
    }
    std::ostringstream ss;
    ss << "max |diff| " << std::setprecision(3) << worst;
    o.detail = o.pass ? ss.str() : o.detail + "; " + ss.str();
    return o;
}

Outcome injectivity_scans() {
    Outcome o;
    using classify::ClassKind;
    const auto tf = classify::injectivity_scan({ClassKind::TeardropsAndFootballs, 500});
    const auto cc = classify::injectivity_scan({ClassKind::ClassCOrientable, 500});
    expect(o, tf.empty(), std::to_string(tf.size()) + " teardrop/football collisions");
    expect(o, cc.empty(), std::to_string(cc.size()) + " class C collisions");
    const auto n_tf = classify::enumerate_class({ClassKind::TeardropsAndFootballs, 500}).size();
    const auto n_cc = classify::enumerate_class({ClassKind::ClassCOrientable, 500}).size();
    if (o.pass) {
        o.detail = "0 collisions among " + std::to_string(n_tf) + " and " + std::to_string(n_cc) + " members";
    }
    return o;
}

Outcome spherical_collisions() {
    Outcome o;
    const classify::OrbifoldClass cls{classify::ClassKind::SphericalConstantCurvature, 50};
    const auto groups = classify::collision_groups(cls);

    // Expected groups: quotients sharing the double cover O(m,m), O(2,2,m) or O(2,3,3).
    std::set<std::set<OrbifoldSignature>> expected;
    expected.insert({sig("*"), sig("x")});  // m = 1 of the first family, cover S^2
    for (Order m = 2; m <= 50; ++m) {
        expected.insert({OrbifoldSignature(0, 0, {}, {{m, m}}), OrbifoldSignature(0, 1, {m}),
                         OrbifoldSignature(0, 0, {m}, {{}})});
        expected.insert({OrbifoldSignature(0, 0, {}, {{2, 2, m}}), OrbifoldSignature(0, 0, {2}, {{m}})});
    }
    expected.insert({sig("*2,3,3"), sig("3*2")});

    std::set<std::set<OrbifoldSignature>> found;
    for (const auto& g : groups) found.insert(std::set<OrbifoldSignature>(g.begin(), g.end()));
    for (const auto& g : found) {
        if (!expected.count(g)) {
            std::string names;
            for (const auto& s : g) names += "O(" + conway::render(s) + ") ";
            expect(o, false, "unexpected group " + names);
        }
    }
    for (const auto& g : expected) {
        if (!found.count(g)) expect(o, false, "missing group containing O(" + conway::render(*g.begin()) + ")");
    }

    std::size_t pairs = 0, by_presence = 0, by_length = 0;
    for (const auto& g : groups) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                ++pairs;
                const auto v = classify::spherical_distinguish(g[i], g[j]);
                if (v == classify::SphericalVerdict::ByMirrorPresence) ++by_presence;
                else if (v == classify::SphericalVerdict::ByMirrorLength) ++by_length;
                else expect(o, false, "unresolved O(" + conway::render(g[i]) + ") vs O(" + conway::render(g[j]) + ")");
            }
        }
    }
    // strict length inequalities quoted for each family
    for (Order m = 2; m <= 50; ++m) {
        const double l22m = classify::unit_sphere_mirror_length(OrbifoldSignature(0, 0, {}, {{2, 2, m}}));
        const double l2m = classify::unit_sphere_mirror_length(OrbifoldSignature(0, 0, {2}, {{m}}));
        expect(o, std::abs(l22m - pi * (m + 1) / m) < 1e-12 && std::abs(l2m - pi) < 1e-12 && l22m > l2m,
               "lengths for m=" + std::to_string(m));
        const double lmm = classify::unit_sphere_mirror_length(OrbifoldSignature(0, 0, {}, {{m, m}}));
        const double lm = classify::unit_sphere_mirror_length(OrbifoldSignature(0, 0, {m}, {{}}));
        expect(o, std::abs(lmm - 2 * pi) < 1e-12 && std::abs(lm - 2 * pi / m) < 1e-12 && lmm > lm,
               "lengths *m,m / m* for m=" + std::to_string(m));
    }
    const double l233 = classify::unit_sphere_mirror_length(sig("*2,3,3"));
    const double l32 = classify::unit_sphere_mirror_length(sig("3*2"));
    expect(o, std::abs(l233 - pi) < 1e-12 && std::abs(l32 - pi / 2) < 1e-12, "lengths *2,3,3 / 3*2");

    const std::string s = std::to_string(groups.size()) + " groups, " + std::to_string(pairs) + " pairs (" +
                          std::to_string(by_presence) + " by mirror presence, " + std::to_string(by_length) +
                          " by mirror length)";
    o.detail = o.pass ? s : o.detail + "; " + s;
    return o;
}

Outcome curvature_signs() {
    Outcome o;
    const std::vector<std::string> spherical{"",       "x",      "*",      "2,2",    "3,3",    "5,5",   "2,2,3",
                                             "2,2,7",  "2,3,3",  "2,3,4",  "2,3,5",  "*2,2,5", "*2,3,3", "*2,3,4",
                                             "*2,3,5", "3*2",    "2,*4",   "4x",     "6*",     "*7,7"};
    const std::vector<std::string> hyperbolic{"oo",    "ooo",     "xxx",      "xxxx",      "2,3,7",
                                              "3,3,4", "2,4,5",   "o2",       "o*",        "2xx",
                                              "*2,3,7", "*2,2,2,3", "2,2,2,2,2", "3,*2,2", "2,2,2*",
                                              "*,*,*", "*2,2x",   "7,7,7",    "oo2,3",     "*3,3,3,3"};
    std::size_t smooth = 0;
    auto run = [&](const std::vector<std::string>& list, double K, classify::CurvatureSign want, int s) {
        for (const auto& text : list) {
            const auto o_sig = sig(text);
            if (euler_characteristic(o_sig).sign() != s) {
                expect(o, false, "O(" + text + ") has the wrong chi sign");
                continue;
            }
            if (!o_sig.has_singular_points()) ++smooth;
            const auto metric = MetricData::from_gauss_bonnet(o_sig, K, o_sig.has_mirrors() ? 1.0 : 0.0);
            try {
                const auto got = classify::curvature_sign(full_expansion(o_sig, metric), std::abs(K), o_sig);
                expect(o, got == want, "O(" + text + ")");
            } catch (const std::exception& e) {
                expect(o, false, "O(" + text + "): " + e.what());
            }
        }
    };
    run(spherical, 1.0, classify::CurvatureSign::Positive, 1);
    run(hyperbolic, -1.0, classify::CurvatureSign::Negative, -1);
    if (o.pass) {
        o.detail = "20 spherical + 20 hyperbolic, " + std::to_string(smooth) + " without cone or corner points";
    }
    return o;
}

Outcome half_integer_predicate() {
    Outcome o;
    std::size_t count = 0, mirrored = 0;
    const std::vector<std::vector<Order>> cone_sets{{}, {2}, {3}, {2, 2}, {2, 5}, {3, 3, 4}, {2, 2, 2, 2}, {7, 9, 11}};
    const std::vector<std::vector<std::vector<Order>>> mirror_sets{
        {}, {{}}, {{}, {}}, {{2}}, {{3, 3}}, {{2, 3, 5}}, {{}, {4}}, {{2, 2}, {2, 2}}, {{6}, {}, {}}, {{2, 3, 7}, {5}}};
    for (int h = 0; h <= 24 && count < 10000; ++h) {
        for (int x = 0; x <= 24 && count < 10000; ++x) {
            for (const auto& cones : cone_sets) {
                for (const auto& mirrors : mirror_sets) {
                    if (count >= 10000) break;
                    const std::string text = conway::render(OrbifoldSignature(h, x, cones, mirrors));
                    const auto parsed = sig(text);
                    const bool has_star = text.find('*') != std::string::npos;
                    expect(o, has_half_integer_terms(parsed) == has_star, "O(" + text + ")");
                    ++count;
                    mirrored += has_star;
                }
            }
        }
    }
    expect(o, count == 10000, "enumerated " + std::to_string(count));

    std::ostringstream ss;
    ss << std::setprecision(3);
    for (flat::FlatModel m : flat::kAllModels) {
        const auto fit = flat::fit_expansion(flat::sample_trace(m), flat::kFlatFitDegrees);
        const double half = fit.coefficients.at(Degree::MinusHalf);
        const bool mirror_model = m == flat::FlatModel::Square || m == flat::FlatModel::MirrorTorus;
        if (mirror_model) expect(o, half > 0.1, std::string(to_string(m)) + " t^-1/2 " + std::to_string(half));
        else expect(o, std::abs(half) < 1e-6, std::string(to_string(m)) + " t^-1/2 " + std::to_string(half));
        ss << to_string(m) << " " << half << " ";
    }
    const std::string s = std::to_string(count) + " signatures (" + std::to_string(mirrored) +
                          " mirrored); fitted t^-1/2: " + ss.str();
    o.detail = o.pass ? s : o.detail + "; " + s;
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "triangular pillow table (chi, c)", 1, pillow_table},
        {2, "degree-zero constants table", 1, expansion_table},
        {3, "cosecant power sums m=1..500", 5, trig_identities},
        {4, "flat-model fits on 1e-2*0.7^i", 10, flat_fits},
        {5, "closed-form vs enumerated traces", 30, oracle_equivalence},
        {6, "injectivity of c, bound 500", 60, injectivity_scans},
        {7, "spherical collision families, bound 50", 10, spherical_collisions},
        {8, "curvature sign from the expansion", 1, curvature_signs},
        {9, "half-integer terms iff mirrors", 10, half_integer_predicate},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            out.pass = false;
            out.detail += "; over time budget";
        }
        failed += !out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed
                  << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.budget_seconds
                  << " s): " << out.detail << std::defaultfloat << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
