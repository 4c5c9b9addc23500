#include "bing/verdict.hpp"

#include "bing/homology.hpp"
#include "bing/two_complex.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bing {

bool is_known_theorem_ref(const std::string& ref) {
    static const std::set<std::string> known = {
        refs::prop_3_3, refs::thm_3_4,   refs::cor_3_5,  refs::prop_3_7,
        refs::cor_3_9,  refs::thm_4_3,   refs::lemma_4_2, refs::cor_4_4,
        refs::lemma_4_5, refs::thm_4_6,  refs::thm_5_3,  refs::thm_2_2,
        refs::lefschetz_s1,
    };
    return known.count(ref) > 0;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::HasFPP_Lefschetz:
            return "HasFPP_Lefschetz";
        case Outcome::NotBing_NoFPPUpToHomotopy:
            return "NotBing_NoFPPUpToHomotopy";
        case Outcome::NotBing_S1Retract:
            return "NotBing_S1Retract";
        case Outcome::Inconclusive:
            return "Inconclusive";
    }
    return "Inconclusive";
}

MinimumEulerCheck minimum_euler_check(const Presentation& p, const GroupSpec& spec) {
    if (spec.kind == GroupSpec::Kind::Unknown)
        throw std::invalid_argument("minimum_euler_check requires a declared group identity");
    MinimumEulerCheck out;
    out.chi = euler_characteristic(standard_complex(p));
    if (auto b = deficiency_lower_bound(spec)) {
        out.lower_bound = *b + 1;
        out.is_minimum_known = out.chi == *out.lower_bound;
    }
    return out;
}

namespace {

void check_abelianization(const HomologySummary& h, const FiniteAbelianGroup& g) {
    std::vector<bigint> declared;
    for (std::int64_t m : g.factors)
        declared.emplace_back(m);
    if (h.h1_rank != 0 || h.h1_torsion != declared) {
        std::ostringstream os;
        os << "declared abelian group does not match the abelianization of the presentation"
           << " (abelianization: free rank " << h.h1_rank << ", torsion";
        for (const auto& t : h.h1_torsion)
            os << ' ' << t;
        os << ")";
        throw std::invalid_argument(os.str());
    }
}

CertificateStep context_step(const Presentation& p, const HomologySummary& h,
                             const std::string& claim) {
    return {claim, refs::lefschetz_s1,
            json{{"presentation", print_presentation(p)}, {"homology", homology_to_json(h)}}};
}

void append_abelian_chain(Certificate& cert, const Presentation& p, const GroupSpec& spec) {
    const FiniteAbelianGroup& g = spec.abelian;
    if (g.factor_count() < 2)
        throw std::logic_error("abelian chain reached with fewer than two invariant factors");
    const std::int64_t m1 = g.factors[0];
    const std::int64_t m2 = g.factors[1];

    cert.steps.push_back(
        {"No Bing space has abelian fundamental group; the steps below replay the "
         "argument for this group.",
         refs::thm_4_6, json{{"group", group_to_json(g)}}});

    auto mec = minimum_euler_check(p, spec);
    json mec_data{{"presentation", print_presentation(p)},
                  {"chi", mec.chi},
                  {"is_minimum_known", mec.is_minimum_known}};
    if (mec.lower_bound)
        mec_data["lower_bound"] = *mec.lower_bound;
    cert.steps.push_back(
        {"A Bing space with freely indecomposable fundamental group is efficient and has "
         "minimum Euler characteristic; recorded chi against the multiplier bound.",
         refs::cor_3_9, std::move(mec_data)});

    auto reps = browning_representatives(g);
    json presentations = json::array();
    for (std::int64_t d : reps)
        presentations.push_back(
            json{{"d", d}, {"text", print_presentation(build_Td(g.factors, d))}});
    cert.steps.push_back(
        {"Every minimal 2-complex with this fundamental group is homotopy equivalent to "
         "K_Td for some d coprime to m1; one representative d per homotopy type.",
         refs::thm_4_3,
         json{{"group", group_to_json(g)},
              {"homotopy_type_count", browning_count(g)},
              {"representative_d", reps},
              {"presentations", std::move(presentations)}}});

    json retractions = json::array();
    for (std::int64_t d : reps) {
        CellularMapData r = retraction_Td_to_Rd(g.factors, d);
        CellularMapData i = inclusion_Rd_to_Td(g.factors, d);
        auto td = chain_complex(standard_complex(build_Td(g.factors, d)));
        auto rd = chain_complex(standard_complex(build_Rd(m1, m2, d)));
        if (!is_chain_map(td, rd, r) || !is_chain_map(rd, td, i) ||
            r.f1 * i.f1 != IntMatrix::identity(2) || r.f2 * i.f2 != IntMatrix::identity(3))
            throw std::logic_error("retraction data failed its own identities");
        retractions.push_back(json{{"d", d},
                                   {"rd_presentation", print_presentation(build_Rd(m1, m2, d))},
                                   {"map", cellular_map_to_json(r)}});
    }
    cert.steps.push_back(
        {"K_Rd is a retract of K_Td: the chain-level retraction fixes a1, a2 and the three "
         "Rd cells and kills everything else; composition with the inclusion is the identity.",
         refs::lemma_4_5,
         json{{"invariant_factors", g.factors}, {"retractions", std::move(retractions)}}});

    cert.steps.push_back(
        {"For every d coprime to m1, K_Rd and K_R1 are minimal 2-complexes with the same "
         "two-factor abelian fundamental group, hence homotopy equivalent.",
         refs::cor_4_4, json{{"m1", m1}, {"m2", m2}, {"d_values", reps}}});

    Presentation r1 = build_Rd(m1, m2, 1);
    CellularMapData f = r1_selfmap_chain_data();
    bigint lambda = lefschetz_number(standard_complex(r1), f);
    if (lambda != 0)
        throw std::logic_error("self-map chain data has nonzero Lefschetz number");
    cert.steps.push_back(
        {"K_R1 carries a self-map whose only fixed points are the two disk centers, with "
         "indices +1 and -1 in one fixed point class; Lefschetz and Nielsen numbers are 0, "
         "so K_R1 (and with it every complex above) lacks the fixed point property.",
         refs::lemma_4_2,
         json{{"m", m1},
              {"n", m2},
              {"presentation", print_presentation(r1)},
              {"chain_map", cellular_map_to_json(f)},
              {"lefschetz", 0},
              {"fixed_point_indices", json::array({1, -1})},
              {"nielsen_number", 0}}});
}

void append_thm_5_3(Certificate& cert, const CatalogEntry& e) {
    json data{{"group", e.name}, {"family", e.family}};
    const bool concrete = e.triangle[2] != 0;
    json triangle = json::array();
    for (std::int64_t t : e.triangle)
        triangle.push_back(t == 0 ? json("n") : json(t));
    data["triangle"] = std::move(triangle);
    if (concrete) {
        Presentation tri = build_triangle(e.triangle[0], e.triangle[1], e.triangle[2]);
        data["triangle_presentation"] = print_presentation(tri);
        data["chi"] = euler_characteristic(standard_complex(tri));
    } else {
        data["triangle_presentation"] = "<a,b,c | a^2, b^2, c^n, abc>";
    }
    data["fixed_set"] =
        "every component of the fixed set of the reflection self-map of X(l,m,n) is "
        "homotopy equivalent to S^1, so every fixed point class has index 0";
    data["nielsen_number"] = 0;
    cert.steps.push_back(
        {"For this group the homotopy type of a 2-complex is determined by its Euler "
         "characteristic, and X(l,m,n) carries a self-map with Nielsen number 0; no complex "
         "with this fundamental group is a Bing space.",
         refs::thm_5_3, std::move(data)});
}

}  // namespace

Verdict analyze(const Presentation& p, const GroupSpec& spec) {
    TwoComplex x = standard_complex(p);
    HomologySummary h = homology(x);

    if (spec.kind == GroupSpec::Kind::Abelian)
        check_abelianization(h, spec.abelian);

    Verdict v;

    // (1) positive first Betti number: the circle is a retract.
    if (h.h1_rank > 0) {
        v.outcome = Outcome::NotBing_S1Retract;
        v.certificate.steps.push_back(context_step(
            p, h,
            "H1(X;Q) is nonzero, so S^1 is a retract of X and X lacks the fixed point "
            "property."));
        return v;
    }

    // (2) trivial reduced rational homology: Lefschetz forces a fixed point.
    if (h.h2_rank == 0) {
        v.outcome = Outcome::HasFPP_Lefschetz;
        v.certificate.steps.push_back(context_step(
            p, h,
            "Reduced rational homology vanishes, so by the Lefschetz fixed point theorem "
            "every self-map has a fixed point; X has the FPP but is not a Bing space."));
        return v;
    }

    const auto c = multiplier_invariant_factor_count(spec);

    // (3) fewer multiplier invariant factors than the rank of H2(X).
    if (c && *c < h.h2_rank) {
        v.outcome = Outcome::NotBing_NoFPPUpToHomotopy;
        v.certificate.steps.push_back(
            {"The number of invariant factors of H2 of the fundamental group is strictly "
             "smaller than the rank of H2(X), so X is homotopy equivalent to a polyhedron "
             "with S^2 as a retract.",
             refs::prop_3_3,
             json{{"presentation", print_presentation(p)},
                  {"multiplier_factors", *c},
                  {"h2_rank", h.h2_rank}}});
        v.certificate.steps.push_back(
            {"A polyhedron homotopy equivalent to one without the fixed point property "
             "lacks it as well, provided it has no global separating points; that "
             "hypothesis is assumed for X, not verified geometrically.",
             refs::thm_2_2, json{{"no_global_separating_points", "assumed, not verified"}}});
        return v;
    }

    // (4) trivial Schur multiplier.
    if (c && *c == 0) {
        v.outcome = Outcome::NotBing_NoFPPUpToHomotopy;
        v.certificate.steps.push_back(
            {"H2 of the fundamental group is trivial, so there are no Bing spaces with "
             "this fundamental group.",
             refs::thm_3_4, json{{"multiplier_factors", 0}, {"h2_rank", h.h2_rank}}});
        return v;
    }

    // (5) declared finite abelian group: replay the classification argument.
    if (spec.kind == GroupSpec::Kind::Abelian) {
        v.outcome = Outcome::NotBing_NoFPPUpToHomotopy;
        append_abelian_chain(v.certificate, p, spec);
        return v;
    }

    // (6) triangle-group families with Euler-characteristic-determined
    // homotopy type.
    if (spec.kind == GroupSpec::Kind::Catalog) {
        const CatalogEntry& e = catalog_lookup(spec.catalog_name);
        if (e.covered_by_theorem_5_3) {
            v.outcome = Outcome::NotBing_NoFPPUpToHomotopy;
            append_thm_5_3(v.certificate, e);
            return v;
        }
    }

    // (7) nothing applies.
    v.outcome = Outcome::Inconclusive;
    v.certificate.steps.push_back(context_step(
        p, h,
        "X has nontrivial rational homology but the declared group identity supports none "
        "of the implemented criteria; undecided."));
    return v;
}

namespace {

void require(RevalidationReport& rep, bool cond, const std::string& what) {
    if (!cond) {
        rep.ok = false;
        rep.issues.push_back(what);
    }
}

void revalidate_step(RevalidationReport& rep, const CertificateStep& s) {
    const json& d = s.data;
    if (s.theorem_ref == refs::lefschetz_s1) {
        if (d.contains("presentation")) {
            auto h = homology(standard_complex(parse_presentation(d.at("presentation"))));
            require(rep, homology_to_json(h) == d.at("homology"),
                    "recorded homology does not match the presentation");
        }
        return;
    }
    if (s.theorem_ref == refs::prop_3_3) {
        require(rep, d.contains("multiplier_factors") && d.contains("h2_rank"),
                "Prop 3.3 step lacks the compared quantities");
        require(rep,
                d.at("multiplier_factors").get<std::size_t>() < d.at("h2_rank").get<std::size_t>(),
                "Prop 3.3 step does not satisfy multiplier_factors < h2_rank");
        if (d.contains("presentation")) {
            auto h = homology(standard_complex(parse_presentation(d.at("presentation"))));
            require(rep, h.h2_rank == d.at("h2_rank").get<std::size_t>(),
                    "recorded h2_rank does not match the presentation");
        }
        return;
    }
    if (s.theorem_ref == refs::thm_2_2) {
        require(rep, d.contains("no_global_separating_points"),
                "Thm 2.2 step does not record its separating-point hypothesis");
        return;
    }
    if (s.theorem_ref == refs::thm_3_4) {
        require(rep, d.at("multiplier_factors").get<int>() == 0,
                "Thm 3.4 step with nontrivial multiplier");
        return;
    }
    if (s.theorem_ref == refs::thm_4_6) {
        auto factors = d.at("group").at("invariant_factors").get<std::vector<std::int64_t>>();
        bool chain = factors.size() >= 2;
        for (std::size_t i = 0; chain && i < factors.size(); ++i) {
            chain = factors[i] >= 2;
            if (chain && i + 1 < factors.size())
                chain = factors[i + 1] % factors[i] == 0;
        }
        require(rep, chain, "Thm 4.6 step group is not a valid noncyclic invariant-factor chain");
        return;
    }
    if (s.theorem_ref == refs::cor_3_9) {
        int chi = euler_characteristic(standard_complex(parse_presentation(d.at("presentation"))));
        require(rep, chi == d.at("chi").get<int>(), "recorded chi does not match the presentation");
        if (d.contains("lower_bound"))
            require(rep,
                    d.at("is_minimum_known").get<bool>() ==
                        (chi == d.at("lower_bound").get<int>()),
                    "minimum-chi flag inconsistent with chi and bound");
        return;
    }
    if (s.theorem_ref == refs::thm_4_3) {
        FiniteAbelianGroup g{d.at("group").at("invariant_factors").get<std::vector<std::int64_t>>()};
        require(rep, browning_count(g) == d.at("homotopy_type_count").get<std::size_t>(),
                "homotopy-type count does not re-derive");
        require(rep, browning_representatives(g) ==
                         d.at("representative_d").get<std::vector<std::int64_t>>(),
                "representative d values do not re-derive");
        for (const auto& row : d.at("presentations")) {
            auto text = print_presentation(build_Td(g.factors, row.at("d").get<std::int64_t>()));
            require(rep, text == row.at("text").get<std::string>(),
                    "embedded T_d presentation does not match its d");
        }
        return;
    }
    if (s.theorem_ref == refs::lemma_4_5) {
        auto factors = d.at("invariant_factors").get<std::vector<std::int64_t>>();
        for (const auto& row : d.at("retractions")) {
            std::int64_t dd = row.at("d").get<std::int64_t>();
            CellularMapData r = cellular_map_from_json(row.at("map"));
            CellularMapData i = inclusion_Rd_to_Td(factors, dd);
            auto td = chain_complex(standard_complex(build_Td(factors, dd)));
            auto rd = chain_complex(standard_complex(build_Rd(factors[0], factors[1], dd)));
            require(rep, is_chain_map(td, rd, r), "retraction is not a chain map");
            require(rep,
                    r.f1 * i.f1 == IntMatrix::identity(2) &&
                        r.f2 * i.f2 == IntMatrix::identity(3),
                    "retraction composed with inclusion is not the identity");
        }
        return;
    }
    if (s.theorem_ref == refs::cor_4_4) {
        std::int64_t m1 = d.at("m1").get<std::int64_t>();
        std::int64_t m2 = d.at("m2").get<std::int64_t>();
        require(rep, m1 >= 2 && m2 % m1 == 0, "Cor 4.4 step factors are not a chain");
        for (std::int64_t dd : d.at("d_values").get<std::vector<std::int64_t>>())
            require(rep, std::gcd(dd < 0 ? -dd : dd, m1) == 1, "d value not coprime to m1");
        return;
    }
    if (s.theorem_ref == refs::lemma_4_2) {
        Presentation r1 =
            build_Rd(d.at("m").get<std::int64_t>(), d.at("n").get<std::int64_t>(), 1);
        require(rep, print_presentation(r1) == d.at("presentation").get<std::string>(),
                "embedded R_1 presentation does not match m, n");
        CellularMapData f = cellular_map_from_json(d.at("chain_map"));
        bigint lambda = lefschetz_number(standard_complex(r1), f);
        require(rep, lambda == 0 && d.at("lefschetz").get<int>() == 0,
                "chain-level Lefschetz number is not 0");
        std::int64_t sum = 0;
        for (const auto& idx : d.at("fixed_point_indices"))
            sum += idx.get<std::int64_t>();
        require(rep, sum == 0, "fixed point indices do not sum to 0");
        return;
    }
    if (s.theorem_ref == refs::thm_5_3) {
        const json& tri = d.at("triangle");
        if (tri.at(2).is_number_integer()) {
            Presentation p = build_triangle(tri.at(0).get<std::int64_t>(),
                                            tri.at(1).get<std::int64_t>(),
                                            tri.at(2).get<std::int64_t>());
            require(rep,
                    print_presentation(p) == d.at("triangle_presentation").get<std::string>(),
                    "embedded triangle presentation does not match its degrees");
            require(rep, euler_characteristic(standard_complex(p)) == d.at("chi").get<int>(),
                    "triangle presentation chi mismatch");
        }
        require(rep, d.at("nielsen_number").get<int>() == 0, "Thm 5.3 step with nonzero N");
        return;
    }
    // Cor 3.5 / Prop 3.7 steps carry citations only.
}

}  // namespace

RevalidationReport revalidate(const Certificate& cert) {
    RevalidationReport rep;
    for (const CertificateStep& s : cert.steps) {
        if (!is_known_theorem_ref(s.theorem_ref)) {
            require(rep, false, "unknown theorem reference '" + s.theorem_ref + "'");
            continue;
        }
        try {
            revalidate_step(rep, s);
        } catch (const std::exception& e) {
            require(rep, false,
                    "step '" + s.theorem_ref + "' failed to revalidate: " + e.what());
        }
    }
    return rep;
}

json verdict_to_json(const Verdict& v) {
    json steps = json::array();
    for (const CertificateStep& s : v.certificate.steps)
        steps.push_back(
            json{{"claim", s.claim}, {"theorem_ref", s.theorem_ref}, {"data", s.data}});
    return json{{"outcome", to_string(v.outcome)}, {"certificate", std::move(steps)}};
}

}  // namespace bing
