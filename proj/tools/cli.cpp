#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xprod/json.hpp"
#include "xprod/xprod.hpp"

namespace xprod::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string format = "json";
    std::optional<i64> n, q, r, k, p, s, i;
    std::vector<i64> betas;
    std::optional<std::string> cocycle;
    std::vector<std::string> files;
    bool two_sided = false;
    std::optional<std::size_t> max_size;
};

struct Outcome {
    Json report;
    bool agree = true;
};

constexpr std::size_t kGridRingBound = std::size_t{1} << 12;
constexpr std::size_t kMaxOrbitGroupOrder = 64;

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    const bool nested = j.is_object() || (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& v) { return v.is_object(); }));
    if (!nested || j.empty()) {
        out << prefix << ": " << j.dump() << '\n';
        return;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    for (std::size_t idx = 0; idx < j.size(); ++idx) flatten(j[idx], prefix + "[" + std::to_string(idx) + "]", out);
}

/// The arguments that were actually given, for the report echo.
Json parameters_json(const Args& a) {
    Json out = Json::object();
    auto put = [&](const char* key, const std::optional<i64>& v) {
        if (v) out[key] = *v;
    };
    put("n", a.n);
    put("q", a.q);
    put("r", a.r);
    put("k", a.k);
    put("p", a.p);
    put("s", a.s);
    put("i", a.i);
    if (!a.betas.empty()) out["standard_beta"] = a.betas;
    if (a.cocycle) out["cocycle"] = *a.cocycle;
    if (!a.files.empty()) out["files"] = a.files;
    if (a.two_sided) out["two_sided"] = true;
    if (a.max_size) out["max_size"] = *a.max_size;
    return out;
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "text")
        flatten(j, "", out);
    else
        out << j.dump(2) << '\n';
}

i64 need(const std::optional<i64>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
}

CyclicParams cyclic_params(const Args& a) {
    CyclicParams p{need(a.n, "--n"), need(a.q, "--q"), need(a.r, "--r"), need(a.k, "--k")};
    p.require_valid();
    return p;
}

bool has_cyclic_params(const Args& a) { return a.n || a.q || a.r || a.k; }

/// q^r = N + 1 for a unit-group order N.
std::pair<i64, i64> field_of_units(i64 N) {
    if (N == 1) return {2, 1};
    const auto [p, e] = num::prime_power(N + 1);
    if (p == 0) throw Error(ErrorKind::InvalidParams, "N + 1 = " + std::to_string(N + 1) + " is not a prime power");
    return {p, static_cast<i64>(e)};
}

CocycleTable read_cocycle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    return io::cocycle_from_json(j);
}

CrossedRing ring_from_cocycle(CocycleTable f) {
    const auto [q, r] = field_of_units(f.N());
    return CrossedRing(make_tower(q, r), std::move(f));
}

CrossedRing ring_from_args(const Args& a) {
    if (a.cocycle) {
        if (has_cyclic_params(a)) throw UsageError("give either --cocycle or --n/--q/--r/--k");
        return ring_from_cocycle(read_cocycle(*a.cocycle));
    }
    const auto p = cyclic_params(a);
    if (a.betas.size() > 1) throw UsageError("expected one --standard-beta");
    return cyclic_crossed_ring(p.q, p.r, p.n, p.k, a.betas.empty() ? 0 : a.betas.front());
}

Json coords_json(const std::vector<std::vector<ClassCoords>>& orbits) {
    Json out = Json::array();
    for (const auto& o : orbits) out.push_back(o);
    return out;
}

/// Orbit partition when the class set and automorphism group are small enough.
std::optional<OrbitPartition> try_orbits(const CohGroup& h2) {
    if (!h2.has_explicit_classes() || h2.group().order() > kMaxOrbitGroupOrder) return std::nullopt;
    try {
        return orbits(h2, aut_eta(h2.group(), h2.coeff()));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::TooLarge || e.kind() == ErrorKind::Unsupported) return std::nullopt;
        throw;
    }
}

std::size_t cyclic_orbit_count(const CyclicParams& p) {
    const auto tower = make_tower(p.q, p.r);
    const auto group = GroupSpec::cyclic(p.n);
    const auto coeff = CoeffModule::field_units(group, tower, p.action());
    return orbits(compute_h2(group, coeff), aut_eta(group, coeff)).count();
}

std::size_t elab_orbit_count(i64 p, i64 s, i64 N) {
    const auto group = GroupSpec::elab(p, s);
    const auto coeff = CoeffModule::trivial(group, N);
    return orbits(compute_h2(group, coeff), aut_eta(group, coeff)).count();
}

bool elab_oracle_feasible(i64 p, i64 s) { return s <= 2 && num::ipow(p, static_cast<int>(s)) <= static_cast<i64>(kMaxGenericH2GroupOrder); }

Outcome cmd_classify_cyclic(const Args& a) {
    const auto p = cyclic_params(a);
    const auto c = classify_cyclic(p);
    Outcome o{io::to_json(c)};
    o.report["count"] = c.count();
    if (p.n <= static_cast<i64>(kMaxGenericH2GroupOrder)) {
        o.agree = cyclic_orbit_count(p) == c.count();
        o.report["oracle_agreement"] = o.agree;
    }
    return o;
}

Outcome cmd_classify_elab(const Args& a) {
    const i64 p = need(a.p, "--p");
    const i64 s = need(a.s, "--s");
    if (a.q.has_value() != a.r.has_value()) throw UsageError("--q and --r go together");
    std::optional<std::pair<i64, i64>> field;
    if (a.q) field = std::pair{*a.q, *a.r};
    const auto c = classify_elab(p, s, field);
    Outcome o{io::to_json(c)};
    if (field && elab_oracle_feasible(p, s)) {
        const i64 N = num::ipow(field->first, static_cast<int>(field->second)) - 1;
        o.agree = static_cast<i64>(elab_orbit_count(p, s, N)) == c.count;
        o.report["oracle_agreement"] = o.agree;
    }
    return o;
}

Outcome cmd_h2(const Args& a) {
    std::optional<GroupSpec> group;
    std::optional<CoeffModule> coeff;
    std::optional<CyclicParams> cyclic;
    std::optional<i64> elab_field_units;
    if (a.cocycle) {
        const auto f = read_cocycle(*a.cocycle);
        group = f.group;
        coeff = f.coeff;
    } else if (a.p || a.s) {
        group = GroupSpec::elab(need(a.p, "--p"), need(a.s, "--s"));
        if (a.q.has_value() != a.r.has_value()) throw UsageError("--q and --r go together");
        if (a.q) {
            if (!num::is_prime(*a.q)) throw Error(ErrorKind::NotPrime, std::to_string(*a.q) + " is not prime");
            elab_field_units = num::ipow(*a.q, static_cast<int>(*a.r)) - 1;
            coeff = CoeffModule::trivial(*group, *elab_field_units);
        } else {
            coeff = complex_coefficients(*group);
        }
    } else {
        cyclic = cyclic_params(a);
        group = GroupSpec::cyclic(cyclic->n);
        coeff = CoeffModule::field_units(*group, make_tower(cyclic->q, cyclic->r), cyclic->action());
    }
    const auto h2 = compute_h2(*group, *coeff);
    const auto orb = try_orbits(h2);
    Outcome o;
    o.report = Json{{"invariant_factors", h2.invariant_factors()},
                    {"order", h2.order()},
                    {"orbit_count", orb ? Json(orb->count()) : Json(nullptr)},
                    {"orbits", orb ? coords_json(orb->orbits) : Json(nullptr)},
                    {"group", io::to_json(*group)},
                    {"N", coeff->N()},
                    {"action_multipliers", coeff->multipliers()}};
    if (cyclic) {
        const auto c = classify_cyclic(*cyclic);
        o.agree = h2.order() == c.m && (!orb || orb->count() == c.count());
        o.report["oracle_agreement"] = o.agree;
    } else if (elab_field_units && orb && elab_oracle_feasible(group->p(), group->s())) {
        o.agree = static_cast<i64>(orb->count()) == count_elab_finite_field(group->p(), group->s(), *a.q, *a.r);
        o.report["oracle_agreement"] = o.agree;
    }
    return o;
}

Outcome cmd_isometric(const Args& a) {
    std::vector<CrossedRing> rings;
    if (!a.files.empty()) {
        if (a.files.size() != 2) throw UsageError("isometric takes two cocycle files");
        if (has_cyclic_params(a) || !a.betas.empty()) throw UsageError("give either two files or --n/--q/--r/--k with two --standard-beta");
        for (const auto& path : a.files) rings.push_back(ring_from_cocycle(read_cocycle(path)));
    } else {
        const auto p = cyclic_params(a);
        if (a.betas.size() != 2) throw UsageError("expected two --standard-beta values");
        for (i64 b : a.betas) rings.push_back(cyclic_crossed_ring(p.q, p.r, p.n, p.k, b));
    }
    const auto w = find_isometry(rings[0], rings[1]);
    Outcome o;
    o.report["isometric"] = w.has_value();
    o.report["psi"] = w ? io::to_json(w->psi) : Json(nullptr);
    if (w) {
        Json scalars = Json::array();
        for (const auto& c : w->scalars) scalars.push_back(c.log());
        o.report["scalars"] = std::move(scalars);
        const bool ok = verify_isometry(*w, rings[0], rings[1]);
        o.report["verified"] = ok;
        o.agree = ok;
    }
    const auto& f1 = rings[0].cocycle();
    if (f1.group.order() <= kMaxGenericH2GroupOrder) {
        const auto h2 = compute_h2(f1.group, f1.coeff);
        if (const auto orb = try_orbits(h2)) {
            const auto c1 = h2.coordinates(f1);
            const auto c2 = h2.coordinates(rings[1].cocycle());
            bool same = false;
            for (const auto& members : orb->orbits)
                if (std::find(members.begin(), members.end(), c1) != members.end())
                    same = std::find(members.begin(), members.end(), c2) != members.end();
            const bool agree = same == w.has_value();
            o.report["same_orbit"] = same;
            o.report["oracle_agreement"] = agree;
            o.agree = o.agree && agree;
        }
    }
    return o;
}

Outcome cmd_semisimple(const Args& a) {
    const auto ring = ring_from_args(a);
    const auto rep = is_semisimple(ring, a.max_size.value_or(kDefaultMaxRingElements));
    Outcome o;
    o.report = Json{{"ring", io::to_json(ring)},
                    {"semisimple", rep.semisimple},
                    {"classical", rep.classical},
                    {"kernel_order", rep.kernel_order},
                    {"empirical", rep.empirical ? Json(*rep.empirical) : Json(nullptr)},
                    {"diagnosis", rep.diagnosis}};
    if (rep.empirical) {
        o.agree = *rep.empirical == rep.semisimple;
        o.report["oracle_agreement"] = o.agree;
    }
    return o;
}

Outcome cmd_codes(const Args& a) {
    const auto ring = ring_from_args(a);
    const auto side = a.two_sided ? Sidedness::TwoSided : Sidedness::Left;
    const auto codes = enumerate_codes(ring, side, a.max_size.value_or(kDefaultMaxRingElements));
    Json list = Json::array();
    for (const auto& c : codes) list.push_back(io::to_json(c));
    const auto ss = num::gcd(static_cast<i64>(ring.kernel_order()), ring.tower().q()) == 1;
    Outcome o;
    o.report = Json{{"ring", io::to_json(ring)},
                    {"semisimple", ss},
                    {"sidedness", a.two_sided ? "two-sided" : "left"},
                    {"count", codes.size()},
                    {"codes", std::move(list)}};
    return o;
}

Outcome cmd_wedderburn(const Args& a) {
    const auto c = wedderburn(need(a.i, "--i"), need(a.p, "--p"), need(a.s, "--s"));
    Outcome o;
    o.report = Json{{"matrix_size", c.matrix_size},
                    {"copies", c.copies},
                    {"simple", c.simple()},
                    {"i", c.i},
                    {"radical_rank", c.radical_rank},
                    {"irreducible_codes", c.irreducible_codes},
                    {"total_codes_log2", c.total_codes_log2}};
    o.agree = c.matrix_size * c.matrix_size * c.copies == num::ipow(*a.p, static_cast<int>(*a.s));
    return o;
}

struct Grid {
    Json rows = Json::array();
    std::size_t disagreements = 0;

    void add(const std::string& check, Json params, const Json& formula, const Json& oracle) {
        const bool agree = formula == oracle;
        if (!agree) ++disagreements;
        rows.push_back(Json{{"check", check}, {"params", std::move(params)}, {"formula", formula}, {"oracle", oracle}, {"agree", agree}});
    }
};

Outcome cmd_verify_grid(const Args& a) {
    const std::size_t ring_bound = a.max_size.value_or(kGridRingBound);
    Grid grid;
    for (i64 q : {2, 3, 5})
        for (i64 r = 1; r <= 4; ++r)
            for (i64 n = 1; n <= 8; ++n)
                for (i64 k : valid_frobenius_exponents(n, r)) {
                    const CyclicParams p{n, q, r, k};
                    const Json params{{"q", q}, {"r", r}, {"n", n}, {"k", k}};
                    const auto tower = make_tower(q, r);
                    const auto group = GroupSpec::cyclic(n);
                    const auto coeff = CoeffModule::field_units(group, tower, p.action());
                    const auto h2 = compute_h2(group, coeff);
                    const auto c = classify_cyclic(p);
                    grid.add("h2_order", params, c.m, h2.order());
                    grid.add("orbit_count", params, c.count(), orbits(h2, aut_eta(group, coeff)).count());
                    if (k == r) grid.add("trivial_action_divisors", params, num::divisors(num::gcd(tower.N(), n)).size(), c.count());
                    if ((r / k) % c.m == 0) grid.add("singleton_classes", params, c.m, c.count());
                    const double size = std::pow(static_cast<double>(tower.size()), static_cast<double>(n));
                    if (size <= static_cast<double>(ring_bound)) {
                        const auto ring = cyclic_crossed_ring(q, r, n, k, 0);
                        const auto rep = is_semisimple(ring, ring_bound);
                        grid.add("semisimple", params, is_semisimple_cyclic(p), rep.empirical ? Json(*rep.empirical) : Json(nullptr));
                        if (n * k == r) grid.add("classical_two_sided_codes", params, 2, enumerate_codes(ring, Sidedness::TwoSided, ring_bound).size());
                    }
                }
    for (i64 p : {2, 3})
        for (i64 s = 1; s <= 2; ++s)
            for (i64 q : {2, 3, 5, 7}) {
                const Json params{{"p", p}, {"s", s}, {"q", q}, {"r", 1}};
                const auto group = GroupSpec::elab(p, s);
                const auto coeff = CoeffModule::trivial(group, q - 1);
                const auto h2 = compute_h2(group, coeff);
                const i64 expected_order = (q - 1) % p == 0 ? num::ipow(p, static_cast<int>(s * (s + 1) / 2)) : 1;
                grid.add("elab_h2_order", params, expected_order, h2.order());
                grid.add("elab_orbit_count", params, count_elab_finite_field(p, s, q, 1), orbits(h2, aut_eta(group, coeff)).count());
            }
    Outcome o;
    o.agree = grid.disagreements == 0;
    o.report = Json{{"checks", grid.rows.size()},
                    {"disagreements", grid.disagreements},
                    {"oracle_agreement", o.agree},
                    {"rows", std::move(grid.rows)}};
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crossed products over finite fields: cohomology, isometry classes and codes", "xprod-cli"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-size", a.max_size, "Largest ring (element count) to enumerate");

    auto add_cyclic = [&](CLI::App* sub) {
        sub->add_option("--n", a.n, "Order of the cyclic group");
        sub->add_option("--q", a.q, "Characteristic");
        sub->add_option("--r", a.r, "Extension degree");
        sub->add_option("--k", a.k, "Frobenius exponent of the generator");
    };
    auto* cc = app.add_subcommand("classify-cyclic", "Isometry classes of F_{q^r} * C_n");
    add_cyclic(cc);
    auto* ce = app.add_subcommand("classify-elab", "Classes of twisted (C_p)^s algebras");
    ce->add_option("--p", a.p, "Prime")->required();
    ce->add_option("--s", a.s, "Rank")->required();
    ce->add_option("--q", a.q, "Field characteristic");
    ce->add_option("--r", a.r, "Field degree");
    auto* h2 = app.add_subcommand("h2", "Second cohomology and Aut_eta orbits");
    add_cyclic(h2);
    h2->add_option("--p", a.p, "Prime for (C_p)^s");
    h2->add_option("--s", a.s, "Rank for (C_p)^s");
    h2->add_option("--cocycle", a.cocycle, "Cocycle JSON file supplying group and module");
    auto* iso = app.add_subcommand("isometric", "Decide Hamming isometry of two crossed products");
    add_cyclic(iso);
    iso->add_option("files", a.files, "Two cocycle JSON files");
    iso->add_option("--standard-beta", a.betas, "Exponents of beta for two standard cocycles");
    auto* ss = app.add_subcommand("semisimple", "Semisimplicity verdict with empirical cross-check");
    auto* codes = app.add_subcommand("codes", "Enumerate ideal codes with minimum distance");
    for (auto* sub : {ss, codes}) {
        add_cyclic(sub);
        sub->add_option("--cocycle", a.cocycle, "Cocycle JSON file");
        sub->add_option("--standard-beta", a.betas, "Exponent of beta for the standard cocycle");
    }
    codes->add_flag("--two-sided", a.two_sided, "Enumerate two-sided ideals");
    auto* wb = app.add_subcommand("wedderburn", "Wedderburn data of the alpha_i class");
    wb->add_option("--p", a.p, "Prime")->required();
    wb->add_option("--s", a.s, "Rank")->required();
    wb->add_option("--i", a.i, "Class index")->required();
    auto* grid = app.add_subcommand("verify-grid", "Sweep the default grid: formula against brute force");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        Outcome o;
        if (cc->parsed())
            o = cmd_classify_cyclic(a);
        else if (ce->parsed())
            o = cmd_classify_elab(a);
        else if (h2->parsed())
            o = cmd_h2(a);
        else if (iso->parsed())
            o = cmd_isometric(a);
        else if (ss->parsed())
            o = cmd_semisimple(a);
        else if (codes->parsed())
            o = cmd_codes(a);
        else if (wb->parsed())
            o = cmd_wedderburn(a);
        else if (grid->parsed())
            o = cmd_verify_grid(a);
        for (auto* sub : app.get_subcommands()) o.report["command"] = sub->get_name();
        o.report["parameters"] = parameters_json(a);
        emit(o.report, a.format, out);
        if (!o.agree) {
            err << "oracle disagreement\n";
            return kExitDisagreement;
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace xprod::cli
