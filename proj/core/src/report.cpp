#include "srtk/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace srtk {

namespace {

using Json = nlohmann::ordered_json;

Json socle_json(const SocleProfile& s) {
    Json j = Json::object();
    for (auto [deg, dim] : s.dims) j[std::to_string(deg)] = dim;
    return j;
}

std::string big_str(const BigInt& b) { return b.str(); }

} // namespace

AnalysisReport analyze(const SimplicialComplex& c, const std::string& name, std::int64_t p, std::uint64_t seed,
                       int nseeds) {
    if (nseeds < 1) fail(Errc::invalid_argument, "need at least one seed");
    PrimeField field(p);
    AnalysisReport r;
    r.name = name;
    r.complex = c;
    r.p = p;
    r.betti = reduced_betti(c, field);
    r.vectors = make_bundle(c, r.betti);
    r.pure = c.is_pure();
    r.cohen_macaulay = is_cohen_macaulay(c, field);
    r.buchsbaum = is_buchsbaum(c, field);
    r.two_cm = is_two_cm(c, field);

    for (int i = 0; i < nseeds; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        SeedAnalysis sa;
        sa.seed = s;
        BstarCheck bc = buchsbaum_star_check(c, field, s);
        sa.bstar_equality = bc.buchsbaum && bc.socle_equality;
        if (i == 0) {
            r.buchsbaum_star = bc.passed();
            r.bstar_reason = bc.reason;
        }
        LinearForms forms = random_lsop(c, field, s);
        sa.lsop_attempts = forms.attempts;
        GradedReduction red = graded_reduction(c, forms);
        sa.reduction_dims = red.dims();
        sa.socle = socle_profile(red.algebra);
        sa.socle_bounds = socle_lower_bound_check(c, field, s);
        LevelQuotient lq = strip_socle_below(red.algebra, c.d());
        sa.level_dims = lq.dims();
        sa.level_socle = lq.socle;
        sa.level_type = lq.cm_type;
        sa.level_is_level = lq.is_level();
        r.seeds.push_back(std::move(sa));
    }
    for (const SeedAnalysis& sa : r.seeds)
        if (sa.reduction_dims != r.seeds.front().reduction_dims || !(sa.socle == r.seeds.front().socle) ||
            sa.bstar_equality != r.seeds.front().bstar_equality)
            r.seed_agreement = false;

    r.bounds_b_skipped = r.vectors.betti.beta(r.vectors.d - 1) == 0 && r.vectors.d >= 2;
    r.bounds = check_bstar_bounds(r.vectors, !r.bounds_b_skipped);
    r.soderberg = soderberg_check(r.vectors.h_double_prime, r.vectors.n, r.vectors.d);
    r.macaulay_applicable = true;
    for (long long x : r.vectors.h_double_prime)
        if (x < 0) r.macaulay_applicable = false;
    if (r.macaulay_applicable) {
        std::vector<long long> rev(r.vectors.h_double_prime.rbegin(), r.vectors.h_double_prime.rend());
        r.macaulay_reversed = check_module_macaulay(rev, r.vectors.n);
    }
    return r;
}

std::string to_json(const AnalysisReport& r, int indent) {
    Json j;
    j["schema"] = 1;
    j["complex"] = Json::object();
    j["complex"]["name"] = r.name;
    j["complex"]["n"] = r.complex.n();
    j["complex"]["dim"] = r.complex.dim();
    j["complex"]["d"] = r.complex.d();
    Json facets = Json::array();
    for (const Face& f : r.complex.facets()) facets.push_back(f.vertices());
    j["complex"]["facets"] = std::move(facets);
    j["field"] = Json::object({{"p", r.p}});
    j["betti"] = r.betti.values;
    j["vectors"] = Json::object();
    j["vectors"]["f"] = r.vectors.f;
    j["vectors"]["h"] = r.vectors.h;
    j["vectors"]["h_prime"] = r.vectors.h_prime;
    j["vectors"]["h_double_prime"] = r.vectors.h_double_prime;
    j["classification"] = Json::object({{"pure", r.pure},
                                        {"cohen_macaulay", r.cohen_macaulay},
                                        {"buchsbaum", r.buchsbaum},
                                        {"two_cm", r.two_cm},
                                        {"buchsbaum_star", r.buchsbaum_star}});
    if (!r.bstar_reason.empty()) j["classification"]["buchsbaum_star_reason"] = r.bstar_reason;

    Json seeds = Json::array();
    for (const SeedAnalysis& sa : r.seeds) {
        Json s;
        s["seed"] = sa.seed;
        s["lsop_attempts"] = sa.lsop_attempts;
        s["reduction_dims"] = sa.reduction_dims;
        s["socle"] = socle_json(sa.socle);
        s["bstar_equality"] = sa.bstar_equality;
        Json slack = Json::object();
        for (const auto& row : sa.socle_bounds.rows) slack[std::to_string(row.degree)] = row.slack;
        s["socle_slack"] = std::move(slack);
        s["level_quotient"] = Json::object({{"dims", sa.level_dims},
                                            {"socle", socle_json(sa.level_socle)},
                                            {"type", sa.level_type},
                                            {"level", sa.level_is_level}});
        seeds.push_back(std::move(s));
    }
    j["seeds"] = std::move(seeds);
    j["seed_agreement"] = r.seed_agreement;

    Json bounds;
    Json part_a = Json::array();
    for (const auto& row : r.bounds.part_a) {
        Json a;
        a["j"] = row.j;
        a["h_prime_next"] = row.lhs;
        if (row.evaluable) {
            a["growth_branch"] = big_str(row.branch_growth);
            a["duality_branch"] = big_str(row.branch_duality);
        } else {
            a["note"] = row.note;
        }
        a["pass"] = row.pass;
        part_a.push_back(std::move(a));
    }
    bounds["part_a"] = std::move(part_a);
    bounds["part_b_included"] = r.bounds.b_included;
    if (r.bounds.b_included) {
        Json part_b = Json::array();
        for (const auto& row : r.bounds.part_b)
            part_b.push_back(Json::object(
                {{"j", row.j}, {"h_double_prime_dual", row.lhs}, {"h_double_prime", row.rhs}, {"pass", row.pass}}));
        bounds["part_b"] = std::move(part_b);
    }
    bounds["pass"] = r.bounds.pass;
    j["bounds"] = std::move(bounds);

    Json soder = Json::array();
    for (const auto& row : r.soderberg.rows)
        soder.push_back(Json::object({{"j", row.j}, {"det", big_str(row.det)}, {"pass", row.pass}}));
    j["soderberg"] = Json::object({{"rows", std::move(soder)}, {"pass", r.soderberg.pass}});

    j["macaulay_reversed_h_double_prime"] = Json::object();
    j["macaulay_reversed_h_double_prime"]["applicable"] = r.macaulay_applicable;
    if (r.macaulay_applicable) {
        Json rows = Json::array();
        for (const auto& row : r.macaulay_reversed.rows)
            rows.push_back(Json::object(
                {{"j", row.j}, {"value", row.value}, {"bound", big_str(row.bound)}, {"pass", row.pass}}));
        j["macaulay_reversed_h_double_prime"]["rows"] = std::move(rows);
        j["macaulay_reversed_h_double_prime"]["pass"] = r.macaulay_reversed.pass;
    }
    return j.dump(indent) + "\n";
}

namespace {

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_str(const std::vector<long>& v) {
    return vec_str(std::vector<long long>(v.begin(), v.end()));
}

std::string socle_str(const SocleProfile& s) {
    if (s.dims.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [deg, dim] : s.dims) {
        os << (first ? "" : ", ") << deg << ": " << dim;
        first = false;
    }
    os << "}";
    return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "complex " << r.name << ": n = " << r.complex.n() << ", dim = " << r.complex.dim() << ", "
       << r.complex.facet_count() << " facets, field GF(" << r.p << ")\n";
    os << "  f   = " << vec_str(r.vectors.f) << "\n";
    os << "  h   = " << vec_str(r.vectors.h) << "\n";
    os << "  h'  = " << vec_str(r.vectors.h_prime) << "\n";
    os << "  h'' = " << vec_str(r.vectors.h_double_prime) << "\n";
    os << "  betti (beta_{-1}..beta_{dim}) = " << vec_str(r.betti.values) << "\n";
    os << "  pure " << yesno(r.pure) << ", CM " << yesno(r.cohen_macaulay) << ", Buchsbaum " << yesno(r.buchsbaum)
       << ", 2-CM " << yesno(r.two_cm) << ", Buchsbaum* " << yesno(r.buchsbaum_star);
    if (!r.bstar_reason.empty()) os << " (" << r.bstar_reason << ")";
    os << "\n";
    for (const SeedAnalysis& sa : r.seeds) {
        os << "  seed " << sa.seed << ": reduction dims " << vec_str(sa.reduction_dims) << ", socle "
           << socle_str(sa.socle) << "\n";
        os << "    level quotient dims " << vec_str(sa.level_dims) << ", socle " << socle_str(sa.level_socle)
           << ", type " << sa.level_type << "\n";
        os << "    socle slack:";
        for (const auto& row : sa.socle_bounds.rows) os << " [" << row.degree << "] " << row.slack;
        os << "\n";
    }
    if (r.seeds.size() > 1) os << "  seed agreement: " << yesno(r.seed_agreement) << "\n";
    os << "  bounds (a):";
    if (r.bounds.part_a.empty()) os << " (empty range)";
    for (const auto& row : r.bounds.part_a) {
        os << " [j=" << row.j << " " << row.lhs << " <= min{";
        if (row.evaluable)
            os << row.branch_growth.str() << ", " << row.branch_duality.str();
        else
            os << "n/a";
        os << "} " << (row.pass ? "ok" : "FAIL") << "]";
    }
    os << "\n";
    os << "  bounds (b):";
    if (!r.bounds.b_included)
        os << " skipped (beta_{d-1} = 0)";
    else
        for (const auto& row : r.bounds.part_b)
            os << " [j=" << row.j << " " << row.lhs << " >= " << row.rhs << "/type " << (row.pass ? "ok" : "FAIL")
               << "]";
    os << "\n";
    os << "  soderberg:";
    for (const auto& row : r.soderberg.rows)
        os << " [j=" << row.j << " det " << row.det.str() << (row.pass ? "" : " FAIL") << "]";
    os << "\n";
    return os.str();
}

} // namespace srtk
