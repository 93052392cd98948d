#include "hurwitz/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hurwitz {

using Json = nlohmann::ordered_json;

void validate(const VerifyConfig& c) {
    if (c.d_min < 4 || c.d_min > c.d_max || c.d_max > 20)
        throw std::invalid_argument("sweep range must satisfy 4 <= d_min <= d_max <= 20 (got " +
                                    std::to_string(c.d_min) + ".." + std::to_string(c.d_max) + ")");
    if (c.oracle_rank_min < 3 || c.oracle_rank_min > c.oracle_rank_max || c.oracle_rank_max > 16)
        throw std::invalid_argument("oracle ranks must satisfy 3 <= min <= max <= 16");
    if (c.oracle_trials < 1)
        throw std::invalid_argument("oracle trials must be positive");
    if (c.identities_max < 1)
        throw std::invalid_argument("identities_max must be at least 1");
}

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Csv:
        return "csv";
    case OutputFormat::Latex:
        return "latex";
    case OutputFormat::Text:
        break;
    }
    return "text";
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "latex")
        return OutputFormat::Latex;
    if (s == "text")
        return OutputFormat::Text;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string to_string(Overall o) {
    return o == Overall::AllExpected ? "all-expected" : "unexpected-deviation";
}

// ---------------------------------------------------------------------------
// configuration

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

template <typename Int> Int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        if constexpr (std::is_unsigned_v<Int>) {
            if (v < 0)
                throw std::invalid_argument("negative");
        }
        return static_cast<Int>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

} // namespace

std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        std::replace(key.begin(), key.end(), '-', '_');
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        if (!out.emplace(key, value).second)
            throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
    return out;
}

void apply_config(const std::map<std::string, std::string>& entries, RunSettings& settings) {
    VerifyConfig& c = settings.verify;
    for (const auto& [key, value] : entries) {
        if (key == "d_min")
            c.d_min = parse_int<int>(key, value);
        else if (key == "d_max")
            c.d_max = parse_int<int>(key, value);
        else if (key == "seed")
            c.seed = parse_int<std::uint64_t>(key, value);
        else if (key == "ledger")
            c.ledger.ell_coeff = parse_ell_coeff(value);
        else if (key == "relation_source")
            c.ledger.relation_source = parse_relation_source(value);
        else if (key == "oracle_rank_min")
            c.oracle_rank_min = parse_int<int>(key, value);
        else if (key == "oracle_rank_max")
            c.oracle_rank_max = parse_int<int>(key, value);
        else if (key == "oracle_trials")
            c.oracle_trials = parse_int<int>(key, value);
        else if (key == "identities_max")
            c.identities_max = parse_int<long>(key, value);
        else if (key == "format")
            settings.format = parse_output_format(value);
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

// ---------------------------------------------------------------------------
// verification

namespace {

struct CaseCore {
    SyzygyChern euler;
    TruncatedChern closed;
    DivisorClass bogomolov;
    DivisorClass w_defect_contribution;
};

CaseCore case_core(int d, int i, const ConventionLedger& ledger, const PushforwardTable& table) {
    CaseCore core;
    core.euler = ch_N_euler(d, i, ledger);
    core.closed = ch_N_closed(d, i);
    core.bogomolov = bogomolov_class(core.euler.ch, table);
    const GPoly w_defect = (core.euler.ch - core.closed).ch2.w;
    core.w_defect_contribution =
        push_degree2(GPoly(-2) * core.euler.ch.rank * w_defect * Degree2::w_atom(), table);
    return core;
}

} // namespace

CaseSummary summarize_case(int d, int i, const ConventionLedger& ledger) {
    const PushforwardTable table = PushforwardTable::make(d, ledger);
    const CaseCore core = case_core(d, i, ledger, table);
    const CaseCore partner = (d - 2 - i == i) ? core : case_core(d, d - 2 - i, ledger, table);

    CaseSummary c;
    c.d = d;
    c.i = i;
    c.rank = core.euler.ch.rank.coeff(0);
    c.rank_formula = rank_N(d, i);
    c.degree = core.euler.ch.c1.c1E * (GPoly::g() + GPoly(static_cast<long>(d) - 1));
    c.degree_formula = deg_N(d, i);
    c.global_sign = core.euler.global_sign;
    c.euler_minus_closed = core.euler.ch - core.closed;
    c.w_defect_contribution = core.w_defect_contribution;
    c.bogomolov = core.bogomolov;
    c.printed_target = mu_class_printed(d, i);
    c.a_coeff = A_coeff(d, i);
    c.diff = c.bogomolov - c.printed_target;
    c.symmetric = core.bogomolov == partner.bogomolov;

    // Under the derived convention everything must agree outright. Under the
    // printed convention the only admitted deviation is the w coefficient of
    // ch2, and its pushforward must account for the whole Bogomolov defect.
    TruncatedChern non_w = c.euler_minus_closed;
    non_w.ch2.w = GPoly();
    const GPoly w_defect = c.euler_minus_closed.ch2.w;
    const bool w_ok = ledger.ell_coeff == EllCoeff::Derived ? w_defect.is_zero() : !w_defect.is_zero();
    const DivisorClass corrected = core.bogomolov - core.w_defect_contribution;
    const DivisorClass partner_corrected = partner.bogomolov - partner.w_defect_contribution;
    const TruncatedChern& n = core.euler.ch;
    c.expected = c.rank == c.rank_formula && c.degree == c.degree_formula && n.c1.sigma.is_zero() &&
                 n.ch2.m.is_zero() && n.ch2.g2.is_zero() && non_w == TruncatedChern{} && w_ok &&
                 corrected == c.printed_target && corrected == partner_corrected;
    return c;
}

bool audit_as_expected(const RelationsAudit& audit) {
    static const RelationStatus want[] = {
        RelationStatus::RecordedOnly, RelationStatus::DerivedMatch,    RelationStatus::DerivedMatch,
        RelationStatus::DerivedMatch, RelationStatus::RecordedOnly,    RelationStatus::RecordedOnly,
        RelationStatus::DerivedMismatch, RelationStatus::RecordedOnly,
    };
    if (audit.records.size() != std::size(want))
        return false;
    for (std::size_t k = 0; k < audit.records.size(); ++k)
        if (audit.records[k].status != want[k])
            return false;
    const auto& r7 = audit.records[6];
    if (r7.comparisons.empty())
        return false;
    const DivisorClass& printed_reading = r7.comparisons.front().diff;
    const bool delta_only = printed_reading.kappa.is_zero() && printed_reading.zeta.is_zero() &&
                            printed_reading.delta == GPoly(Rational(-audit.d, 3));
    return delta_only && audit.t_plus_d.matches;
}

bool structure_as_expected(const StructureCheck& check) {
    if (!check.l0_pass())
        return false;
    if (check.variant == EllCoeff::Derived)
        return check.l1_pass();
    return check.l1_defect == TruncatedChern{GPoly(), PDegree1{}, Degree2::w_atom()};
}

VerificationReport empty_report(const VerifyConfig& config) {
    VerificationReport r;
    r.config = config;
    return r;
}

VerificationReport run_verify(const VerifyConfig& config) {
    validate(config);
    VerificationReport r = empty_report(config);
    bool ok = true;

    for (int d = config.d_min; d <= config.d_max; ++d)
        for (int i = 1; i <= d - 3; ++i) {
            r.per_case.push_back(summarize_case(d, i, config.ledger));
            ok = ok && r.per_case.back().expected;
        }

    for (int d = config.d_min; d <= config.d_max; ++d) {
        AuditSummary a{relations_audit(d, config.ledger), false};
        a.expected = audit_as_expected(a.audit);
        ok = ok && a.expected;
        r.relation_audits.push_back(std::move(a));
    }

    const IdentityReport ids = binomial_identity_check(config.identities_max);
    r.identity = {ids.a_max, ids.cases_checked, ids.mismatches, ids.ok()};
    ok = ok && r.identity.expected;

    for (int rank = config.oracle_rank_min; rank <= config.oracle_rank_max; ++rank) {
        const WedgeOracleReport o = wedge_oracle({rank, config.oracle_trials, config.seed});
        r.oracle.push_back({rank, config.oracle_trials, config.seed, o.entries, o.all_match()});
        ok = ok && o.all_match();
    }

    // Both conventions are checked regardless of the active ledger.
    for (int d = config.d_min; d <= config.d_max; ++d)
        for (const EllCoeff variant : {EllCoeff::Derived, EllCoeff::Paper}) {
            ConventionLedger ledger = config.ledger;
            ledger.ell_coeff = variant;
            const StructureCheck s = structure_sequence_check(d, ledger);
            const bool expected = structure_as_expected(s);
            r.structure_checks.push_back({d, variant, s.l0_defect, s.l1_defect, expected});
            ok = ok && expected;
        }

    r.interpretation = interpretation_search(default_interpretation_candidates(config.d_min));
    r.overall = ok ? Overall::AllExpected : Overall::UnexpectedDeviation;
    return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Json to_json(const Rational& x) { return x.str(); }
Json to_json(const GPoly& p) { return p.str(); }

Json to_json(const DivisorClass& c) {
    return Json{{"kappa", to_json(c.kappa)}, {"zeta", to_json(c.zeta)}, {"delta", to_json(c.delta)}};
}

Json to_json(const TruncatedChern& t) {
    return Json{{"rank", to_json(t.rank)},
                {"c1", Json{{"c1E", to_json(t.c1.c1E)}, {"sigma", to_json(t.c1.sigma)}}},
                {"ch2", Json{{"s", to_json(t.ch2.s)},
                             {"m", to_json(t.ch2.m)},
                             {"g2", to_json(t.ch2.g2)},
                             {"q", to_json(t.ch2.q)},
                             {"w", to_json(t.ch2.w)}}}};
}

Json to_json(const ConventionLedger& l) {
    return Json{{"ell_coeff", to_string(l.ell_coeff)},
                {"global_sign", to_string(l.global_sign)},
                {"relation_source", to_string(l.relation_source)}};
}

Json to_json(const VerifyConfig& c) {
    return Json{{"d_min", c.d_min},
                {"d_max", c.d_max},
                {"seed", c.seed},
                {"oracle_rank_min", c.oracle_rank_min},
                {"oracle_rank_max", c.oracle_rank_max},
                {"oracle_trials", c.oracle_trials},
                {"identities_max", c.identities_max}};
}

Json to_json(const CaseSummary& c) {
    return Json{{"d", c.d},
                {"i", c.i},
                {"rank", to_json(c.rank)},
                {"rank_formula", to_json(c.rank_formula)},
                {"degree", to_json(c.degree)},
                {"degree_formula", to_json(c.degree_formula)},
                {"global_sign", c.global_sign},
                {"euler_minus_closed", to_json(c.euler_minus_closed)},
                {"w_defect_contribution", to_json(c.w_defect_contribution)},
                {"bogomolov", to_json(c.bogomolov)},
                {"printed_target", to_json(c.printed_target)},
                {"A_i", to_json(c.a_coeff)},
                {"diff", to_json(c.diff)},
                {"symmetric", c.symmetric},
                {"expected", c.expected}};
}

Json to_json(const RelationsAudit& a) {
    Json records = Json::array();
    for (const auto& r : a.records) {
        Json comparisons = Json::array();
        for (const auto& c : r.comparisons)
            comparisons.push_back(
                Json{{"reading", c.reading}, {"derived", to_json(c.derived)}, {"diff", to_json(c.diff)}});
        records.push_back(Json{{"id", r.id},
                               {"lhs", r.lhs},
                               {"printed", to_json(r.printed)},
                               {"status", to_string(r.status)},
                               {"comparisons", comparisons},
                               {"notes", r.notes}});
    }
    return Json{{"d", a.d},
                {"records", records},
                {"t_plus_d",
                 Json{{"description", a.t_plus_d.description},
                      {"printed", to_json(a.t_plus_d.printed)},
                      {"derived", to_json(a.t_plus_d.derived)},
                      {"matches", a.t_plus_d.matches}}}};
}

Json to_json(const VerificationReport& r) {
    Json cases = Json::array();
    for (const auto& c : r.per_case)
        cases.push_back(to_json(c));

    Json audits = Json::array();
    for (const auto& a : r.relation_audits) {
        Json j = to_json(a.audit);
        j["expected"] = a.expected;
        audits.push_back(std::move(j));
    }

    Json mismatches = Json::array();
    for (const auto& m : r.identity.mismatches)
        mismatches.push_back(Json{{"identity", m.identity},
                                  {"a", m.a},
                                  {"p", m.p},
                                  {"lhs", to_json(m.lhs)},
                                  {"rhs", to_json(m.rhs)}});

    Json oracle = Json::array();
    for (const auto& o : r.oracle) {
        Json entries = Json::array();
        for (const auto& e : o.entries)
            entries.push_back(Json{{"l", e.l}, {"matched", e.matched}, {"mismatched", e.mismatched}});
        oracle.push_back(Json{{"rank", o.rank},
                              {"trials", o.trials},
                              {"seed", o.seed},
                              {"entries", entries},
                              {"expected", o.expected}});
    }

    Json structure = Json::array();
    for (const auto& s : r.structure_checks)
        structure.push_back(Json{{"d", s.d},
                                 {"variant", to_string(s.variant)},
                                 {"l0_defect", to_json(s.l0_defect)},
                                 {"l1_defect", to_json(s.l1_defect)},
                                 {"expected", s.expected}});

    Json interpretation = Json::array();
    for (const auto& x : r.interpretation)
        interpretation.push_back(Json{{"candidate", x.name},
                                      {"value", to_json(x.value)},
                                      {"total", to_json(x.total)},
                                      {"matches", x.matches}});

    return Json{{"tool_version", r.tool_version},
                {"ledger", to_json(r.config.ledger)},
                {"config", to_json(r.config)},
                {"sweep_range", Json::array({r.config.d_min, r.config.d_max})},
                {"per_case", cases},
                {"relation_records", audits},
                {"identity_report",
                 Json{{"a_max", r.identity.a_max},
                      {"cases_checked", r.identity.cases_checked},
                      {"mismatches", mismatches},
                      {"expected", r.identity.expected}}},
                {"oracle_report", oracle},
                {"structure_checks", structure},
                {"interpretation_search", interpretation},
                {"overall", to_string(r.overall)}};
}

Rational rational_from(const Json& j) { return Rational::parse(j.get<std::string>()); }
GPoly gpoly_from(const Json& j) { return GPoly::parse(j.get<std::string>()); }

DivisorClass divisor_from(const Json& j) {
    return {gpoly_from(j.at("kappa")), gpoly_from(j.at("zeta")), gpoly_from(j.at("delta"))};
}

TruncatedChern chern_from(const Json& j) {
    TruncatedChern t;
    t.rank = gpoly_from(j.at("rank"));
    t.c1 = {gpoly_from(j.at("c1").at("c1E")), gpoly_from(j.at("c1").at("sigma"))};
    const Json& c = j.at("ch2");
    t.ch2 = {gpoly_from(c.at("s")), gpoly_from(c.at("m")), gpoly_from(c.at("g2")), gpoly_from(c.at("q")),
             gpoly_from(c.at("w"))};
    return t;
}

} // namespace

VerificationReport parse_report_json(std::string_view text) {
    try {
        const Json j = Json::parse(text);
        VerificationReport r;
        r.tool_version = j.at("tool_version").get<std::string>();

        const Json& l = j.at("ledger");
        r.config.ledger.ell_coeff = parse_ell_coeff(l.at("ell_coeff").get<std::string>());
        if (l.at("global_sign").get<std::string>() != "auto")
            throw std::invalid_argument("unknown global_sign");
        r.config.ledger.relation_source = parse_relation_source(l.at("relation_source").get<std::string>());

        const Json& c = j.at("config");
        r.config.d_min = c.at("d_min").get<int>();
        r.config.d_max = c.at("d_max").get<int>();
        r.config.seed = c.at("seed").get<std::uint64_t>();
        r.config.oracle_rank_min = c.at("oracle_rank_min").get<int>();
        r.config.oracle_rank_max = c.at("oracle_rank_max").get<int>();
        r.config.oracle_trials = c.at("oracle_trials").get<int>();
        r.config.identities_max = c.at("identities_max").get<long>();

        for (const Json& x : j.at("per_case")) {
            CaseSummary s;
            s.d = x.at("d").get<int>();
            s.i = x.at("i").get<int>();
            s.rank = rational_from(x.at("rank"));
            s.rank_formula = rational_from(x.at("rank_formula"));
            s.degree = gpoly_from(x.at("degree"));
            s.degree_formula = gpoly_from(x.at("degree_formula"));
            s.global_sign = x.at("global_sign").get<int>();
            s.euler_minus_closed = chern_from(x.at("euler_minus_closed"));
            s.w_defect_contribution = divisor_from(x.at("w_defect_contribution"));
            s.bogomolov = divisor_from(x.at("bogomolov"));
            s.printed_target = divisor_from(x.at("printed_target"));
            s.a_coeff = rational_from(x.at("A_i"));
            s.diff = divisor_from(x.at("diff"));
            s.symmetric = x.at("symmetric").get<bool>();
            s.expected = x.at("expected").get<bool>();
            r.per_case.push_back(std::move(s));
        }

        for (const Json& x : j.at("relation_records")) {
            AuditSummary a;
            a.audit.d = x.at("d").get<int>();
            for (const Json& y : x.at("records")) {
                RelationRecord rec;
                rec.id = y.at("id").get<std::string>();
                rec.lhs = y.at("lhs").get<std::string>();
                rec.printed = divisor_from(y.at("printed"));
                rec.status = parse_relation_status(y.at("status").get<std::string>());
                for (const Json& z : y.at("comparisons"))
                    rec.comparisons.push_back({z.at("reading").get<std::string>(), divisor_from(z.at("derived")),
                                               divisor_from(z.at("diff"))});
                rec.notes = y.at("notes").get<std::string>();
                a.audit.records.push_back(std::move(rec));
            }
            const Json& t = x.at("t_plus_d");
            a.audit.t_plus_d = {t.at("description").get<std::string>(), divisor_from(t.at("printed")),
                                divisor_from(t.at("derived")), t.at("matches").get<bool>()};
            a.expected = x.at("expected").get<bool>();
            r.relation_audits.push_back(std::move(a));
        }

        const Json& id = j.at("identity_report");
        r.identity.a_max = id.at("a_max").get<long>();
        r.identity.cases_checked = id.at("cases_checked").get<long>();
        for (const Json& m : id.at("mismatches"))
            r.identity.mismatches.push_back({m.at("identity").get<int>(), m.at("a").get<long>(),
                                             m.at("p").get<long>(), rational_from(m.at("lhs")),
                                             rational_from(m.at("rhs"))});
        r.identity.expected = id.at("expected").get<bool>();

        for (const Json& o : j.at("oracle_report")) {
            OracleSummary s;
            s.rank = o.at("rank").get<int>();
            s.trials = o.at("trials").get<int>();
            s.seed = o.at("seed").get<std::uint64_t>();
            for (const Json& e : o.at("entries"))
                s.entries.push_back({e.at("l").get<int>(), e.at("matched").get<int>(), e.at("mismatched").get<int>()});
            s.expected = o.at("expected").get<bool>();
            r.oracle.push_back(std::move(s));
        }

        for (const Json& s : j.at("structure_checks"))
            r.structure_checks.push_back({s.at("d").get<int>(), parse_ell_coeff(s.at("variant").get<std::string>()),
                                          chern_from(s.at("l0_defect")), chern_from(s.at("l1_defect")),
                                          s.at("expected").get<bool>()});

        for (const Json& x : j.at("interpretation_search"))
            r.interpretation.push_back({x.at("candidate").get<std::string>(), divisor_from(x.at("value")),
                                        divisor_from(x.at("total")), x.at("matches").get<bool>()});

        const std::string overall = j.at("overall").get<std::string>();
        if (overall == "all-expected")
            r.overall = Overall::AllExpected;
        else if (overall == "unexpected-deviation")
            r.overall = Overall::UnexpectedDeviation;
        else
            throw std::invalid_argument("unknown overall status '" + overall + "'");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// text formats

namespace {

std::string latex_rational(const Rational& r) {
    if (r.is_integer())
        return r.str();
    const Rational mag = r.sign() < 0 ? -r : r;
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + mag.numerator().get_str() + "}{" +
           mag.denominator().get_str() + "}";
}

std::string latex_gpoly(const GPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero())
            continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0 || mag != Rational(1))
            out += latex_rational(mag);
        if (k >= 1)
            out += "g";
        if (k > 1)
            out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

} // namespace

std::string latex_mu(const Rational& a, const DivisorClass& cls) {
    if (a.is_zero())
        throw std::invalid_argument("latex_mu: zero scale");
    const DivisorClass inner = GPoly(Rational(1) / a) * cls;
    std::string body;
    const auto term = [&](const GPoly& c, const char* name) {
        if (c.is_zero())
            return;
        std::string coeff = latex_gpoly(c);
        const bool compound = std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                            [](const Rational& r) { return !r.is_zero(); }) > 1;
        if (compound)
            coeff = "(" + coeff + ")";
        if (!body.empty() && coeff.front() == '-') {
            body += " - ";
            coeff.erase(0, 1);
        } else if (!body.empty()) {
            body += " + ";
        }
        if (coeff == "1")
            body += name;
        else if (coeff == "-1")
            body += std::string("-") + name;
        else
            body += coeff + "\\," + name;
    };
    term(inner.zeta, "\\zeta");
    term(inner.kappa, "\\kappa");
    term(inner.delta, "\\delta");
    if (body.empty())
        body = "0";
    return latex_rational(a) + "\\left(" + body + "\\right)";
}

namespace {

std::string emit_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "d,i,rank,deg,A_i,diff_is_zero\n";
    for (const auto& c : r.per_case)
        out << c.d << ',' << c.i << ',' << c.rank.str() << ',' << c.degree.str() << ',' << c.a_coeff.str()
            << ',' << (c.diff.is_zero() ? "true" : "false") << '\n';
    return out.str();
}

std::string emit_latex(const VerificationReport& r) {
    std::ostringstream out;
    out << "\\begin{tabular}{rrl}\n\\hline\n$d$ & $i$ & $[\\mu_i]$ \\\\\n\\hline\n";
    for (const auto& c : r.per_case)
        out << c.d << " & " << c.i << " & $" << latex_mu(c.a_coeff, c.bogomolov) << "$ \\\\\n";
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

std::string yes_no(bool b) { return b ? "ok" : "DEVIATION"; }

std::string emit_text(const VerificationReport& r) {
    std::ostringstream out;
    const auto& l = r.config.ledger;
    out << "syzygy-divisor verification " << r.tool_version << "\n";
    out << "ledger: ell_coeff=" << to_string(l.ell_coeff) << " global_sign=" << to_string(l.global_sign)
        << " relation_source=" << to_string(l.relation_source) << "\n";
    out << "sweep: d=" << r.config.d_min << ".." << r.config.d_max << ", " << r.per_case.size()
        << " cases, seed " << r.config.seed << "\n\n";

    out << "cases:\n";
    for (const auto& c : r.per_case) {
        out << "  (" << c.d << "," << c.i << ") rank " << c.rank << " deg " << c.degree << "  [mu] = "
            << c.bogomolov << "  diff " << c.diff;
        if (!c.euler_minus_closed.ch2.w.is_zero())
            out << "  w-defect " << c.euler_minus_closed.ch2.w;
        out << "  " << yes_no(c.expected) << "\n";
    }

    out << "\nrelations:\n";
    for (const auto& a : r.relation_audits) {
        out << "  d=" << a.audit.d << ":";
        for (const auto& rec : a.audit.records)
            out << " " << rec.id << "=" << to_string(rec.status);
        out << " T+D=" << (a.audit.t_plus_d.matches ? "match" : "mismatch") << "  " << yes_no(a.expected)
            << "\n";
        for (const auto& rec : a.audit.records)
            if (rec.status == RelationStatus::DerivedMismatch)
                for (const auto& c : rec.comparisons)
                    out << "      " << rec.id << " [" << c.reading << "] derived - printed = " << c.diff << "\n";
    }

    out << "\nidentities: " << r.identity.cases_checked << " cases up to a=" << r.identity.a_max << ", "
        << r.identity.mismatches.size() << " mismatches  " << yes_no(r.identity.expected) << "\n";
    for (const auto& m : r.identity.mismatches)
        out << "  identity " << m.identity << " a=" << m.a << " p=" << m.p << ": " << m.lhs << " != " << m.rhs
            << "\n";

    out << "\nexterior-power oracle:\n";
    for (const auto& o : r.oracle) {
        int mism = 0;
        for (const auto& e : o.entries)
            mism += e.mismatched;
        out << "  rank " << o.rank << ": " << o.trials << " trials, " << mism << " mismatches  "
            << yes_no(o.expected) << "\n";
    }

    out << "\nstructure sequences:\n";
    for (const auto& s : r.structure_checks) {
        out << "  d=" << s.d << " " << to_string(s.variant) << ": l=0 "
            << (s.l0_defect == TruncatedChern{} ? "pass" : "fail") << ", l=1 "
            << (s.l1_defect == TruncatedChern{} ? "pass" : "fail");
        if (!(s.l1_defect == TruncatedChern{}))
            out << " (defect w*" << s.l1_defect.ch2.w << ")";
        out << "  " << yes_no(s.expected) << "\n";
    }

    out << "\ninterpretation search (2 pi_*rho^2 + X = T + delta):\n";
    for (const auto& x : r.interpretation)
        out << "  " << x.name << " = " << x.value << (x.matches ? "  match" : "") << "\n";

    out << "\noverall: " << to_string(r.overall) << "\n";
    return out.str();
}

} // namespace

std::string emit(const VerificationReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return to_json(report).dump(2) + "\n";
    case OutputFormat::Csv:
        return emit_csv(report);
    case OutputFormat::Latex:
        return emit_latex(report);
    case OutputFormat::Text:
        break;
    }
    return emit_text(report);
}

std::string emit_audit(const std::vector<RelationsAudit>& audits, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
    case OutputFormat::Json: {
        Json arr = Json::array();
        for (const auto& a : audits) {
            Json j = to_json(a);
            j["expected"] = audit_as_expected(a);
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    case OutputFormat::Csv:
        out << "d,id,status,reading,diff\n";
        for (const auto& a : audits) {
            for (const auto& rec : a.records) {
                if (rec.comparisons.empty())
                    out << a.d << ',' << rec.id << ',' << to_string(rec.status) << ",,\n";
                for (const auto& c : rec.comparisons)
                    out << a.d << ',' << rec.id << ',' << to_string(rec.status) << ",\"" << c.reading << "\","
                        << c.diff << '\n';
            }
            out << a.d << ",T+D," << (a.t_plus_d.matches ? "derived-match" : "derived-mismatch") << ",,"
                << (a.t_plus_d.derived - a.t_plus_d.printed) << '\n';
        }
        return out.str();
    case OutputFormat::Latex:
        out << "\\begin{tabular}{rlll}\n\\hline\n$d$ & relation & status & printed \\\\\n\\hline\n";
        for (const auto& a : audits)
            for (const auto& rec : a.records)
                out << a.d << " & " << rec.id << " & " << to_string(rec.status) << " & $"
                    << latex_mu(Rational(1), rec.printed) << "$ \\\\\n";
        out << "\\hline\n\\end{tabular}\n";
        return out.str();
    case OutputFormat::Text:
        break;
    }
    for (const auto& a : audits) {
        out << "d=" << a.d << "\n";
        for (const auto& rec : a.records) {
            out << "  " << rec.id << " " << rec.lhs << " = " << rec.printed << "  [" << to_string(rec.status)
                << "]\n";
            for (const auto& c : rec.comparisons)
                out << "      " << c.reading << ": derived " << c.derived << ", diff " << c.diff << "\n";
        }
        out << "  " << a.t_plus_d.description << ": printed " << a.t_plus_d.printed << ", derived "
            << a.t_plus_d.derived << "  [" << (a.t_plus_d.matches ? "derived-match" : "derived-mismatch")
            << "]\n";
        out << "  " << (audit_as_expected(a) ? "as expected" : "UNEXPECTED") << "\n";
    }
    return out.str();
}

} // namespace hurwitz
