#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/report.hpp"

using namespace hurwitz;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitDeviation = 1;
constexpr int kExitUsage = 2;

struct Flags {
    std::string ledger;
    std::string relation_source;
    std::string format;
    int d_min = 0;
    int d_max = 0;
    std::uint64_t seed = 0;
    std::string config_path;
    std::string output_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read config file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& body, const std::string& path) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << body;
}

std::string json_line(const Json& j) { return j.dump(2) + "\n"; }

Json divisor_json(const DivisorClass& c) {
    return Json{{"kappa", c.kappa.str()}, {"zeta", c.zeta.str()}, {"delta", c.delta.str()}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of syzygy-divisor classes on Hurwitz spaces"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Flags f;
    auto* ledger_opt = app.add_option("--ledger", f.ledger, "ell-coefficient convention")
                           ->check(CLI::IsMember({"derived", "paper"}));
    auto* source_opt = app.add_option("--relation-source", f.relation_source, "pushforward of ch2(E)")
                           ->check(CLI::IsMember({"printed", "rederived"}));
    auto* format_opt = app.add_option("--format", f.format, "output format")
                           ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    auto* dmin_opt = app.add_option("--d-min", f.d_min, "smallest degree in the sweep");
    auto* dmax_opt = app.add_option("--d-max", f.d_max, "largest degree in the sweep");
    auto* seed_opt = app.add_option("--seed", f.seed, "oracle seed");
    app.add_option("--config", f.config_path, "key=value configuration file");
    app.add_option("--output", f.output_path, "write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");

    int d = 0, i = 0;
    std::string g_text;
    auto* cls = app.add_subcommand("class", "print [mu_i] for one (d, i)");
    cls->add_option("--d", d)->required();
    cls->add_option("--i", i)->required();
    cls->add_option("--g", g_text, "evaluate at this genus");

    auto* rank = app.add_subcommand("rank", "rank of N_i");
    rank->add_option("--d", d)->required();
    rank->add_option("--i", i)->required();

    auto* deg = app.add_subcommand("deg", "degree of N_i");
    deg->add_option("--d", d)->required();
    deg->add_option("--i", i)->required();
    deg->add_option("--g", g_text, "evaluate at this genus");

    long a_max = 40;
    auto* ids = app.add_subcommand("identities", "check the three alternating binomial sums");
    ids->add_option("--max", a_max)->capture_default_str();

    int oracle_rank = 3, trials = 30;
    std::uint64_t oracle_seed = 42;
    auto* oracle = app.add_subcommand("oracle", "splitting-principle check of exterior powers");
    oracle->add_option("--rank", oracle_rank)->required();
    oracle->add_option("--trials", trials)->capture_default_str();
    auto* oracle_seed_opt = oracle->add_option("--seed", oracle_seed)->capture_default_str();

    auto* audit = app.add_subcommand("audit", "relations ledger only");

    for (auto* sub : {verify, cls, rank, deg, ids, oracle, audit})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    RunSettings settings;
    try {
        if (!f.config_path.empty())
            apply_config(parse_config_text(read_file(f.config_path)), settings);
        VerifyConfig& c = settings.verify;
        if (ledger_opt->count())
            c.ledger.ell_coeff = parse_ell_coeff(f.ledger);
        if (source_opt->count())
            c.ledger.relation_source = parse_relation_source(f.relation_source);
        if (format_opt->count())
            settings.format = parse_output_format(f.format);
        if (dmin_opt->count())
            c.d_min = f.d_min;
        if (dmax_opt->count())
            c.d_max = f.d_max;
        if (seed_opt->count())
            c.seed = f.seed;
        if (!oracle_seed_opt->count())
            oracle_seed = c.seed;
        validate(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const VerifyConfig& cfg = settings.verify;
    const OutputFormat fmt = settings.format;
    const auto t0 = std::chrono::steady_clock::now();
    int status = 0;
    std::string body;

    try {
        if (*verify) {
            const VerificationReport r = run_verify(cfg);
            body = emit(r, fmt);
            status = r.overall == Overall::AllExpected ? 0 : kExitDeviation;
        } else if (*cls) {
            const CaseSummary s = summarize_case(d, i, cfg.ledger);
            DivisorClass shown = s.bogomolov;
            DivisorClass target = s.printed_target;
            if (!g_text.empty()) {
                const Rational g = Rational::parse(g_text);
                shown = shown.at_genus(g);
                target = target.at_genus(g);
            }
            if (fmt == OutputFormat::Json) {
                Json j{{"d", d}, {"i", i}, {"ledger", to_string(cfg.ledger.ell_coeff)}};
                if (!g_text.empty())
                    j["g"] = g_text;
                j["A_i"] = s.a_coeff.str();
                j["mu"] = divisor_json(shown);
                j["printed_target"] = divisor_json(target);
                j["diff_is_zero"] = s.diff.is_zero();
                body = json_line(j);
            } else if (fmt == OutputFormat::Latex) {
                body = "$" + latex_mu(s.a_coeff, shown) + "$\n";
            } else if (fmt == OutputFormat::Csv) {
                body = "d,i,A_i,mu,diff_is_zero\n" + std::to_string(d) + "," + std::to_string(i) + "," +
                       s.a_coeff.str() + ",\"" + shown.str() + "\"," + (s.diff.is_zero() ? "true" : "false") +
                       "\n";
            } else {
                body = "[mu_" + std::to_string(i) + "] (d=" + std::to_string(d) + ") = " + shown.str() + "\n" +
                       "A_i = " + s.a_coeff.str() + ", diff = " + s.diff.str() + "\n";
            }
            status = s.expected ? 0 : kExitDeviation;
        } else if (*rank) {
            const CaseSummary s = summarize_case(d, i, cfg.ledger);
            if (fmt == OutputFormat::Json)
                body = json_line(Json{{"d", d},
                                      {"i", i},
                                      {"rank", s.rank.str()},
                                      {"rank_formula", s.rank_formula.str()}});
            else
                body = s.rank.str() + "\n";
            status = s.rank == s.rank_formula ? 0 : kExitDeviation;
        } else if (*deg) {
            const CaseSummary s = summarize_case(d, i, cfg.ledger);
            GPoly value = s.degree;
            if (!g_text.empty())
                value = GPoly(value.eval(Rational::parse(g_text)));
            if (fmt == OutputFormat::Json)
                body = json_line(Json{{"d", d}, {"i", i}, {"deg", value.str()}});
            else
                body = value.str() + "\n";
            status = s.degree == s.degree_formula ? 0 : kExitDeviation;
        } else if (*ids) {
            const IdentityReport r = binomial_identity_check(a_max);
            if (fmt == OutputFormat::Json) {
                Json mism = Json::array();
                for (const auto& m : r.mismatches)
                    mism.push_back(Json{{"identity", m.identity},
                                        {"a", m.a},
                                        {"p", m.p},
                                        {"lhs", m.lhs.str()},
                                        {"rhs", m.rhs.str()}});
                body = json_line(Json{{"a_max", r.a_max}, {"cases_checked", r.cases_checked}, {"mismatches", mism}});
            } else {
                std::ostringstream out;
                out << r.cases_checked << " cases up to a=" << r.a_max << ", " << r.mismatches.size()
                    << " mismatches\n";
                for (const auto& m : r.mismatches)
                    out << "identity " << m.identity << " a=" << m.a << " p=" << m.p << ": " << m.lhs
                        << " != " << m.rhs << "\n";
                body = out.str();
            }
            status = r.ok() ? 0 : kExitDeviation;
        } else if (*oracle) {
            const WedgeOracleReport r = wedge_oracle({oracle_rank, trials, oracle_seed});
            if (fmt == OutputFormat::Json) {
                Json entries = Json::array();
                for (const auto& e : r.entries)
                    entries.push_back(Json{{"l", e.l}, {"matched", e.matched}, {"mismatched", e.mismatched}});
                body = json_line(Json{{"rank", oracle_rank},
                                      {"trials", trials},
                                      {"seed", oracle_seed},
                                      {"entries", entries}});
            } else {
                std::ostringstream out;
                out << "rank " << oracle_rank << ", " << trials << " trials, seed " << oracle_seed << "\n";
                for (const auto& e : r.entries)
                    out << "  l=" << e.l << ": " << e.matched << " matched, " << e.mismatched << " mismatched\n";
                body = out.str();
            }
            status = r.all_match() ? 0 : kExitDeviation;
        } else if (*audit) {
            std::vector<RelationsAudit> audits;
            bool ok = true;
            for (int k = cfg.d_min; k <= cfg.d_max; ++k) {
                audits.push_back(relations_audit(k, cfg.ledger));
                ok = ok && audit_as_expected(audits.back());
            }
            body = emit_audit(audits, fmt);
            status = ok ? 0 : kExitDeviation;
        }
        write_output(body, f.output_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDeviation;
    }

    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "[" << app.get_subcommands().front()->get_name() << "] " << ms << " ms\n";
    return status;
}
