#include "qlab/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/config_sum.hpp"
#include "qlab/fusion.hpp"
#include "qlab/parallel.hpp"
#include "qlab/paths.hpp"
#include "qlab/series_json.hpp"
#include "qlab/supernomial.hpp"
#include "qlab/tau.hpp"
#include "qlab/virasoro.hpp"

namespace qlab::cli {

namespace {

struct Options {
    std::optional<int> p, pp, r, s, a, b, k;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> mmax;
    std::optional<std::int64_t> qmax;
    std::optional<std::int64_t> nmax;
    std::optional<int> ppmax;
    std::string format = "json";
    std::optional<unsigned> jobs;
    std::string suite;
    std::string kind = "plain";
    bool list = false;
    bool count = false;
    bool gf = false;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
T need(const std::optional<T>& v, const char* flag)
{
    if (!v) {
        throw Usage(std::string("missing required option ") + flag);
    }
    return *v;
}

template <class T>
T value_or(const std::optional<T>& v, T fallback)
{
    return v ? *v : fallback;
}

// --qmax N asks for every exponent up to N, i.e. a cutoff N + 1.
QExp cutoff_of(const Options& o, std::int64_t fallback) { return QExp(value_or(o.qmax, fallback) + 1); }

unsigned jobs_of(const Options& o) { return o.jobs ? std::max(1u, *o.jobs) : default_jobs(); }

const std::vector<std::pair<int, int>>& standard_models()
{
    static const std::vector<std::pair<int, int>> models{{3, 4}, {4, 5}, {5, 7}, {4, 7}, {5, 8}};
    return models;
}

std::vector<ModelParams> models_of(const Options& o)
{
    if (o.p || o.pp) {
        return {ModelParams(need(o.p, "--p"), need(o.pp, "--pp"))};
    }
    std::vector<ModelParams> out;
    for (auto [p, pp] : standard_models()) {
        out.emplace_back(p, pp);
    }
    return out;
}

SuiteReport merge(std::string suite, std::vector<SuiteReport> parts)
{
    if (parts.size() == 1) {
        return std::move(parts.front());
    }
    SuiteReport out;
    out.suite = std::move(suite);
    out.identity = parts.front().identity;
    out.params = nlohmann::json::array();
    for (auto& part : parts) {
        out.params.push_back(part.params);
        for (auto& c : part.cases) {
            c.id = part.params.dump() + " " + c.id;
            out.cases.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Rocha2Instance> rocha2_instances_of(const Options& o)
{
    if (!o.p && !o.pp) {
        return default_rocha2_instances();
    }
    const ModelParams mp(need(o.p, "--p"), need(o.pp, "--pp"));
    std::vector<Rocha2Instance> out;
    for (int r = 1; r <= mp.p() - 1; ++r) {
        if (o.r && *o.r != r) {
            continue;
        }
        for (int a = 1; a <= mp.p_prime() - 1; ++a) {
            if (o.a && *o.a != a) {
                continue;
            }
            for (int b = (a % 2 == 0) ? 2 : 1; b <= mp.p_prime() - 1; b += 2) {
                if (!o.b || *o.b == b) {
                    out.push_back({mp, r, a, b});
                }
            }
        }
    }
    return out;
}

std::vector<int> levels_of(const Options& o)
{
    if (o.k) {
        return {*o.k};
    }
    return {1, 2, 3};
}

using SuiteFn = std::function<SuiteReport(const Options&)>;

const std::map<std::string, SuiteFn>& suites()
{
    static const std::map<std::string, SuiteFn> table{
        {"recurrences",
         [](const Options& o) { return verify_S_recurrences(static_cast<int>(value_or<std::int64_t>(o.mmax, 8)) + 1, jobs_of(o)); }},
        {"expansion", [](const Options& o) { return verify_expansion_identity(5, cutoff_of(o, 40)); }},
        {"tau", [](const Options& o) { return verify_tau_tables(value_or(o.ppmax, 40), jobs_of(o)); }},
        {"xandf",
         [](const Options& o) {
             std::vector<SuiteReport> parts;
             for (const auto& mp : models_of(o)) {
                 parts.push_back(verify_Xandf(make_tau_table(mp), value_or<std::int64_t>(o.mmax, 5), jobs_of(o)));
             }
             return merge("xandf", std::move(parts));
         }},
        {"rocha2", [](const Options& o) { return verify_rocha2(rocha2_instances_of(o), cutoff_of(o, 40), jobs_of(o)); }},
        {"gen",
         [](const Options& o) {
             std::vector<SuiteReport> parts;
             for (const auto& mp : models_of(o)) {
                 parts.push_back(verify_GEN(make_tau_table(mp), value_or<std::int64_t>(o.mmax, 6), jobs_of(o)));
             }
             return merge("gen", std::move(parts));
         }},
        {"iands",
         [](const Options& o) {
             std::vector<SuiteReport> parts;
             for (const auto& mp : models_of(o)) {
                 parts.push_back(verify_IandS(make_tau_table(mp), value_or<std::int64_t>(o.mmax, 6), jobs_of(o)));
             }
             return merge("iands", std::move(parts));
         }},
        {"rigged",
         [](const Options& o) {
             std::vector<ModelParams> models;
             if (o.p || o.pp) {
                 models.emplace_back(need(o.p, "--p"), need(o.pp, "--pp"));
             } else {
                 models = {ModelParams(3, 4), ModelParams(4, 5)};
             }
             std::vector<SuiteReport> parts;
             for (const auto& mp : models) {
                 parts.push_back(verify_rigged(make_tau_table(mp), cutoff_of(o, 20), jobs_of(o)));
             }
             return merge("rigged", std::move(parts));
         }},
        {"pi2pi3", [](const Options& o) { return verify_pi2pi3(cutoff_of(o, 30)); }},
        {"pmn", [](const Options& o) { return verify_pmn(value_or<std::int64_t>(o.nmax, 6)); }},
        {"exactseq",
         [](const Options& o) {
             const std::int64_t n = value_or<std::int64_t>(o.nmax, 5);
             return verify_exact_sequence_chars(n, n);
         }},
        {"abf",
         [](const Options& o) {
             return verify_abf(value_or<std::int64_t>(o.nmax, 20), value_or(o.k, 1), value_or<std::int64_t>(o.qmax, 15));
         }},
        {"grading",
         [](const Options& o) {
             std::vector<SuiteReport> parts;
             for (int k : levels_of(o)) {
                 parts.push_back(verify_grading(k, value_or<std::int64_t>(o.mmax, 6), cutoff_of(o, 40), jobs_of(o)));
             }
             return merge("grading", std::move(parts));
         }},
        {"i1sector",
         [](const Options& o) {
             std::vector<SuiteReport> parts;
             for (int k : levels_of(o)) {
                 parts.push_back(verify_i1_sector(k, value_or<std::int64_t>(o.mmax, 6)));
             }
             return merge("i1sector", std::move(parts));
         }},
    };
    return table;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

void write_reports(const std::vector<SuiteReport>& reports, bool as_array, const Options& o, std::ostream& out)
{
    if (o.format == "csv") {
        out << "suite,id,status,detail\n";
        for (const auto& r : reports) {
            for (const auto& c : r.cases) {
                out << csv_field(r.suite) << ',' << csv_field(c.id) << ',' << to_string(c.status) << ','
                    << csv_field(c.detail) << '\n';
            }
        }
        return;
    }
    if (as_array) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
        }
        out << arr.dump(2) << '\n';
    } else {
        out << reports.front().to_json().dump(2) << '\n';
    }
}

void write_series_csv(const QSeries& s, std::ostream& out, const std::string& prefix = "", bool header = true)
{
    if (header) {
        out << (prefix.empty() ? "" : "m,") << "exponent,coefficient\n";
    }
    for (const auto& [e, c] : s.terms()) {
        out << prefix << e.to_string() << ',' << c.get_str() << '\n';
    }
}

nlohmann::json dense(const QSeries& s, const QExp& base, std::int64_t count)
{
    nlohmann::json arr = nlohmann::json::array();
    for (std::int64_t i = 0; i < count; ++i) {
        arr.push_back(s.coeff(base + QExp(i)).get_str());
    }
    return arr;
}

int cmd_char(const Options& o, std::ostream& out)
{
    const ModelParams mp(need(o.p, "--p"), need(o.pp, "--pp"));
    const int r = need(o.r, "--r");
    const int s = need(o.s, "--s");
    const ConformalData cd(mp);
    const QExp cutoff = cutoff_of(o, 40);
    const QSeries chi = rocha_caridi(mp, r, s, cutoff);
    if (o.format == "csv") {
        write_series_csv(chi, out);
        return ok;
    }
    nlohmann::json j{{"p", mp.p()},
                     {"pp", mp.p_prime()},
                     {"r", r},
                     {"s", s},
                     {"delta", to_json(cd.delta(r, s))},
                     {"central_charge", to_json(cd.central_charge())},
                     {"normalized", to_json(chi)},
                     {"coefficients", dense(chi, QExp(0), cutoff.num())}};
    out << j.dump(2) << '\n';
    return ok;
}

int cmd_paths(const Options& o, std::ostream& out)
{
    const ModelParams mp(need(o.p, "--p"), need(o.pp, "--pp"));
    const int a = need(o.a, "--a");
    const int b = need(o.b, "--b");
    const std::int64_t m = need(o.m, "--m");
    if (m < 0) {
        throw Usage("--m must be >= 0");
    }
    if (o.count) {
        out << count_paths(a, b, m, mp).get_str() << '\n';
        return ok;
    }
    const auto paths = enumerate_paths(a, b, m, mp);
    if (o.gf) {
        const TauTable tau = make_tau_table(mp);
        QSeries gf;
        if (o.r) {
            gf = path_side_GEN(tau, *o.r, a, b, m);
        } else {
            QSeries::Terms t;
            for (const auto& path : paths) {
                t[energy(path, tau)] += 1;
            }
            gf = QSeries(std::move(t));
        }
        if (o.format == "csv") {
            write_series_csv(gf, out);
        } else {
            out << to_json(gf).dump(2) << '\n';
        }
        return ok;
    }
    if (o.format == "csv") {
        for (const auto& path : paths) {
            for (std::size_t i = 0; i < path.sites.size(); ++i) {
                out << (i ? "," : "") << path.sites[i];
            }
            out << '\n';
        }
        return ok;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& path : paths) {
        arr.push_back(path.sites);
    }
    out << arr.dump() << '\n';
    return ok;
}

int cmd_grading(const Options& o, std::ostream& out)
{
    const int k = need(o.k, "--k");
    const int r = need(o.r, "--r");
    const int s = need(o.s, "--s");
    const std::int64_t mmax = value_or<std::int64_t>(o.mmax, 6);
    const QExp cutoff = cutoff_of(o, 40);
    nlohmann::json arr = nlohmann::json::array();
    for (std::int64_t m = 0; m <= mmax; ++m) {
        const QSeries g = graded_13_char(k, r, s, m, cutoff);
        if (o.format == "csv") {
            write_series_csv(g, out, std::to_string(m) + ",", m == 0);
        } else {
            arr.push_back({{"m", m}, {"series", to_json(g)}});
        }
    }
    if (o.format != "csv") {
        nlohmann::json j{{"k", k}, {"r", r}, {"s", s}, {"pieces", arr}};
        out << j.dump(2) << '\n';
    }
    return ok;
}

int cmd_table(const Options& o, std::ostream& out)
{
    SupernomialKind kind;
    if (o.kind == "plain") {
        kind = SupernomialKind::plain;
    } else if (o.kind == "tilde") {
        kind = SupernomialKind::tilde;
    } else {
        throw Usage("--kind must be plain or tilde");
    }
    out << supernomial_table(kind, static_cast<int>(value_or<std::int64_t>(o.mmax, 6))).dump(2) << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto it = suites().find(o.suite);
    if (it == suites().end()) {
        throw Usage("unknown suite '" + o.suite + "'");
    }
    const SuiteReport report = it->second(o);
    write_reports({report}, false, o, out);
    return report.passed() ? ok : verification_failed;
}

int cmd_all(const Options& o, std::ostream& out)
{
    // every suite at its default size, whatever model flags were given
    Options defaults;
    defaults.format = o.format;
    defaults.jobs = o.jobs;
    std::vector<SuiteReport> reports;
    bool all_passed = true;
    for (const auto& name : {"recurrences", "xandf", "rocha2", "gen", "iands", "rigged", "pi2pi3", "pmn", "exactseq",
                             "abf", "grading", "i1sector", "tau", "expansion"}) {
        reports.push_back(suites().at(name)(defaults));
        all_passed = all_passed && reports.back().passed();
    }
    write_reports(reports, true, o, out);
    return all_passed ? ok : verification_failed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series tools for Virasoro minimal-model characters, paths and fusion products", "qlab"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--jobs", o.jobs, "Worker threads (default: QLAB_JOBS or 1)");
    };
    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--p", o.p, "p of the minimal model");
        cmd->add_option("--pp", o.pp, "p' of the minimal model");
    };

    auto* ch = app.add_subcommand("char", "Normalised Virasoro character q^{-Delta} chi_{r,s}");
    add_model(ch);
    ch->add_option("--r", o.r);
    ch->add_option("--s", o.s);
    ch->add_option("--qmax", o.qmax, "Highest exponent computed (default 40)");
    add_common(ch);

    auto* paths = app.add_subcommand("paths", "Restricted paths from a to b of length m");
    add_model(paths);
    paths->add_option("--a", o.a);
    paths->add_option("--b", o.b);
    paths->add_option("--m", o.m);
    paths->add_option("--r", o.r, "With --gf: the exponent of the path-sum formula for this r");
    auto* list_flag = paths->add_flag("--list", o.list, "List the paths (default)");
    auto* count_flag = paths->add_flag("--count", o.count, "Print the number of paths");
    auto* gf_flag = paths->add_flag("--gf", o.gf, "Energy generating function");
    list_flag->excludes(count_flag)->excludes(gf_flag);
    count_flag->excludes(gf_flag);
    add_common(paths);

    auto* grading = app.add_subcommand("grading", "Graded pieces of the (1,3) filtration of M(k+2,k+3)_{r,s}");
    grading->add_option("--k", o.k);
    grading->add_option("--r", o.r);
    grading->add_option("--s", o.s);
    grading->add_option("--mmax", o.mmax, "Largest m (default 6)");
    grading->add_option("--qmax", o.qmax, "Highest exponent above Delta (default 40)");
    add_common(grading);

    auto* table = app.add_subcommand("table", "Table of supernomials S_{m,l} or their companions");
    table->add_option("--kind", o.kind, "plain or tilde");
    table->add_option("--mmax", o.mmax, "Largest m (default 6)");

    auto* verify = app.add_subcommand("verify", "Run one verification suite");
    std::vector<std::string> names;
    for (const auto& kv : suites()) {
        names.push_back(kv.first);
    }
    verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(names));
    add_model(verify);
    verify->add_option("--r", o.r);
    verify->add_option("--a", o.a);
    verify->add_option("--b", o.b);
    verify->add_option("--k", o.k, "Level for grading/i1sector/abf");
    verify->add_option("--mmax", o.mmax);
    verify->add_option("--qmax", o.qmax);
    verify->add_option("--nmax", o.nmax, "Size parameter for pmn/exactseq/abf");
    verify->add_option("--ppmax", o.ppmax, "Largest p' for the tau suite");
    add_common(verify);

    auto* all = app.add_subcommand("all", "Run every suite at its default size");
    add_common(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (ch->parsed()) {
            return cmd_char(o, out);
        }
        if (paths->parsed()) {
            return cmd_paths(o, out);
        }
        if (grading->parsed()) {
            return cmd_grading(o, out);
        }
        if (table->parsed()) {
            return cmd_table(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        return cmd_all(o, out);
    } catch (const Usage& e) {
        err << "qlab: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "qlab: " << e.what() << '\n';
        return usage_error;
    } catch (const std::domain_error& e) {
        err << "qlab: " << e.what() << '\n';
        return usage_error;
    }
}

} // namespace qlab::cli
