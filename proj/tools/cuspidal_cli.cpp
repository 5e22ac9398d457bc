// cuspidal: command-line front end over the library.
#include "cuspidal/enumerator.hpp"
#include "cuspidal/existence.hpp"
#include "cuspidal/families.hpp"
#include "cuspidal/io.hpp"
#include "cuspidal/reproduce.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cusp;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string format = "json";
    int jobs = 0;
    bool serial = false;
    bool no_timing = false;
};

void add_common(CLI::App* sub, Common& c, bool jobs, bool records = true) {
    if (records)
        sub->add_option("--format", c.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
    sub->add_flag("--no-timing", c.no_timing, "omit elapsed_ms from JSON output");
    if (jobs) {
        sub->add_option("--jobs", c.jobs, "worker threads (0: OpenMP default)")
            ->envname("CUSPIDAL_JOBS")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--serial", c.serial, "use the serial reference kernel");
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int emit(OutputDocument& doc, const Common& c, std::chrono::steady_clock::time_point t0) {
    doc.elapsed_ms = c.no_timing ? -1 : ms_since(t0);
    std::sort(doc.records.begin(), doc.records.end(), canonical_less);
    std::cout << render(doc, parse_format(c.format));
    return 0;
}

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational unicuspidal plane curves: enumeration, invariants, families, existence"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Common common;

    // enumerate
    int64_t e_degree = 0;
    int e_pairs = 0;
    bool e_paranoid = false;
    auto* enumerate = app.add_subcommand("enumerate", "B-L survivors of one degree and pair count");
    enumerate->add_option("--degree", e_degree, "degree d >= 3")->required();
    enumerate->add_option("--pairs", e_pairs, "number of Newton pairs, 1..4")->required();
    enumerate->add_flag("--paranoid", e_paranoid, "naive full scan instead of the pruned search");
    add_common(enumerate, common, true);

    // classify
    int64_t c_max = 30;
    int c_pairs = 0;
    auto* classify = app.add_subcommand("classify", "all survivors up to a degree, annotated");
    classify->add_option("--max-degree", c_max, "largest degree")->check(CLI::Range(int64_t{3}, int64_t{200}));
    classify->add_option("--pairs", c_pairs, "restrict to this number of pairs");
    add_common(classify, common, true);

    // invariants
    std::string i_pairs;
    int64_t i_degree = 0;
    auto* invariants = app.add_subcommand("invariants", "full record for one Newton pair sequence");
    invariants->add_option("--pairs", i_pairs, "e.g. \"(2,3),(2,5)\"")->required();
    invariants->add_option("--degree", i_degree, "curve degree")->required();
    add_common(invariants, common, false);

    // reproduce
    std::string r_table;
    int64_t r_max = 30;
    auto* reproduce = app.add_subcommand("reproduce", "regenerate a reference table and diff it");
    reproduce->add_option("--table", r_table, "table id")->required();
    reproduce->add_option("--max-degree", r_max, "degree bound for the classification tables")
        ->check(CLI::Range(int64_t{3}, int64_t{30}));
    std::string r_format = "text";
    reproduce->add_option("--format", r_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_common(reproduce, common, true, false);

    // family
    std::string f_kind, f_params, f_lambda, f_factors;
    std::optional<int64_t> f_a, f_s, f_n, f_l, f_k;
    auto* family = app.add_subcommand("family", "generate one curve of a named family");
    family->add_option("kind", f_kind, "family kind")->required();
    family->add_option("--params", f_params, "raw parameter list, comma separated");
    family->add_option("--a", f_a);
    family->add_option("--s", f_s);
    family->add_option("--n", f_n);
    family->add_option("--l", f_l);
    family->add_option("--k", f_k);
    family->add_option("--lambda", f_lambda, "Kashiwara lambda_1..lambda_N, comma separated");
    family->add_option("--factors", f_factors, "AMS ordered factorization, comma separated");
    add_common(family, common, false);

    // reduce
    int64_t red_degree = 0;
    std::string red_mult, red_registry;
    auto* reduce = app.add_subcommand("reduce", "existence by reduction to the base registry");
    reduce->add_option("--degree", red_degree, "degree")->required();
    reduce->add_option("--mult", red_mult, "multiplicity sequence, e.g. \"16,8_4,4_3,2_3\"")->required();
    reduce->add_option("--registry", red_registry, "alternate base registry file")->check(CLI::ExistingFile);
    add_common(reduce, common, false);

    // factorizations
    int64_t fa_n = 0;
    auto* factorizations = app.add_subcommand("factorizations", "ordered factorizations and the AMS curves");
    factorizations->add_option("--n", fa_n, "n >= 1")->required()->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
    add_common(factorizations, common, false);

    // prime-scan
    int64_t p_max = 0;
    auto* prime_scan = app.add_subcommand("prime-scan", "prime degrees carrying a kappa >= 0 or II_sp family");
    prime_scan->add_option("--max", p_max, "largest degree")->required()->check(CLI::Range(int64_t{2}, int64_t{10000000}));
    add_common(prime_scan, common, false);

    auto* schema = app.add_subcommand("schema", "print the JSON schema of a curve record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const Kernel kernel = common.serial ? Kernel::serial : Kernel::openmp;
    try {
        if (*enumerate) {
            SearchConfig cfg{e_degree, e_pairs, e_paranoid ? SearchMode::paranoid : SearchMode::pruned, common.jobs,
                             kernel};
            SearchStats stats;
            OutputDocument doc;
            doc.command = "enumerate";
            doc.mode = e_paranoid ? "paranoid" : "pruned";
            for (auto& r : enumerate_candidates(cfg, &stats)) {
                annotate(r);
                doc.records.push_back(std::move(r));
            }
            doc.extra = {{"work_units", stats.work_units},
                         {"delta_solutions", stats.delta_solutions},
                         {"bl_rejected", stats.bl_rejected},
                         {"tangent_rejected", stats.tangent_rejected}};
            return emit(doc, common, t0);
        }
        if (*classify) {
            ClassifyOptions opts;
            if (c_pairs) opts.only_pairs = c_pairs;
            opts.workers = common.jobs;
            opts.kernel = kernel;
            OutputDocument doc;
            doc.command = "classify";
            doc.mode = "pruned";
            doc.records = classify_range(c_max, opts);
            if (c_max > 30) doc.extra = {{"note", "degrees above 30: k >= 5 not searched, list not proved complete"}};
            return emit(doc, common, t0);
        }
        if (*invariants) {
            auto n = parse_pairs(i_pairs);
            validate(n);
            auto r = make_record(i_degree, n);
            annotate(r);
            OutputDocument doc;
            doc.command = "invariants";
            doc.records.push_back(r);
            if (r.delta != genus_target(r.degree))
                doc.extra = {{"warning", "delta " + r.delta.str() + " != genus_target " +
                                             genus_target(r.degree).str() + ": not a rational unicuspidal curve"}};
            return emit(doc, common, t0);
        }
        if (*reproduce) {
            ReproduceOptions opts{r_max, common.jobs, kernel};
            std::vector<ReproduceReport> reports;
            if (r_table == "all")
                reports = reproduce_all(opts);
            else if (is_table_id(r_table))
                reports.push_back(reproduce_table(r_table, opts));
            else {
                std::cerr << "error: unknown table id '" << r_table << "'; known:";
                for (const auto& id : table_ids()) std::cerr << " " << id;
                std::cerr << "\n";
                return kExitUsage;
            }
            bool ok = true;
            if (r_format == "json") {
                json out = json::array();
                for (const auto& r : reports)
                    out.push_back({{"table", r.table},
                                   {"ok", r.ok},
                                   {"expected_rows", r.expected_rows},
                                   {"generated_rows", r.generated_rows},
                                   {"matched_rows", r.matched_rows},
                                   {"missing", r.missing},
                                   {"extra", r.extra},
                                   {"info", r.info}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& r : reports) std::cout << format_report(r);
            }
            for (const auto& r : reports) ok = ok && r.ok;
            return ok ? 0 : kExitMismatch;
        }
        if (*family) {
            auto kind = kind_from_name(f_kind);
            if (!kind) {
                std::cerr << "error: unknown family kind '" << f_kind << "'\n";
                return kExitUsage;
            }
            FamilySpec spec{*kind, {}};
            if (!f_params.empty()) {
                spec.params = parse_int_list(f_params);
            } else {
                switch (*kind) {
                    case FamilyKind::AMS: spec.params = parse_int_list(f_factors); break;
                    case FamilyKind::KashiwaraIIge:
                    case FamilyKind::KashiwaraIIsp: spec.params = {f_l.value_or(-1)}; break;
                    case FamilyKind::TonoIa: spec.params = {f_a.value_or(-1)}; break;
                    case FamilyKind::TonoIb: spec.params = {f_a.value_or(-1), f_s.value_or(-1)}; break;
                    case FamilyKind::TonoIIa: spec.params = {f_n.value_or(-1)}; break;
                    case FamilyKind::TonoIIb: spec.params = {f_n.value_or(-1), f_s.value_or(-1)}; break;
                    case FamilyKind::Orevkov:
                    case FamilyKind::OrevkovStar: spec.params = {f_k.value_or(-1)}; break;
                    case FamilyKind::SmoothConic: break;
                    default: {
                        auto lam = parse_int_list(f_lambda);
                        spec.params = {f_l.value_or(-1), static_cast<int64_t>(lam.size())};
                        spec.params.insert(spec.params.end(), lam.begin(), lam.end());
                    }
                }
            }
            auto r = family_curve(spec);
            if (!r.newton.empty()) {
                auto fam = r.family;
                r.family.reset();
                annotate(r);
                r.family = fam;
                r.kodaira = family_kodaira(spec.kind);
                if (!is_proved(r.existence)) r.existence = Existence::proved_family;
            }
            OutputDocument doc;
            doc.command = "family";
            doc.records.push_back(r);
            const auto cf = invariant_closed_forms(spec);
            doc.extra = {{"closed_form_lct", rational_str(cf.lct)},
                         {"closed_form_self_intersection", cf.self_intersection}};
            if (cf.printed_lct) {
                doc.extra["printed_lct"] = rational_str(*cf.printed_lct);
                doc.extra["note"] = cf.note;
            }
            return emit(doc, common, t0);
        }
        if (*reduce) {
            auto m = parse_mult(red_mult);
            ExistenceResult res;
            if (!red_registry.empty()) {
                std::ifstream in(red_registry);
                std::stringstream ss;
                ss << in.rdbuf();
                res = resolve_existence(red_degree, m, BaseRegistry::parse(ss.str()));
            } else {
                res = resolve_existence(red_degree, m);
            }
            const Format f = parse_format(common.format);
            if (f == Format::json) {
                CurveRecord shell;
                shell.degree = red_degree;
                shell.mult = m;
                shell.reduction_chain = res.chain;
                json chain = record_to_json(shell)["reduction_chain"];
                json out{{"tool", kToolVersion}, {"command", "reduce"}, {"degree", red_degree},
                         {"multiplicity_sequence", format_mult(m)}, {"existence", to_string(res.status)},
                         {"reduction_chain", chain}, {"trace", format_chain(res.chain)}};
                std::cout << out.dump(2) << "\n";
            } else {
                const std::string sep = f == Format::csv ? "," : " | ";
                if (f == Format::md) std::cout << "| degree | multiplicity_sequence | existence | reduction_chain |\n| --- | --- | --- | --- |\n";
                else std::cout << "degree,multiplicity_sequence,existence,reduction_chain\n";
                auto q = [&](const std::string& s) { return f == Format::csv ? "\"" + s + "\"" : s; };
                std::cout << (f == Format::md ? "| " : "") << red_degree << sep << q(format_mult(m)) << sep
                          << to_string(res.status) << sep << q(format_chain(res.chain)) << (f == Format::md ? " |" : "")
                          << "\n";
            }
            return 0;
        }
        if (*factorizations) {
            OutputDocument doc;
            doc.command = "factorizations";
            const auto fs = ordered_factorizations(fa_n);
            doc.extra = {{"n", fa_n}, {"count", big_to_json(ordered_factorization_count(fa_n))}, {"factorizations", fs}};
            if (fa_n >= 2) doc.records = ams_all(fa_n);
            for (auto& r : doc.records) annotate(r);
            return emit(doc, common, t0);
        }
        if (*prime_scan) {
            OutputDocument doc;
            doc.command = "prime-scan";
            json primes = json::array();
            for (const auto& hit : prime_degree_scan(p_max)) {
                json fams = json::array();
                for (const auto& spec : hit.families) {
                    fams.push_back(describe(spec));
                    doc.records.push_back(family_curve(spec));
                    annotate(doc.records.back());
                }
                primes.push_back({{"prime", hit.prime}, {"families", fams}});
            }
            doc.extra = {{"max", p_max}, {"primes", primes}};
            return emit(doc, common, t0);
        }
        if (*schema) {
            std::cout << record_schema().dump(2) << "\n";
            return 0;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
