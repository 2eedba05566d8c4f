// fock-canon: exact canonical-basis columns, closed-formula coefficients,
// block combinatorics, and identity sweeps from the command line.
//
// Exit codes: 0 success / all checks pass; 1 a sweep found a counterexample;
// 2 usage error; 3 internal consistency error.  Logs go to standard error,
// data to standard output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fockcanon/fockcanon.hpp>

namespace fc = fockcanon;

namespace {

std::string latex_partition(const fc::Partition& p) {
    if (p.empty()) return "$\\varnothing$";
    return "$(" + fc::to_string(p) + ")$";
}

std::string latex_poly(const fc::Laurent& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, coeff] : poly.terms()) {
        fc::Int a = coeff;
        bool negative = a < 0;
        if (negative) a = -a;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mag = a.str();
        if (exp == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += exp == 1 ? "v" : "v^{" + std::to_string(exp) + "}";
        }
    }
    return "$" + out + "$";
}

void print_vector_text(std::ostream& os, const fc::FockVector& x) {
    if (x.is_zero()) {
        os << "0\n";
        return;
    }
    for (const auto& [p, c] : x.terms())
        os << fc::to_string(p) << " : " << c.str() << "\n";
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_vector_csv(std::ostream& os, const fc::FockVector& x,
                      const std::optional<fc::Partition>& label = std::nullopt) {
    for (const auto& [p, c] : x.terms()) {
        if (label) os << csv_quote(fc::to_string(*label)) << ",";
        os << csv_quote(fc::to_string(p)) << "," << csv_quote(c.str()) << "\n";
    }
}

void print_column_latex(std::ostream& os, const fc::Partition& mu, const fc::FockVector& x) {
    os << "% decomposition column for " << fc::to_string(mu) << "\n";
    os << "\\begin{tabular}{ll}\n";
    os << "$\\lambda$ & coefficient \\\\\n\\hline\n";
    for (const auto& [p, c] : x.terms())
        os << latex_partition(p) << " & " << latex_poly(c) << " \\\\\n";
    os << "\\end{tabular}\n";
}

fc::Json report_to_json(const fc::VerifyReport& rep) {
    fc::Json out;
    out["mode"] = rep.mode;
    out["pass"] = rep.pass();
    out["instances"] = rep.instances;
    out["checks"] = rep.checks;
    out["failures_total"] = rep.failures_total;
    fc::Json failures = fc::Json::array();
    for (const auto& f : rep.failures) {
        fc::Json one;
        one["instance"] = f.instance;
        one["detail"] = f.detail;
        failures.push_back(std::move(one));
    }
    out["failures"] = std::move(failures);
    return out;
}

struct Settings {
    int e = 2;
    int n = 0;
    int l = 0;
    int beads = 0;
    int jobs = 1;
    int samples = 200;
    std::uint64_t seed = 20260816ULL;
    std::string core, mu, lambda, format = "text", mode, kind, column_file, cache_dir;
    std::optional<int> max_n, max_core, max_weight;
    bool expand = false;
    std::vector<std::string> parts;
};

std::optional<std::string> cache_choice(const Settings& s) {
    if (!s.cache_dir.empty()) return fc::resolve_cache_dir(s.cache_dir);
    return fc::resolve_cache_dir();
}

void log_cache_note(const fc::CanonicalStore& store) {
    std::string note = store.last_note();
    if (!note.empty()) std::cerr << "note: " << note << "\n";
}

int run_lr(const Settings& s) {
    if (s.expand) {
        if (s.parts.size() != 2)
            throw std::invalid_argument("lr --expand takes two partitions: alpha beta");
        fc::Partition alpha = fc::parse_partition(s.parts[0]);
        fc::Partition beta = fc::parse_partition(s.parts[1]);
        int bound = static_cast<int>(alpha.size() + beta.size());
        auto product = fc::schur_product_oracle(alpha, beta, bound);
        fc::Json entries = fc::Json::array();
        for (const auto& [p, c] : product) {
            fc::Json one;
            one["partition"] = fc::partition_to_json(p);
            one["coefficient"] = c;
            entries.push_back(std::move(one));
        }
        fc::Json out;
        out["entries"] = std::move(entries);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (s.parts.size() != 3)
        throw std::invalid_argument("lr takes three partitions: outer alpha beta");
    std::cout << fc::lr_coefficient(fc::parse_partition(s.parts[0]),
                                    fc::parse_partition(s.parts[1]),
                                    fc::parse_partition(s.parts[2]))
              << "\n";
    return 0;
}

int run_canonical(const Settings& s) {
    fc::CanonicalStore store(cache_choice(s));
    const auto& cols = store.get(s.n, s.e);
    log_cache_note(store);

    std::vector<const fc::CanonicalColumn*> selected;
    if (!s.mu.empty()) {
        fc::Partition mu = fc::parse_partition(s.mu);
        for (const auto& col : cols)
            if (col.mu == mu) selected.push_back(&col);
        if (selected.empty())
            throw std::invalid_argument("no column labelled by (" + fc::to_string(mu) +
                                        "): the label must be an e-regular partition of n");
    } else {
        for (const auto& col : cols) selected.push_back(&col);
    }

    if (s.format == "json") {
        if (!s.mu.empty()) {
            std::cout << fc::fock_to_json(selected.front()->vector).dump(2) << "\n";
        } else {
            std::cout << fc::columns_to_json(cols, s.n, s.e).dump(2) << "\n";
        }
    } else if (s.format == "latex") {
        for (const auto* col : selected) print_column_latex(std::cout, col->mu, col->vector);
    } else if (s.format == "csv") {
        std::cout << (s.mu.empty() ? "\"mu\",\"lambda\",\"poly\"\n" : "\"lambda\",\"poly\"\n");
        for (const auto* col : selected)
            print_vector_csv(std::cout, col->vector,
                             s.mu.empty() ? std::optional<fc::Partition>(col->mu)
                                          : std::optional<fc::Partition>());
    } else {
        for (const auto* col : selected) {
            std::cout << "column " << fc::to_string(col->mu) << "\n";
            print_vector_text(std::cout, col->vector);
        }
    }
    return 0;
}

int run_hvector(const Settings& s) {
    fc::Partition mu = fc::parse_partition(s.mu);
    if (!s.core.empty()) {
        fc::Partition core = fc::parse_partition(s.core);
        if (fc::e_core(mu, s.e) != core)
            throw std::invalid_argument("the requested partition does not have the given core");
    }
    fc::FockVector h = fc::h_vector(mu, s.e);
    if (s.format == "json") {
        std::cout << fc::fock_to_json(h).dump(2) << "\n";
    } else if (s.format == "latex") {
        print_column_latex(std::cout, mu, h);
    } else if (s.format == "csv") {
        std::cout << "\"lambda\",\"poly\"\n";
        print_vector_csv(std::cout, h);
    } else {
        print_vector_text(std::cout, h);
    }
    return 0;
}

int run_pstar(const Settings& s) {
    fc::Partition core = fc::parse_partition(s.core);
    fc::Partition mu = fc::parse_partition(s.mu);
    fc::PstarDiagnosis diag = fc::pstar_check(core, s.e, mu);
    std::cout << (diag.member ? "true" : "false") << "\n";
    for (int i : diag.condition1_violations)
        std::cerr << "size bound fails around runner " << i << "\n";
    for (const auto& [i, j] : diag.condition2_violations)
        std::cerr << "saturated pair without positive slack between runners " << i << " and " << j
                  << "\n";
    return 0;
}

int run_mullineux(const Settings& s) {
    if (s.parts.size() != 1) throw std::invalid_argument("mullineux takes one partition");
    std::cout << fc::to_string(fc::mullineux(fc::parse_partition(s.parts[0]), s.e)) << "\n";
    return 0;
}

int run_eseq(const Settings& s) {
    if (s.parts.size() != 1) throw std::invalid_argument("eseq takes one partition");
    fc::InducedSequence seq =
        fc::induced_sequence(fc::parse_partition(s.parts[0]), s.e, s.beads);
    std::string out;
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(seq.values[i]);
    }
    std::cout << (out.empty() ? "-" : out) << "\n";
    return 0;
}

int run_arrows(const Settings& s) {
    if (s.parts.size() != 1) throw std::invalid_argument("arrows takes one partition");
    fc::Partition lam = fc::parse_partition(s.parts[0]);
    int t = s.beads > 0 ? s.beads : fc::common_display_beads(lam, lam, s.e);
    if (s.format == "json") {
        fc::Json arr = fc::Json::array();
        for (const fc::ArrowPair& ap : fc::arrow_pairs(lam, s.e, t)) {
            fc::Json one;
            one["sigma"] = fc::partition_to_json(ap.sigma);
            one["tau"] = fc::partition_to_json(ap.tau);
            one["hops"] = ap.hops;
            one["from"] = ap.from_a;
            one["to"] = ap.to_b;
            one["crossings_first"] = ap.l_lambda_sigma;
            one["crossings_second"] = ap.l_tau_sigma;
            arr.push_back(std::move(one));
        }
        fc::Json out;
        out["beads"] = t;
        out["arrows"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const fc::ArrowPair& ap : fc::arrow_pairs(lam, s.e, t))
            std::cout << "sigma=" << fc::to_string(ap.sigma) << " tau=" << fc::to_string(ap.tau)
                      << " hops=" << ap.hops << " from=" << ap.from_a << " to=" << ap.to_b
                      << " crossings=" << ap.l_lambda_sigma << "+" << ap.l_tau_sigma << "\n";
    }
    return 0;
}

int run_order(const Settings& s) {
    if (s.parts.size() != 2) throw std::invalid_argument("order takes two partitions");
    fc::Partition p = fc::parse_partition(s.parts[0]);
    fc::Partition q = fc::parse_partition(s.parts[1]);
    bool result = s.kind == "p" ? fc::leq_p(p, q, s.e) : fc::leq_J(p, q, s.e);
    std::cout << (result ? "true" : "false") << "\n";
    return 0;
}

int run_jantzen(const Settings& s) {
    if (s.l == 1)
        throw std::invalid_argument("characteristic 1 is not meaningful; use 0 or a prime");
    fc::Partition mu = fc::parse_partition(s.mu);
    fc::Partition lam = fc::parse_partition(s.lambda);

    std::map<fc::Partition, fc::Int, fc::LexGreater> values;
    for (const fc::Partition& member :
         fc::block_partitions(fc::e_core(mu, s.e), s.e, fc::e_weight(mu, s.e)))
        values[member] = 0;

    if (!s.column_file.empty()) {
        std::ifstream in(s.column_file);
        if (!in) throw std::invalid_argument("cannot open column file " + s.column_file);
        for (const auto& [p, v] : fc::column_values_from_json(fc::Json::parse(in))) values[p] = v;
    } else {
        if (!fc::is_e_regular(mu, s.e))
            throw std::invalid_argument(
                "without --column the target label must be e-regular so its column can be "
                "computed");
        fc::CanonicalStore store(cache_choice(s));
        const auto& cols = store.get(static_cast<int>(mu.size()), s.e);
        log_cache_note(store);
        const fc::CanonicalColumn* found = nullptr;
        for (const auto& col : cols)
            if (col.mu == mu) found = &col;
        if (!found) throw fc::InternalError("column labelled by the target is missing");
        for (const auto& [p, c] : found->vector.terms()) values[p] = c.evaluate_at_one();
    }

    std::cout << fc::jantzen_sum(lam, mu, s.e, s.l, values).str() << "\n";
    return 0;
}

int run_profile(const Settings& s) {
    fc::CoreProfile prof = fc::core_profile(fc::parse_partition(s.core), s.e);
    if (s.format == "json") {
        std::cout << fc::profile_to_json(prof).dump(2) << "\n";
        return 0;
    }
    std::cout << "counts:";
    for (int c : prof.n) std::cout << " " << c;
    std::cout << "\nchain:";
    for (int r : prof.chain) std::cout << " " << r;
    std::cout << "\nd:";
    for (int i = 1; i < prof.e; ++i) std::cout << " " << prof.d[static_cast<std::size_t>(i)];
    std::cout << "\nM: " << prof.M << "\ninversions: " << prof.inversions
              << "\nrouquier: " << (prof.rouquier ? "true" : "false") << "\n";
    return 0;
}

int run_verify(const Settings& s) {
    fc::VerifyOptions opts;
    opts.e = s.e;
    if (!s.core.empty()) opts.core = fc::parse_partition(s.core);
    opts.max_n = s.max_n;
    opts.max_core = s.max_core;
    opts.max_weight = s.max_weight;
    opts.jobs = s.jobs;
    opts.seed = s.seed;
    opts.samples = s.samples;

    fc::CanonicalStore store(cache_choice(s));
    fc::VerifyReport rep = fc::run_verify(s.mode, opts, store);
    log_cache_note(store);

    if (s.format == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << rep.summary() << "\n";
        for (const auto& f : rep.failures) std::cout << "  [" << f.instance << "] " << f.detail << "\n";
        if (rep.failures_total > static_cast<long long>(rep.failures.size()))
            std::cout << "  ... and " << rep.failures_total - static_cast<long long>(rep.failures.size())
                      << " more failures\n";
    }
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact canonical-basis columns and block combinatorics"};
    app.require_subcommand(1);
    Settings s;
    int code = 0;

    auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", s.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };
    auto add_e = [&](CLI::App* cmd) {
        cmd->add_option("--e", s.e, "quantum characteristic (at least 2)")
            ->required()
            ->check(CLI::Range(2, 1000));
    };
    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache-dir", s.cache_dir,
                        "directory for cached column sets (default: FOCK_CANON_CACHE_DIR or a "
                        "per-user cache directory)");
    };

    CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^outer_{alpha,beta}");
    lr->add_flag("--expand", s.expand, "expand a product of two Schur elements as JSON");
    lr->add_option("partitions", s.parts, "outer alpha beta (or alpha beta with --expand)");
    lr->callback([&] { code = run_lr(s); });

    CLI::App* canonical = app.add_subcommand("canonical", "canonical basis columns at one size");
    add_e(canonical);
    canonical->add_option("--n", s.n, "partition size")->required()->check(CLI::Range(0, 64));
    canonical->add_option("--mu", s.mu, "restrict to the column with this label");
    add_format(canonical, {"text", "json", "latex", "csv"});
    add_cache(canonical);
    canonical->callback([&] { code = run_canonical(s); });

    CLI::App* hvector = app.add_subcommand("hvector", "closed-formula column for one label");
    add_e(hvector);
    hvector->add_option("--core", s.core, "expected core (validated)");
    hvector->add_option("--mu", s.mu, "label partition")->required();
    add_format(hvector, {"text", "json", "latex", "csv"});
    hvector->callback([&] { code = run_hvector(s); });

    CLI::App* pstar = app.add_subcommand("pstar", "locally-small class membership");
    add_e(pstar);
    pstar->add_option("--core", s.core, "core partition")->required();
    pstar->add_option("--mu", s.mu, "candidate partition")->required();
    pstar->callback([&] { code = run_pstar(s); });

    CLI::App* mull = app.add_subcommand("mullineux", "image under the Mullineux map");
    add_e(mull);
    mull->add_option("partition", s.parts, "an e-regular partition")->expected(1);
    mull->callback([&] { code = run_mullineux(s); });

    CLI::App* eseq = app.add_subcommand("eseq", "induced e-sequence of a partition");
    add_e(eseq);
    eseq->add_option("--beads", s.beads, "display size")->required()->check(CLI::Range(1, 10000));
    eseq->add_option("partition", s.parts, "partition")->expected(1);
    eseq->callback([&] { code = run_eseq(s); });

    CLI::App* arrows = app.add_subcommand("arrows", "single-move pair relations out of a partition");
    add_e(arrows);
    arrows->add_option("--beads", s.beads, "display size (default: derived from the block)");
    add_format(arrows, {"text", "json"});
    arrows->add_option("partition", s.parts, "partition")->expected(1);
    arrows->callback([&] { code = run_arrows(s); });

    CLI::App* order = app.add_subcommand("order", "compare two partitions in a block order");
    add_e(order);
    order->add_option("kind", s.kind, "p (induced-sequence order) or j (move order)")
        ->required()
        ->check(CLI::IsMember({"p", "j"}));
    order->add_option("partitions", s.parts, "two partitions")->expected(2);
    order->callback([&] { code = run_order(s); });

    CLI::App* jantzen = app.add_subcommand("jantzen", "alternating move-sum bound J");
    add_e(jantzen);
    jantzen->add_option("--mu", s.mu, "column label")->required();
    jantzen->add_option("--lambda", s.lambda, "row label")->required();
    jantzen->add_option("--l", s.l, "characteristic (0 or a prime; 1 is rejected)")
        ->check(CLI::Range(0, 1'000'000));
    jantzen->add_option("--column", s.column_file,
                        "JSON vector file giving the column values at v=1 (absent labels are 0)");
    add_cache(jantzen);
    jantzen->callback([&] { code = run_jantzen(s); });

    CLI::App* profile = app.add_subcommand("profile", "runner-order profile of a core");
    add_e(profile);
    profile->add_option("--core", s.core, "core partition")->required();
    add_format(profile, {"text", "json"});
    profile->callback([&] { code = run_profile(s); });

    CLI::App* verify = app.add_subcommand("verify", "exhaustive identity sweeps");
    verify->add_option("mode", s.mode, "sweep family")
        ->required()
        ->check(CLI::IsMember(fc::verify_mode_names()));
    add_e(verify);
    verify->add_option("--core", s.core, "restrict to one core");
    verify->add_option("--max-n", s.max_n, "size bound");
    verify->add_option("--max-core", s.max_core, "core size bound");
    verify->add_option("--max-weight", s.max_weight, "block weight bound");
    verify->add_option("--jobs", s.jobs, "worker threads")->check(CLI::Range(1, 512));
    verify->add_option("--seed", s.seed, "seed for sampling sweeps");
    verify->add_option("--samples", s.samples, "sample count for sampling sweeps")
        ->check(CLI::Range(1, 1'000'000));
    add_format(verify, {"text", "json"});
    add_cache(verify);
    verify->callback([&] { code = run_verify(s); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const fc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return code;
}
