// palfact — prefix palindromic length of morphic words, with closed forms
// and a verification harness for the Thue-Morse word.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palfact/ppl.hpp"
#include "palfact/regular.hpp"
#include "palfact/thue_morse.hpp"
#include "palfact/words.hpp"

namespace {

using namespace palfact;

enum class Algo { Fast, Naive, Closed, Matrix };
enum class Format { Csv, Json };

struct PplOptions {
    std::string word = "thue-morse";
    std::string morphism_file;
    std::string start;
    std::uint64_t n = 0;
    Algo algo = Algo::Fast;
    Format format = Format::Csv;
};

std::size_t oracle_bound_from_env() {
    if (const char* env = std::getenv("PALFACT_ORACLE_BOUND")) {
        const unsigned long long parsed = std::strtoull(env, nullptr, 10);
        if (parsed > 0) {
            return static_cast<std::size_t>(parsed);
        }
    }
    return kDefaultOracleBound;
}

std::string read_word_file(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open word file: " + path);
    }
    std::string letters;
    char c;
    while (in.get(c)) {
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') {
            continue;
        }
        if (c < 'a' || c > 'z') {
            throw std::invalid_argument("word files must use lowercase ASCII letters");
        }
        letters.push_back(c);
    }
    if (letters.size() < n) {
        throw std::invalid_argument("word file holds " + std::to_string(letters.size()) +
                                    " letters, fewer than requested n");
    }
    letters.resize(n);
    return letters;
}

std::string resolve_word(const PplOptions& opt) {
    if (!opt.morphism_file.empty()) {
        const Morphism m = load_morphism_file(opt.morphism_file);
        const char start = opt.start.empty() ? m.rules().front().first : opt.start[0];
        return fixed_point_prefix(m, start, opt.n).str();
    }
    if (opt.word.rfind("file:", 0) == 0) {
        return read_word_file(opt.word.substr(5), opt.n);
    }
    return builtin_word(opt.word, opt.n).str();
}

PplTable compute_table(const PplOptions& opt) {
    switch (opt.algo) {
        case Algo::Fast:
            return ppl_all(resolve_word(opt));
        case Algo::Naive:
            return ppl_all_naive(resolve_word(opt), oracle_bound_from_env());
        case Algo::Closed: {
            PplTable table(opt.n + 1);
            for (std::uint64_t i = 0; i <= opt.n; ++i) {
                table[i] = static_cast<std::uint32_t>(tm::ppl(i));
            }
            return table;
        }
        case Algo::Matrix: {
            const tm::LinearRepresentation rep = tm::build_representation();
            PplTable table(opt.n + 1);
            for (std::uint64_t i = 0; i <= opt.n; ++i) {
                table[i] = static_cast<std::uint32_t>(tm::eval(rep, i));
            }
            return table;
        }
    }
    throw std::logic_error("unreachable");
}

int run_ppl(const PplOptions& opt) {
    if ((opt.algo == Algo::Closed || opt.algo == Algo::Matrix) &&
        (opt.word != "thue-morse" || !opt.morphism_file.empty())) {
        std::cerr << "the closed and matrix algorithms apply to thue-morse only\n";
        return 2;
    }
    const PplTable table = compute_table(opt);
    if (opt.format == Format::Csv) {
        write_csv(std::cout, table);
    } else {
        write_jsonl(std::cout, table);
    }
    return 0;
}

int run_sp(unsigned k, bool want_sp2, bool base4) {
    if (want_sp2) {
        const auto value = tm::sp2(k);
        if (!value) {
            std::cout << "inf\n";
            return 0;
        }
        std::cout << (base4 ? value->get_str(4) : value->get_str()) << '\n';
        return 0;
    }
    if (base4) {
        std::cout << tm::sp_quaternary(k) << '\n';
    } else {
        std::cout << tm::sp(k).get_str() << '\n';
    }
    return 0;
}

int run_verify(std::uint64_t n_max, const std::string& checks_csv) {
    std::vector<std::string> selected;
    if (!checks_csv.empty()) {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) {
                selected.push_back(item);
            }
        }
    }
    const auto& identity_names = tm::identity_check_names();
    std::vector<std::string> identity_subset;
    bool run_identities = selected.empty();
    bool run_representation = selected.empty();
    for (const std::string& name : selected) {
        if (name == "linear-representation") {
            run_representation = true;
        } else if (std::find(identity_names.begin(), identity_names.end(), name) !=
                   identity_names.end()) {
            identity_subset.push_back(name);
            run_identities = true;
        } else {
            std::cerr << "unknown check: " << name << '\n';
            return 2;
        }
    }

    VerificationReport report;
    if (run_identities) {
        report = tm::verify_identities(n_max, identity_subset);
    }
    if (run_representation) {
        report.merge(tm::verify_representation(tm::build_representation(), n_max));
    }
    std::cout << report.to_json().dump(2) << '\n';
    return report.ok() ? 0 : 1;
}

int run_matrices(Format format) {
    const tm::LinearRepresentation rep = tm::build_representation();
    if (format == Format::Json) {
        std::cout << tm::representation_json(rep).dump(2) << '\n';
    } else {
        tm::print_representation(std::cout, rep);
    }
    return 0;
}

int run_bench(std::uint64_t n) {
    const std::string word = builtin_word("thue-morse", n).str();
    const std::size_t naive_bound = oracle_bound_from_env();
    std::cout << "# bench word=thue-morse n=" << n << "\nalgo,ms\n";
    const auto time_ms = [](auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    };
    std::cout << "fast," << time_ms([&] { ppl_all(word); }) << '\n';
    if (n <= naive_bound) {
        std::cout << "naive," << time_ms([&] { ppl_all_naive(word, naive_bound); }) << '\n';
    } else {
        std::cout << "naive,skipped (bound " << naive_bound << ")\n";
    }
    std::cout << "closed," << time_ms([&] {
        for (std::uint64_t i = 0; i <= n; ++i) {
            volatile std::uint64_t v = tm::ppl(i);
            (void)v;
        }
    }) << '\n';
    const tm::LinearRepresentation rep = tm::build_representation();
    std::cout << "matrix," << time_ms([&] {
        for (std::uint64_t i = 0; i <= n; ++i) {
            volatile std::int64_t v = tm::eval(rep, i);
            (void)v;
        }
    }) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prefix palindromic length toolkit"};
    app.require_subcommand(1);

    const std::map<std::string, Algo> algo_names{{"fast", Algo::Fast},
                                                 {"naive", Algo::Naive},
                                                 {"closed", Algo::Closed},
                                                 {"matrix", Algo::Matrix}};
    const std::map<std::string, Format> table_formats{{"csv", Format::Csv},
                                                      {"json", Format::Json}};
    const std::map<std::string, Format> matrix_formats{{"text", Format::Csv},
                                                       {"json", Format::Json}};

    PplOptions ppl_opt;
    CLI::App* ppl_cmd = app.add_subcommand("ppl", "PPL table of a word prefix");
    ppl_cmd->add_option("--word", ppl_opt.word,
                        "thue-morse|fibonacci|period-doubling|file:PATH");
    ppl_cmd->add_option("--morphism-file", ppl_opt.morphism_file,
                        "fixed point of a morphism given as `letter -> image` lines");
    ppl_cmd->add_option("--start", ppl_opt.start, "start letter for --morphism-file");
    ppl_cmd->add_option("--n", ppl_opt.n, "prefix length")->required();
    ppl_cmd->add_option("--algo", ppl_opt.algo, "fast|naive|closed|matrix")
        ->transform(CLI::CheckedTransformer(algo_names));
    ppl_cmd->add_option("--format", ppl_opt.format, "csv|json")
        ->transform(CLI::CheckedTransformer(table_formats));

    unsigned sp_k = 1;
    bool sp_base4 = false;
    bool sp_sp2 = false;
    CLI::App* sp_cmd = app.add_subcommand("sp", "shortest prefix of palindromic length k");
    sp_cmd->add_option("--k", sp_k, "target palindromic length")
        ->required()
        ->check(CLI::PositiveNumber);
    sp_cmd->add_flag("--base4", sp_base4, "print base-4 digits");
    sp_cmd->add_flag("--sp2", sp_sp2, "least n with PPL(n) = PPL(n+1) = k");

    std::uint64_t diff_n = 0;
    CLI::App* diff_cmd = app.add_subcommand("diff", "difference fixed point over {+,0,-}");
    diff_cmd->add_option("--n", diff_n, "number of symbols")->required();

    std::uint64_t verify_n_max = 4096;
    std::string verify_checks;
    CLI::App* verify_cmd = app.add_subcommand("verify", "machine-check the identities");
    verify_cmd->add_option("--n-max", verify_n_max, "prefix length to check");
    verify_cmd->add_option("--checks", verify_checks, "comma-separated check names");

    Format matrices_format = Format::Csv;
    CLI::App* matrices_cmd = app.add_subcommand("matrices", "print the linear representation");
    matrices_cmd->add_option("--format", matrices_format, "text|json")
        ->transform(CLI::CheckedTransformer(matrix_formats));

    std::uint64_t bench_n = 0;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the four algorithms");
    bench_cmd->add_option("--n", bench_n, "prefix length")->required();

    std::uint64_t plot_n = 0;
    CLI::App* plot_cmd = app.add_subcommand("plot", "CSV n,ppl for plotting");
    plot_cmd->add_option("--n", plot_n, "prefix length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ppl_cmd->parsed()) {
            return run_ppl(ppl_opt);
        }
        if (sp_cmd->parsed()) {
            return run_sp(sp_k, sp_sp2, sp_base4);
        }
        if (diff_cmd->parsed()) {
            std::cout << tm::diff_prefix_string(diff_n) << '\n';
            return 0;
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_n_max, verify_checks);
        }
        if (matrices_cmd->parsed()) {
            return run_matrices(matrices_format);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_n);
        }
        if (plot_cmd->parsed()) {
            write_csv(std::cout, ppl_all(builtin_word("thue-morse", plot_n)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
