#include "cli.hh"

#include "rnastruct/align_dp.hh"
#include "rnastruct/exact_match.hh"
#include "rnastruct/oracle.hh"
#include "rnastruct/report.hh"
#include "rnastruct/scoring.hh"
#include "rnastruct/structure.hh"

#include <CLI11.hpp>

#include <ostream>

namespace rnastruct::cli {

    namespace {

        struct Options {
            std::string file1;
            std::string file2;
            std::string scheme_file;
            std::string format = "text";
            std::string mode = "global";
            bool all_ends = false;
            bool strict_pairs = false;
        };

        // parse/scheme failure already formatted as "file:line: message"
        struct InputError {
            std::string message;
        };

        std::string
        where(const std::string &file, int line) {
            return line > 0 ? file + ":" + std::to_string(line) : file;
        }

        RnaStructure
        load_structure(const std::string &file, bool strict, std::ostream &err) {
            RnaStructure r;
            try {
                r = read_structure_file(file);
            } catch (const ParseError &e) {
                throw InputError{where(file, e.line()) + ": " + e.what()};
            } catch (const InvalidStructure &e) {
                throw InputError{file + ": " + e.what()};
            }
            if (strict) {
                for (const auto &bp : noncanonical_pairs(r))
                    err << "warning: " << file << ": non-canonical pair (" << bp.five << "," << bp.three
                        << ") " << to_char(r.base(bp.five)) << '-' << to_char(r.base(bp.three)) << '\n';
            }
            return r;
        }

        ScoringScheme
        load_scheme_option(const std::string &file) {
            if (file.empty())
                return default_scheme();
            try {
                return read_scheme_file(file);
            } catch (const SchemeError &e) {
                throw InputError{where(file, e.line()) + ": " + e.what()};
            }
        }

        void
        add_inputs(CLI::App *sub, Options &opt) {
            sub->add_option("-1", opt.file1, "first structure file (pattern)")->required();
            sub->add_option("-2", opt.file2, "second structure file (text)")->required();
            sub->add_flag("--strict-pairs", opt.strict_pairs, "warn about non-canonical base pairs");
        }

        void
        add_scoring(CLI::App *sub, Options &opt) {
            sub->add_option("--scheme", opt.scheme_file, "scoring scheme file");
            sub->add_option("--format", opt.format, "output format")
                ->check(CLI::IsMember({"text", "tsv"}));
        }

        int
        run_exact(const Options &opt, std::ostream &out, std::ostream &err) {
            auto r1 = load_structure(opt.file1, opt.strict_pairs, err);
            auto r2 = load_structure(opt.file2, opt.strict_pairs, err);
            if (r1.empty())
                throw InputError{opt.file1 + ": pattern must be non-empty"};
            auto hits = exact_occurrences(r1, r2);
            for (int pos : hits)
                out << pos << '\n';
            return hits.empty() ? kNoOccurrence : kOk;
        }

        int
        run_align(AlignMode mode, const Options &opt, std::ostream &out, std::ostream &err) {
            auto r1 = load_structure(opt.file1, opt.strict_pairs, err);
            auto r2 = load_structure(opt.file2, opt.strict_pairs, err);
            auto scheme = load_scheme_option(opt.scheme_file);
            if (mode == AlignMode::Fit && r1.empty())
                throw InputError{opt.file1 + ": fit needs a non-empty pattern"};

            StructuralAligner aligner(r1, r2, scheme);
            DpTables tables = aligner.phase2(mode);
            auto result = aligner.traceback(tables, mode, best_end(tables, mode));
            auto rec = make_record(result, r1, r2);
            if (mode == AlignMode::Fit && opt.all_ends)
                rec.ends = optimal_fit_ends(tables);
            out << (opt.format == "tsv" ? format_tsv(rec) : format_text(rec));
            return kOk;
        }

        int
        run_oracle(const Options &opt, std::ostream &out, std::ostream &err) {
            auto r1 = load_structure(opt.file1, opt.strict_pairs, err);
            auto r2 = load_structure(opt.file2, opt.strict_pairs, err);
            auto scheme = load_scheme_option(opt.scheme_file);
            AlignMode mode = parse_mode(opt.mode);
            if (mode == AlignMode::Fit && r1.empty())
                throw InputError{opt.file1 + ": fit needs a non-empty pattern"};
            Score best;
            try {
                best = oracle_best(r1, r2, mode, scheme);
            } catch (const OracleSizeError &e) {
                throw InputError{e.what()};
            }
            if (opt.format == "tsv")
                out << "mode\t" << to_string(mode) << "\nscore\t" << best << '\n';
            else
                out << "oracle " << to_string(mode) << " score " << best << '\n';
            return kOk;
        }

    } // namespace

    int
    run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
        CLI::App app{"Exact structural matching and structural alignment of RNA structures"};
        app.name(args.empty() ? "rnastruct" : args.front());
        app.require_subcommand(1);

        Options opt;
        auto *exact = app.add_subcommand("exact", "positions where -1 occurs exactly in -2");
        add_inputs(exact, opt);

        auto *global = app.add_subcommand("global", "global structural alignment");
        auto *fit = app.add_subcommand("fit", "best fit of pattern -1 inside text -2");
        auto *local = app.add_subcommand("local", "best local structural alignment");
        for (auto *sub : {global, fit, local}) {
            add_inputs(sub, opt);
            add_scoring(sub, opt);
        }
        fit->add_flag("--all-ends", opt.all_ends, "list every optimal end column");

        // test/dev only: empty group keeps it out of --help
        auto *oracle = app.add_subcommand("oracle", "brute-force optimum for small inputs");
        oracle->group("");
        add_inputs(oracle, opt);
        add_scoring(oracle, opt);
        oracle->add_option("--mode", opt.mode, "alignment mode")
            ->check(CLI::IsMember({"global", "fit", "local"}));

        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp &) {
            for (const auto *sub : app.get_subcommands()) {
                out << sub->help();
                return kOk;
            }
            out << app.help();
            return kOk;
        } catch (const CLI::ParseError &e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }

        try {
            if (exact->parsed())
                return run_exact(opt, out, err);
            if (global->parsed())
                return run_align(AlignMode::Global, opt, out, err);
            if (fit->parsed())
                return run_align(AlignMode::Fit, opt, out, err);
            if (local->parsed())
                return run_align(AlignMode::Local, opt, out, err);
            return run_oracle(opt, out, err);
        } catch (const InputError &e) {
            err << "error: " << e.message << '\n';
            return kInputError;
        }
    }

} // namespace rnastruct::cli
