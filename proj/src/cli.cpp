#include "qpr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpr/attainability.hpp"
#include "qpr/linalg.hpp"
#include "qpr/matrix_io.hpp"
#include "qpr/search.hpp"
#include "qpr/selftest.hpp"
#include "qpr/sequences.hpp"
#include "qpr/synthesis.hpp"

namespace qpr {

namespace {

using nlohmann::json;

IndexSet parse_gamma(const std::string& text) {
    std::vector<int> idx;
    std::size_t pos = 0;
    try {
        while (pos <= text.size()) {
            std::size_t comma = std::min(text.find(',', pos), text.size());
            std::string_view tok(text.data() + pos, comma - pos);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError("bad index '" + std::string(tok) + "' in --gamma");
            idx.push_back(v);
            pos = comma + 1;
        }
        return IndexSet(std::move(idx));
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad --gamma list: ") + e.what());
    }
}

json witness_json(const SymMat<Fp>& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j)
            row.push_back(m.at(i, j).residue());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string witness_inline(const SymMat<Fp>& m) {
    std::string s = "[";
    for (int i = 0; i < m.order(); ++i) {
        if (i)
            s += ",";
        s += "[";
        for (int j = 0; j < m.order(); ++j) {
            if (j)
                s += ",";
            s += m.at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

int cmd_compute(const std::string& in_path, bool as_json, bool verbose, std::ostream& out,
                std::ostream& err) {
    AnySymMatrix m = read_matrix_file(in_path);
    MatrixReport rep = std::visit([](const auto& v) { return validate_matrix_report(v); }, m);
    if (as_json) {
        json j{{"n", matrix_order(m)},  {"field", matrix_field(m).str()},
               {"pr", rep.pr.str()},    {"epr", rep.epr},
               {"qpr", rep.qpr},        {"rank", rep.rank}};
        out << j.dump() << "\n";
    } else {
        out << "field: " << matrix_field(m).str() << "\n";
        out << "n: " << matrix_order(m) << "\n";
        out << "pr: " << rep.pr.str() << "\n";
        out << "epr: " << rep.epr << "\n";
        out << "qpr: " << rep.qpr << "\n";
        out << "rank: " << rep.rank << "\n";
        if (verbose)
            for (const auto& c : rep.checks)
                out << (c.pass ? "check ok: " : "check FAIL: ") << c.name
                    << (c.pass || c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
    for (const auto& c : rep.checks)
        if (!c.pass)
            err << "warning: structural check failed (this indicates a bug): " << c.name << " ("
                << c.detail << ")\n";
    return 0;
}

int cmd_check(const std::string& seq, bool as_json, std::ostream& out) {
    std::string canon = parse_sequence(seq);
    AttainabilityVerdict v = check_attainable(canon);
    if (as_json) {
        json viol = json::array();
        for (Violation x : v.violations)
            viol.push_back(violation_str(x));
        out << json{{"seq", canon}, {"attainable", v.attainable}, {"violations", viol}}.dump()
            << "\n";
    } else {
        out << v.str() << "\n";
        if (v.attainable)
            out << "note: guaranteed realizable over characteristic 0; over finite fields "
                   "passing these checks is necessary but may not suffice\n";
    }
    return v.attainable ? 0 : 1;
}

int cmd_enumerate(int n, bool as_json, std::ostream& out) {
    std::vector<std::string> seqs = enumerate_attainable(n);
    if (as_json) {
        out << json(seqs).dump() << "\n";
    } else {
        for (const auto& s : seqs)
            out << s << "\n";
    }
    return 0;
}

int cmd_synthesize(const std::string& seq, std::uint64_t seed, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
    SynthesisResult r = synthesize(seq, seed);
    err << r.trace.str();
    AnySymMatrix m(std::move(r.matrix));
    if (out_path == "-")
        write_matrix(out, m);
    else
        write_matrix_file(out_path, m);
    return 0;
}

int cmd_survey(std::uint32_t p, int n, bool as_json, bool with_witness, std::ostream& out) {
    SurveyResult r = exhaustive_survey_parallel(p, n);
    if (as_json) {
        json realized = json::object();
        for (const auto& [seq, e] : r.realized) {
            json entry{{"count", e.count}};
            if (with_witness)
                entry["witness"] = witness_json(e.witness);
            realized[seq] = std::move(entry);
        }
        out << json{{"field", r.field.str()},
                    {"n", r.n},
                    {"total", r.total},
                    {"realized", realized}}
                   .dump()
            << "\n";
    } else {
        out << "survey " << r.field.str() << " n=" << r.n << ": " << r.total << " matrices, "
            << r.realized.size() << " sequences\n";
        for (const auto& [seq, e] : r.realized) {
            out << seq << " " << e.count;
            if (with_witness)
                out << " witness=" << witness_inline(e.witness);
            out << "\n";
        }
    }
    return 0;
}

int cmd_schur(const std::string& in_path, const std::string& gamma_text,
              const std::string& out_path, std::ostream& out) {
    IndexSet gamma = parse_gamma(gamma_text);
    AnySymMatrix m = read_matrix_file(in_path);
    AnySymMatrix c = std::visit(
        [&](const auto& v) -> AnySymMatrix { return schur_complement(v, gamma); }, m);
    if (out_path == "-")
        write_matrix(out, c);
    else
        write_matrix_file(out_path, c);
    return 0;
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pr-, epr-, and qpr-sequences of symmetric matrices over exact fields"};
    app.require_subcommand(1);
    int rc = 0;

    std::string in_path, seq, gamma_text, out_path = "-";
    bool as_json = false, verbose = false, with_witness = false;
    int n = 0;
    std::uint32_t p = 0;
    std::uint64_t seed = 0;

    auto* compute =
        app.add_subcommand("compute", "print pr/epr/qpr and rank of a matrix file");
    compute->add_option("--in", in_path, "matrix file, - for stdin")->required();
    compute->add_flag("--json", as_json, "machine-readable output");
    compute->add_flag("--verbose", verbose, "also print the structural check report");
    compute->callback([&] { rc = cmd_compute(in_path, as_json, verbose, out, err); });

    auto* check = app.add_subcommand("check", "decide whether a qpr-sequence is attainable");
    check->add_option("--seq", seq, "sequence over A/S/N (case-insensitive)")->required();
    check->add_flag("--json", as_json, "machine-readable output");
    check->callback([&] { rc = cmd_check(seq, as_json, out); });

    auto* enumerate =
        app.add_subcommand("enumerate", "list all attainable qpr-sequences of length n");
    enumerate->add_option("--n", n, "sequence length (1..20)")->required();
    enumerate->add_flag("--json", as_json, "machine-readable output");
    enumerate->callback([&] { rc = cmd_enumerate(n, as_json, out); });

    auto* synthesize = app.add_subcommand(
        "synthesize", "construct a rational matrix with the given qpr-sequence");
    synthesize->add_option("--seq", seq, "target sequence over A/S/N")->required();
    synthesize->add_option("--seed", seed, "randomness seed")->envname("QPR_SEED");
    synthesize->add_option("--out", out_path, "output matrix file, - for stdout");
    synthesize->callback([&] { rc = cmd_synthesize(seq, seed, out_path, out, err); });

    auto* survey = app.add_subcommand(
        "survey", "classify every symmetric matrix of order n over GF(p)");
    survey->add_option("--p", p, "prime modulus")->required();
    survey->add_option("--n", n, "matrix order")->required();
    survey->add_flag("--json", as_json, "machine-readable output");
    survey->add_flag("--witness", with_witness, "include one witness per sequence");
    survey->callback([&] { rc = cmd_survey(p, n, as_json, with_witness, out); });

    auto* schur = app.add_subcommand(
        "schur", "eliminate the rows/columns in --gamma via a Schur complement");
    schur->add_option("--in", in_path, "matrix file, - for stdin")->required();
    schur->add_option("--gamma", gamma_text, "comma-separated 1-based indices, e.g. 1,3")
        ->required();
    schur->add_option("--out", out_path, "output matrix file, - for stdout");
    schur->callback([&] { rc = cmd_schur(in_path, gamma_text, out_path, out); });

    auto* selftest = app.add_subcommand("selftest", "run the cross-module invariant suite");
    selftest->callback([&] { rc = run_selftest(out) ? 0 : 1; });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        return rc;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qpr
