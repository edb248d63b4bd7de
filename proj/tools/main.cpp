#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/serialize.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 success, 1 verification failure, 2 input/usage error
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kBadInput = 2;

json read_json_file(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw hecke::Error(hecke::Errc::BadInput, "cannot open '" + path + "'");
        in = &file;
    }
    try {
        json j;
        *in >> j;
        return j;
    } catch (const json::exception& e) {
        throw hecke::Error(hecke::Errc::BadInput, std::string("invalid JSON: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw hecke::Error(hecke::Errc::BadInput, "cannot write '" + output_path + "'");
    out << text << "\n";
}

struct EvalArgs {
    int rank = 2;
    std::string param = "v";
    std::string expr;
    bool as_json = false;
    std::string output;
};

int run_eval(const EvalArgs& a) {
    hecke::CoeffMode mode = hecke::coeff_mode_parse(a.param);
    hecke::ExprPtr ast = hecke::parse_expr_text(a.expr, a.rank);
    hecke::ElementVar e = hecke::eval_in_mode(ast, a.rank, mode);
    emit(a.as_json ? hecke::element_json(e).dump(2) : hecke::pretty(e), a.output);
    return kOk;
}

struct RelArgs {
    int rank = 2;
    std::string param = "v";
    bool as_json = false;
    std::string output;
};

int run_relcheck(const RelArgs& a) {
    hecke::CoeffMode mode = hecke::coeff_mode_parse(a.param);
    hecke::RelationReport rep =
        mode.is_symbolic()
            ? hecke::relation_check(hecke::symbolic_config(a.rank))
            : hecke::relation_check(hecke::numeric_config(a.rank, mode.numeric_value()));
    if (a.as_json) {
        emit(hecke::report_json(rep).dump(2), a.output);
    } else {
        std::ostringstream out;
        for (const auto& inst : rep.instances) {
            out << inst.relation;
            if (!inst.instance.empty()) out << "[" << inst.instance << "]";
            out << (inst.pass ? " ok" : " FAIL: " + inst.diff) << "\n";
        }
        for (const auto& note : rep.notes) out << "note: " << note << "\n";
        out << (rep.all_pass ? "all relations hold" : "relation check FAILED");
        emit(out.str(), a.output);
    }
    return rep.all_pass ? kOk : kVerifyFail;
}

struct IsoArgs {
    std::string param = "v";
    int max_len = 4;
    bool as_json = false;
    std::string output;
};

int run_iso(const IsoArgs& a) {
    hecke::CoeffMode mode = hecke::coeff_mode_parse(a.param);
    hecke::IsoReport rep = mode.is_symbolic()
                               ? hecke::verify_isomorphism(hecke::RatFunc::variable(), a.max_len)
                               : hecke::verify_isomorphism(mode.numeric_value(), a.max_len);
    if (a.as_json) {
        emit(hecke::report_json(rep).dump(2), a.output);
    } else {
        std::ostringstream out;
        out << rep.header << "\n";
        out << "checked pairs: " << rep.checked_pairs << ", roundtrips: " << rep.roundtrips << "\n";
        for (const auto& f : rep.failures) out << "FAIL " << f.check << " " << f.detail << "\n";
        out << (rep.passed ? "isomorphism verified" : "isomorphism verification FAILED");
        emit(out.str(), a.output);
    }
    return rep.passed ? kOk : kVerifyFail;
}

struct FileArgs {
    std::string file;
    bool allow_nonintegral_f = false;
    std::string output;
};

int run_bernstein_decompose(const FileArgs& a, bool fingerprint_only) {
    auto desc = hecke::bernstein_io::descriptor_from_json(read_json_file(a.file));
    if (fingerprint_only) {
        auto tag = hecke::bernstein::morita_tag(desc, a.allow_nonintegral_f);
        emit(hecke::bernstein_io::fingerprint_json(tag).dump(2), a.output);
    } else {
        auto rep = hecke::bernstein::analyze(desc, a.allow_nonintegral_f);
        emit(hecke::bernstein_io::report_json(rep).dump(2), a.output);
    }
    return kOk;
}

struct CompareArgs {
    long long qa = 2, qb = 3;
    int da = 1, db = 1;
    std::string grid_file;
    bool allow_nonintegral_f = false;
    std::string output;
};

int run_bernstein_compare(const CompareArgs& a) {
    std::vector<hecke::bernstein::CensusShape> shapes =
        a.grid_file.empty() ? hecke::bernstein::gl2_shape_grid()
                            : hecke::bernstein_io::shapes_from_json(read_json_file(a.grid_file));
    hecke::bernstein::DivisionAlgebra alg_a{hecke::Int(a.qa), a.da};
    hecke::bernstein::DivisionAlgebra alg_b{hecke::Int(a.qb), a.db};
    auto rep = hecke::bernstein::census_compare(shapes, alg_a, alg_b, a.allow_nonintegral_f);
    emit(hecke::bernstein_io::census_json(rep).dump(2), a.output);
    return rep.pass ? kOk : kVerifyFail;
}

int run_tadic(const FileArgs& a) {
    auto req = hecke::tadic_io::request_from_json(read_json_file(a.file));
    emit(hecke::tadic_io::classify_json(req).dump(2), a.output);
    return kOk;
}

struct OracleArgs {
    int rank = 2;
    int max_len = 4;
    std::string output;
};

int run_oracle(const OracleArgs& a) {
    auto ball = hecke::bfs_ball(a.rank, a.max_len);
    std::ostringstream out;
    bool all_agree = true;
    out << "window\tbfs\tformula\tagree\n";
    for (const auto& [w, bfs_len] : ball) {
        std::int64_t formula = w.length();
        bool agree = formula == bfs_len;
        all_agree = all_agree && agree;
        out << w.str() << "\t" << bfs_len << "\t" << formula << "\t" << (agree ? "yes" : "NO") << "\n";
    }
    out << (all_agree ? "all lengths agree" : "length DISAGREEMENT");
    emit(out.str(), a.output);
    return all_agree ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for affine Hecke algebras and inertial-class reports"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    RelArgs rel_args;
    IsoArgs iso_args;
    FileArgs decompose_args, fingerprint_args, tadic_args;
    CompareArgs compare_args;
    OracleArgs oracle_args;

    auto* algebra = app.add_subcommand("algebra", "element arithmetic in H(r,z)");
    algebra->require_subcommand(1);
    auto* eval = algebra->add_subcommand("eval", "evaluate an expression to its normal form");
    eval->add_option("-r,--rank", eval_args.rank, "algebra rank")->required();
    eval->add_option("-p,--param", eval_args.param, "parameter: v (symbolic) or a rational")
        ->capture_default_str();
    eval->add_option("-e,--expr", eval_args.expr, "expression")->required();
    eval->add_flag("--json", eval_args.as_json, "emit canonical JSON");
    eval->add_option("-o,--output", eval_args.output, "write to file instead of stdout");

    auto* rel = algebra->add_subcommand("relcheck", "verify the defining relations");
    rel->add_option("-r,--rank", rel_args.rank, "algebra rank")->required();
    rel->add_option("-p,--param", rel_args.param, "parameter")->capture_default_str();
    rel->add_flag("--json", rel_args.as_json, "emit JSON report");
    rel->add_option("-o,--output", rel_args.output, "write to file instead of stdout");

    auto* iso = app.add_subcommand("iso", "certify the rank-2 parameter-erasing isomorphism");
    iso->add_option("-p,--param", iso_args.param, "parameter")->capture_default_str();
    iso->add_option("-L,--max-length", iso_args.max_len, "ball radius")->capture_default_str();
    iso->add_flag("--json", iso_args.as_json, "emit JSON report");
    iso->add_option("-o,--output", iso_args.output, "write to file instead of stdout");

    auto* bern = app.add_subcommand("bernstein", "inertial-class reports");
    bern->require_subcommand(1);
    auto* dec = bern->add_subcommand("decompose", "tensor decomposition and presentation");
    dec->add_option("-f,--file", decompose_args.file, "descriptor JSON ('-' for stdin)")->required();
    dec->add_flag("--allow-nonintegral-f", decompose_args.allow_nonintegral_f,
                  "accept non-integral torsion*reducibility");
    dec->add_option("-o,--output", decompose_args.output, "write to file instead of stdout");
    auto* fp = bern->add_subcommand("fingerprint", "Morita fingerprint only");
    fp->add_option("-f,--file", fingerprint_args.file, "descriptor JSON ('-' for stdin)")->required();
    fp->add_flag("--allow-nonintegral-f", fingerprint_args.allow_nonintegral_f,
                 "accept non-integral torsion*reducibility");
    fp->add_option("-o,--output", fingerprint_args.output, "write to file instead of stdout");
    auto* cmp = bern->add_subcommand("compare", "fingerprint census across two algebras");
    cmp->add_option("--qa", compare_args.qa, "residue cardinality of algebra A")->required();
    cmp->add_option("--da", compare_args.da, "index of algebra A")->capture_default_str();
    cmp->add_option("--qb", compare_args.qb, "residue cardinality of algebra B")->required();
    cmp->add_option("--db", compare_args.db, "index of algebra B")->capture_default_str();
    cmp->add_option("--grid", compare_args.grid_file, "shape grid JSON (default: built-in rank-2 grid)");
    cmp->add_flag("--allow-nonintegral-f", compare_args.allow_nonintegral_f,
                  "accept non-integral torsion*reducibility");
    cmp->add_option("-o,--output", compare_args.output, "write to file instead of stdout");

    auto* tad = app.add_subcommand("tadic", "principal-series classification for rank 2");
    tad->require_subcommand(1);
    auto* cls = tad->add_subcommand("classify", "reducibility, kind, constituents");
    cls->add_option("-f,--file", tadic_args.file, "request JSON ('-' for stdin)")->required();
    cls->add_option("-o,--output", tadic_args.output, "write to file instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "independent combinatorial oracles");
    oracle->require_subcommand(1);
    auto* bfs = oracle->add_subcommand("weyl-bfs", "compare BFS word lengths with the closed formula");
    bfs->add_option("-r,--rank", oracle_args.rank, "rank")->required();
    bfs->add_option("-L,--max-length", oracle_args.max_len, "ball radius")->capture_default_str();
    bfs->add_option("-o,--output", oracle_args.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (eval->parsed()) return run_eval(eval_args);
        if (rel->parsed()) return run_relcheck(rel_args);
        if (iso->parsed()) return run_iso(iso_args);
        if (dec->parsed()) return run_bernstein_decompose(decompose_args, false);
        if (fp->parsed()) return run_bernstein_decompose(fingerprint_args, true);
        if (cmp->parsed()) return run_bernstein_compare(compare_args);
        if (cls->parsed()) return run_tadic(tadic_args);
        if (bfs->parsed()) return run_oracle(oracle_args);
    } catch (const hecke::Error& e) {
        std::cerr << "error [" << hecke::errc_name(e.code()) << "]: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    std::cerr << "no subcommand\n";
    return kBadInput;
}
