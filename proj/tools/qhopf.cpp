// Command-line workbench: load a datum, run the consistency checker, the
// overlap and Hopf reports, normalize expressions, evaluate the matrix
// functionals, and emit the built-in example data.
//
// Machine-readable JSON goes to stdout; human-readable lines go to stderr.
// Exit status: 0 all requested checks pass, 1 check failure, 2 file/parse
// errors, 3 internal budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <qhopf/algebra.hpp>
#include <qhopf/examples.hpp>
#include <qhopf/expr.hpp>
#include <qhopf/functionals.hpp>
#include <qhopf/qgdata.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace qhopf;

InhomogeneousData load_data_file(const std::string& path) {
    nlohmann::json j;
    if (path == "-") {
        j = nlohmann::json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw data_error("cannot open data file: " + path);
        j = nlohmann::json::parse(in);
    }
    return data_from_json(j);
}

void print_report_human(const Report& rep) {
    for (const auto& e : rep.entries) {
        std::cerr << (e.pass ? "[PASS] " : "[FAIL] ") << e.name << "  (" << e.equation << ")";
        if (e.elapsed_us > 0) std::cerr << "  " << e.elapsed_us << " us";
        if (!e.note.empty()) std::cerr << "\n       " << e.note;
        std::cerr << "\n";
    }
    std::cerr << (rep.all_pass() ? "all conditions pass" : "CHECK FAILED") << "\n";
}

int emit_report(const Report& rep) {
    print_report_human(rep);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"workbench for inhomogeneous quantum group data"};
    app.require_subcommand(1);

    std::string data_path, expr_text, mode = "strict", example_name;
    int degree = 3, example_dim = 2;
    bool implications = false;
    std::string nonzero, lambda_text;

    auto* check = app.add_subcommand("check", "run the full consistency condition set");
    check->add_option("data", data_path, "data file (json), or - for stdin")->required();
    check->add_option("--mode", mode, "strict | lambda-zero")
        ->check(CLI::IsMember({"strict", "lambda-zero"}));
    check->add_flag("--implications", implications, "also run the implication suite");

    auto* norm = app.add_subcommand("normalize", "rewrite an expression to normal form");
    norm->add_option("data", data_path)->required();
    norm->add_option("-e,--expr", expr_text, "expression to normalize")->required();

    auto* evalf = app.add_subcommand("eval-functional",
                                     "evaluate the big matrix representation on an expression");
    evalf->add_option("data", data_path)->required();
    evalf->add_option("-e,--expr", expr_text)->required();

    auto* diamond = app.add_subcommand("diamond", "overlap (confluence) report");
    diamond->add_option("data", data_path)->required();
    diamond->add_option("--degree", degree, "overlap degree bound");

    auto* hopf = app.add_subcommand("hopf", "Hopf compatibility report");
    hopf->add_option("data", data_path)->required();
    hopf->add_option("--degree", degree, "ideal membership degree bound");

    auto* emit = app.add_subcommand("emit-example", "print a built-in example datum");
    emit->add_option("name", example_name, "classical | glq")->required();
    emit->add_option("N", example_dim, "dimension")->required();

    auto* solve = app.add_subcommand("solve-n1", "brute-force the N = 1 condition set");
    solve->add_option("--nonzero", nonzero, "comma list from {Z,T} to require nonzero");
    solve->add_option("--lambda", lambda_text, "fix lambda to this scalar");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        auto d = load_data_file(data_path);
        CheckMode m = (mode == "lambda-zero") ? CheckMode::lambda_zero : CheckMode::strict;
        Report rep = check_axioms(d, m);
        if (m == CheckMode::lambda_zero) rep.append(check_lambda_zero(d));
        if (implications) rep.append(implication_suite(d, m));
        return emit_report(rep);
    }
    if (norm->parsed()) {
        auto d = load_data_file(data_path);
        NcPoly poly = parse_ncpoly(expr_text, d.N);
        bool extended = false;
        for (const auto& [w, c] : poly.terms())
            if (!word_is_core(w)) extended = true;
        Rewriter rw = compile_rewriter(build_relations(d, extended));
        NcPoly nf = rw.normalize(poly);
        std::cout << nf.str() << "\n";
        return 0;
    }
    if (evalf->parsed()) {
        auto d = load_data_file(data_path);
        NcPoly poly = parse_ncpoly(expr_text, d.N);
        BigRep rep = generator_images(d);
        Mat m = evaluate(rep, poly);
        nlohmann::json out;
        out["dimension"] = rep.dim;
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
            rows.push_back(std::move(row));
        }
        out["matrix"] = std::move(rows);
        out["epsilon"] = counit(poly).str();
        for (std::size_t i = 0; i < m.rows; ++i) {
            for (std::size_t j = 0; j < m.cols; ++j)
                std::cerr << m.at(i, j).str() << (j + 1 < m.cols ? "\t" : "");
            std::cerr << "\n";
        }
        std::cerr << "epsilon = " << counit(poly).str() << "\n";
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (diamond->parsed()) {
        auto d = load_data_file(data_path);
        return emit_report(diamond_check(d, degree));
    }
    if (hopf->parsed()) {
        auto d = load_data_file(data_path);
        return emit_report(check_hopf(d, degree));
    }
    if (emit->parsed()) {
        InhomogeneousData d = example_name == "classical" ? classical(example_dim)
                              : example_name == "glq"
                                  ? glq(example_dim)
                                  : throw data_error("unknown example: " + example_name);
        std::cout << data_to_json(d).dump(2) << "\n";
        return 0;
    }
    if (solve->parsed()) {
        SolveConstraints c;
        if (!lambda_text.empty()) c.lambda = parse_scalar(lambda_text);
        std::stringstream ss(nonzero);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "Z") c.want_nonzero_Z = true;
            else if (item == "T") c.want_nonzero_T = true;
            else if (!item.empty()) throw data_error("--nonzero accepts Z and/or T");
        }
        auto sols = solve_n1(c);
        nlohmann::json out = nlohmann::json::array();
        for (const auto& d : sols) out.push_back(data_to_json(d));
        std::cerr << sols.size() << " solution(s)\n";
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qhopf::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const qhopf::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qhopf::data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
