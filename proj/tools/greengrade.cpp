#include "greengrade/a0.hpp"
#include "greengrade/cartan.hpp"
#include "greengrade/green_walk.hpp"
#include "greengrade/hm.hpp"
#include "greengrade/quiver.hpp"
#include "greengrade/regrading.hpp"
#include "greengrade/star_homotopy.hpp"
#include "greengrade/tree.hpp"
#include "greengrade/trivext.hpp"
#include "greengrade/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

greengrade::BrauerTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open tree file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return greengrade::parse_tree(buf.str());
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stol(item));
    return out;
}

greengrade::HmElement parse_hm(const std::string& text, int m, greengrade::Field f) {
    std::vector<greengrade::Scalar> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        coords.push_back(greengrade::Scalar::parse(item, f));
    if (static_cast<int>(coords.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " coordinates");
    return greengrade::hm_element(std::move(coords));
}

} // namespace

int main(int argc, char** argv) {
    using namespace greengrade;

    CLI::App app{"graded Brauer tree algebra toolkit"};
    app.require_subcommand(1);

    std::string tree_path, start_edge, other_path, vector_arg;
    bool opt_dot = false, opt_json = false, opt_latex = false;
    bool opt_paths = false, opt_closed = false, opt_det = false;
    bool opt_recover = false, opt_cartan = false, opt_gldim = false, opt_rescale = false;

    auto* walk = app.add_subcommand("walk", "Green walk numbering of the edges");
    walk->add_option("tree", tree_path)->required();
    walk->add_option("--start", start_edge);

    auto* grade = app.add_subcommand("grade", "graded quiver of the tree algebra");
    grade->add_option("tree", tree_path)->required();
    grade->add_option("--start", start_edge);
    grade->add_flag("--dot", opt_dot);
    grade->add_flag("--json", opt_json);
    grade->add_flag("--latex", opt_latex);

    auto* cartan = app.add_subcommand("cartan", "graded Cartan matrix");
    cartan->add_option("tree", tree_path)->required();
    cartan->add_flag("--paths", opt_paths);
    cartan->add_flag("--closed", opt_closed);
    cartan->add_flag("--det", opt_det);
    cartan->add_flag("--latex", opt_latex);

    auto* a0cmd = app.add_subcommand("a0", "degree-zero subalgebra");
    a0cmd->add_option("tree", tree_path)->required();
    a0cmd->add_flag("--recover", opt_recover);
    a0cmd->add_flag("--cartan", opt_cartan);
    a0cmd->add_flag("--gldim", opt_gldim);

    auto* trivext = app.add_subcommand("trivext", "trivial extension check for Brauer lines");
    trivext->add_option("tree", tree_path)->required();

    auto* shifts = app.add_subcommand("shifts", "apply a shift vector to the grading");
    shifts->add_option("tree", tree_path)->required();
    shifts->add_option("--vector", vector_arg)->required();

    auto* morita = app.add_subcommand("morita", "solve the graded Morita equation");
    morita->add_option("tree", tree_path)->required();
    morita->add_option("--other", other_path)->required();
    morita->add_flag("--rescale", opt_rescale);

    auto* hm = app.add_subcommand("hm", "arithmetic in the group H_m");
    int hm_m = 1;
    long hm_prime = 0;
    std::string hm_op;
    std::vector<std::string> hm_args;
    hm->add_option("--m", hm_m)->required();
    hm->add_option("--prime", hm_prime, "prime field order (0 = rationals, e.g. 32003)");
    hm->add_option("op", hm_op)->required();
    hm->add_option("args", hm_args);

    auto* verify = app.add_subcommand("verify", "run every cross-module consistency check");
    verify->add_option("tree", tree_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::optional<std::string> start =
            start_edge.empty() ? std::nullopt : std::optional<std::string>(start_edge);

        if (walk->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const GreenNumbering n = green_number(t, start);
            for (int i = 1; i <= n.e(); ++i)
                std::cout << i << "\t" << n.id_of[i] << "\t" << n.delta[i] << "\t"
                          << (n.predecessor[i] ? n.id_of[n.predecessor[i]] : "-") << "\n";
            return kExitOk;
        }

        if (grade->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const GreenNumbering n = green_number(t, start);
            auto [q, rel] = build_quiver(t, n);
            const GradedQuiver graded = assign_degrees(q, n, t.multiplicity);
            if (opt_dot)
                std::cout << render_dot(graded, n);
            else if (opt_json)
                std::cout << render_json(graded, n);
            else if (opt_latex)
                std::cout << render_latex(graded, n);
            else
                std::cout << render_text(graded, n);
            return kExitOk;
        }

        if (cartan->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const GreenNumbering n = green_number(t);
            auto [q, rel] = build_quiver(t, n);
            const GradedQuiver graded = assign_degrees(q, n, t.multiplicity);
            const GradedCartanMatrix C =
                opt_paths ? cartan_from_paths(graded, rel) : cartan_closed_form(graded);
            if (opt_latex)
                std::cout << render_matrix_latex(C);
            else
                std::cout << render_matrix_text(C);
            if (opt_det) {
                const LaurentPoly det = cartan_determinant(C);
                std::cout << "det = " << det.str() << "\n";
                const LaurentPoly expect = cartan_determinant_closed_form(t.multiplicity, n.e());
                if (det != expect) {
                    std::cout << "determinant identity VIOLATED, residual = "
                              << (det - expect).str() << "\n";
                    return kExitCheckFailure;
                }
            }
            return kExitOk;
        }

        if (a0cmd->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const GreenNumbering n = green_number(t);
            auto [q, rel] = build_quiver(t, n);
            const GradedQuiver graded = assign_degrees(q, n, t.multiplicity);
            const A0Algebra a0 = extract_a0(graded, rel);
            for (size_t c = 0; c < a0.components.size(); ++c) {
                const auto& comp = a0.components[c];
                std::cout << "component " << c + 1 << ": root " << comp.root << " ("
                          << n.id_of[comp.root] << "), " << comp.vertices.size() << " vertices\n";
                for (const auto& ar : comp.arrows)
                    std::cout << "  arrow " << ar.source << "->" << ar.target << " (level "
                              << comp.level.at(ar.source) << "->" << comp.level.at(ar.target)
                              << ")\n";
                for (const auto& [x, y] : comp.relations)
                    std::cout << "  relation (" << x.source << "->" << x.target << ")("
                              << y.source << "->" << y.target << ") = 0\n";
            }
            if (opt_cartan) {
                const auto C = a0_cartan(a0);
                std::cout << "cartan:\n";
                for (int i = 0; i < C.rows(); ++i) {
                    for (int j = 0; j < C.cols(); ++j)
                        std::cout << (j ? " " : "  ") << C.at(i, j).get_str();
                    std::cout << "\n";
                }
                std::cout << "det = " << int_det(C).get_str() << "\n";
            }
            if (opt_gldim)
                std::cout << "gl.dim = " << a0_global_dimension(a0) << "\n";
            if (opt_recover) {
                auto [rq, rr] = recover_quiver(a0);
                const bool same =
                    quiver_equal(graded, rq) && relations_equal(graded, rel, rq, rr);
                std::cout << "recovered arrows:\n";
                for (const auto& ar : rq.arrows)
                    std::cout << "  " << ar.id() << " degree " << ar.degree << "\n";
                std::cout << (same ? "round-trip ok\n" : "round-trip FAILED\n");
                if (!same)
                    return kExitCheckFailure;
            }
            return kExitOk;
        }

        if (trivext->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const TrivExtReport rep = trivial_extension_check(t);
            if (!rep.applicable) {
                std::cerr << "unsupported input: " << rep.detail << "\n";
                return kExitUsage;
            }
            std::cout << "dim A_Gamma = " << rep.dim_line << ", dim T(A0) = " << rep.dim_trivext
                      << "\n"
                      << (rep.ok() ? "ok   " : "FAIL ")
                      << "T(A0) isomorphic to the rescaled line algebra\n";
            return rep.ok() ? kExitOk : kExitCheckFailure;
        }

        if (shifts->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const GreenNumbering n = green_number(t);
            auto [q, rel] = build_quiver(t, n);
            const GradedQuiver graded = assign_degrees(q, n, t.multiplicity);
            const auto values = parse_long_list(vector_arg);
            if (static_cast<int>(values.size()) != n.e())
                throw std::invalid_argument("shift vector needs exactly e entries");
            ShiftVector s;
            s.n.assign(n.e() + 1, 0);
            for (int i = 1; i <= n.e(); ++i)
                s.n[i] = values[i - 1];
            const DegreeFunction shifted = apply_shifts(graded, degrees_of(graded), s);
            std::cout << serialize_grading_json(shifted) << "\n";
            return kExitOk;
        }

        if (morita->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const GreenNumbering n = green_number(t);
            auto [q, rel] = build_quiver(t, n);
            const GradedQuiver graded = assign_degrees(q, n, t.multiplicity);
            std::ifstream in(other_path);
            if (!in)
                throw std::invalid_argument("cannot open grading file: " + other_path);
            std::ostringstream buf;
            buf << in.rdbuf();
            const DegreeFunction other = parse_grading_json(buf.str());
            const auto sol = morita_solve(graded, degrees_of(graded), other, opt_rescale);
            if (!sol) {
                std::cout << "no solution\n";
                return kExitCheckFailure;
            }
            std::cout << "scale = " << sol->scale.get_str() << "\nshifts =";
            for (int i = 1; i <= n.e(); ++i)
                std::cout << " " << sol->n[i];
            std::cout << "\n";
            return kExitOk;
        }

        if (hm->parsed()) {
            const Field f = hm_prime > 0 ? Field::prime(hm_prime) : Field::rationals();
            if (hm_op == "mul") {
                if (hm_args.size() != 2)
                    throw std::invalid_argument("hm mul needs two tuples");
                const HmElement a = parse_hm(hm_args[0], hm_m, f);
                const HmElement b = parse_hm(hm_args[1], hm_m, f);
                std::cout << hm_mul(a, b).str() << "\n";
            } else if (hm_op == "inv") {
                if (hm_args.size() != 1)
                    throw std::invalid_argument("hm inv needs one tuple");
                std::cout << hm_inv(parse_hm(hm_args[0], hm_m, f)).str() << "\n";
            } else if (hm_op == "decompose") {
                if (hm_args.size() != 1)
                    throw std::invalid_argument("hm decompose needs one tuple");
                const auto dec = hm_decompose(parse_hm(hm_args[0], hm_m, f));
                std::cout << "torus " << dec.torus.str() << "\nunipotent " << dec.unipotent.str()
                          << "\n";
            } else {
                throw std::invalid_argument("unknown hm operation: " + hm_op);
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            const BrauerTree t = load_tree(tree_path);
            const VerifyReport rep = verify_tree(t);
            std::cout << rep.text();
            std::cout << (rep.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n");
            return rep.all_pass() ? kExitOk : kExitCheckFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
