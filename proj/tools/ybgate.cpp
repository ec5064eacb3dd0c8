// ybgate: construct, compose, verify and classify Yang-Baxter R-matrices.
//
// Exit codes: 0 success, 1 validation failure (e.g. verify fails), 2 usage/IO error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ybg/factory.hpp"
#include "ybg/gates.hpp"
#include "ybg/io.hpp"
#include "ybg/set_theoretic.hpp"
#include "ybg/ybe.hpp"

namespace {

using ybg::Json;

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream os(path);
    if (!os) throw ybg::IoError("cannot open for writing: " + path);
    os << text << '\n';
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream is(path);
        if (!is) throw ybg::IoError("cannot open for reading: " + path);
        buf << is.rdbuf();
    }
    return buf.str();
}

ybg::MatrixFile load_matrix_json(const std::string& path) {
    const std::string text = read_input(path);
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ybg::IoError("malformed JSON in " + path);
    return ybg::matrix_from_json(j);
}

std::vector<std::size_t> parse_size_list(const std::string& csv, const char* what) {
    std::vector<std::size_t> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            const long v = std::stol(tok);
            if (v <= 0) throw std::invalid_argument("nonpositive");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ybg::IoError(std::string("malformed ") + what + " list: " + csv);
        }
    }
    if (out.empty()) throw ybg::IoError(std::string("empty ") + what + " list");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Yang-Baxter R-matrix construction, composition and gate classification"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for any randomized step (default 0)");

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a named family member as matrix JSON")->fallthrough();
    std::string family, sigma_csv, gen_out = "-";
    std::size_t gen_n = 2, gen_p = 3, gen_d = 2;
    gen->add_option("--family", family,
                    "trivial|perm|cyclic|squarefree|example-c|example-d|cnot|swap")
        ->required();
    gen->add_option("--n", gen_n, "Set size for trivial (default 2)");
    gen->add_option("--sigma", sigma_csv, "1-based permutation table for perm, e.g. 2,1");
    gen->add_option("--p", gen_p, "Prime for cyclic/squarefree (default 3)");
    gen->add_option("--d", gen_d, "Local dimension for swap (default 2)");
    gen->add_option("--output", gen_out, "Output file, or - for stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Census of involutive solutions")->fallthrough();
    std::size_t enum_n = 2;
    std::string enum_out = "-";
    enumerate->add_option("--n", enum_n, "Set size (2 or 3)")->required();
    enumerate->add_option("--output", enum_out, "Output file, or - for stdout");

    // product
    auto* product = app.add_subcommand("product", "Tracy-Singh product of two matrices")->fallthrough();
    std::string prod_a, prod_b, prod_out = "-";
    std::string part_a_rows, part_a_cols, part_b_rows, part_b_cols;
    bool canonical = false;
    product->add_option("--a", prod_a, "Left matrix JSON file")->required();
    product->add_option("--b", prod_b, "Right matrix JSON file")->required();
    product->add_option("--partition-a-rows", part_a_rows, "Comma-separated block heights for a");
    product->add_option("--partition-a-cols", part_a_cols, "Comma-separated block widths for a");
    product->add_option("--partition-b-rows", part_b_rows, "Comma-separated block heights for b");
    product->add_option("--partition-b-cols", part_b_cols, "Comma-separated block widths for b");
    product->add_flag("--canonical", canonical, "Use canonical n^2 partitions for both inputs");
    product->add_option("--output", prod_out, "Output file, or - for stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "YBE + unitarity certificate")->fallthrough();
    std::string ver_matrix = "-", ver_out = "-";
    std::size_t ver_n = 0;
    double ver_tol = ybg::kDefaultTol;
    verify->add_option("--matrix", ver_matrix, "Matrix JSON file, or - for stdin");
    verify->add_option("--local-dim", ver_n, "Local dimension n (matrix is n^2 x n^2)")
        ->required();
    verify->add_option("--tol", ver_tol, "Residual tolerance (default 1e-10)");
    verify->add_option("--output", ver_out, "Output file, or - for stdout");

    // classify
    auto* classify = app.add_subcommand("classify", "Primitive/entangling verdict with witness")->fallthrough();
    std::string cls_matrix = "-", cls_out = "-";
    classify->add_option("--matrix", cls_matrix, "Matrix JSON file, or - for stdin");
    classify->add_option("--output", cls_out, "Output file, or - for stdout");

    // factory
    auto* factory = app.add_subcommand("factory", "Certified gate construction pipeline")->fallthrough();
    std::size_t fac_dim = 2;
    std::string fac_kind, fac_out = "-";
    factory->add_option("--dim", fac_dim, "Composite local dimension")->required();
    factory->add_option("--kind", fac_kind, "entangling|primitive")->required();
    factory->add_option("--output", fac_out, "Output file, or - for stdout");

    // export / import
    auto* exp = app.add_subcommand("export", "Convert matrix JSON to the requested format")->fallthrough();
    auto* imp = app.add_subcommand("import", "Convert the requested format to matrix JSON")->fallthrough();
    std::string exp_fmt, exp_in = "-", exp_out = "-";
    std::string imp_fmt, imp_in = "-", imp_out = "-";
    exp->add_option("--format", exp_fmt, "json|matrixmarket")->required();
    exp->add_option("--input", exp_in, "Matrix JSON file, or - for stdin");
    exp->add_option("--output", exp_out, "Output file, or - for stdout");
    imp->add_option("--format", imp_fmt, "json|matrixmarket")->required();
    imp->add_option("--input", imp_in, "Input file, or - for stdin");
    imp->add_option("--output", imp_out, "Output file, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic to the error stream
        return 2;
    }

    if (gen->parsed()) {
        ybg::DenseMatrix m = [&] {
            if (family == "trivial") return ybg::to_matrix(ybg::trivial_solution(gen_n));
            if (family == "perm") {
                if (sigma_csv.empty()) throw ybg::IoError("perm family requires --sigma");
                std::vector<std::size_t> sigma = parse_size_list(sigma_csv, "--sigma");
                for (std::size_t& v : sigma) {
                    if (v < 1) throw ybg::IoError("--sigma entries are 1-based");
                    v -= 1;
                }
                return ybg::to_matrix(ybg::permutation_solution(sigma));
            }
            if (family == "cyclic") return ybg::to_matrix(ybg::cyclic_prime(gen_p));
            if (family == "squarefree") return ybg::to_matrix(ybg::square_free_prime(gen_p));
            if (family == "example-c") return ybg::example_c();
            if (family == "example-d") return ybg::example_d();
            if (family == "cnot") return ybg::cnot();
            if (family == "swap") return ybg::swap_gate(gen_d);
            throw ybg::IoError("unknown family: " + family);
        }();
        write_output(gen_out, ybg::matrix_to_json(m).dump(2));
        return 0;
    }

    if (enumerate->parsed()) {
        if (enum_n != 2 && enum_n != 3) throw ybg::IoError("enumerate: --n must be 2 or 3");
        Json out = Json::array();
        for (const ybg::StSolution& s : ybg::enumerate_involutive(enum_n))
            out.push_back(ybg::solution_to_json(s));
        write_output(enum_out, out.dump(2));
        return 0;
    }

    if (product->parsed()) {
        ybg::MatrixFile a = load_matrix_json(prod_a);
        ybg::MatrixFile b = load_matrix_json(prod_b);
        auto pick = [&](const ybg::MatrixFile& f, const std::string& rows_csv,
                        const std::string& cols_csv, const char* who) {
            if (canonical) return ybg::canonical_partition(f.matrix.rows());
            if (!rows_csv.empty() || !cols_csv.empty()) {
                if (rows_csv.empty() || cols_csv.empty())
                    throw ybg::IoError(std::string(who) + ": need both row and column blocks");
                return ybg::BlockPartition{parse_size_list(rows_csv, "partition rows"),
                                           parse_size_list(cols_csv, "partition cols")};
            }
            return f.partition ? *f.partition : ybg::single_block(f.matrix);
        };
        ybg::PartitionedMatrix pa(a.matrix, pick(a, part_a_rows, part_a_cols, "a"));
        ybg::PartitionedMatrix pb(b.matrix, pick(b, part_b_rows, part_b_cols, "b"));
        ybg::PartitionedMatrix prod = ybg::tracy_singh(pa, pb);
        write_output(prod_out, ybg::matrix_to_json(prod.matrix, prod.partition).dump(2));
        return 0;
    }

    if (verify->parsed()) {
        ybg::MatrixFile f = load_matrix_json(ver_matrix);
        ybg::RMatrixCertificate cert =
            ybg::certify(f.matrix, ver_n, ver_tol, ybg::kDefaultVerifyCap, seed);
        write_output(ver_out, ybg::verify_report("matrix:" + ver_matrix, cert, seed).dump(2));
        return cert.valid ? 0 : 1;
    }

    if (classify->parsed()) {
        ybg::MatrixFile f = load_matrix_json(cls_matrix);
        ybg::GateClassification cls =
            ybg::classify_gate(f.matrix, false, ybg::kDefaultTol, ybg::kRankRelTol, seed);
        write_output(cls_out,
                     ybg::classify_report("matrix:" + cls_matrix, cls, seed).dump(2));
        return 0;
    }

    if (factory->parsed()) {
        ybg::GateKind kind;
        if (fac_kind == "entangling") {
            kind = ybg::GateKind::Entangling;
        } else if (fac_kind == "primitive") {
            kind = ybg::GateKind::Primitive;
        } else {
            throw ybg::IoError("factory: --kind must be entangling or primitive");
        }
        ybg::GateCertificate g =
            ybg::make_gate(fac_dim, kind, ybg::kDefaultTol, ybg::kDefaultVerifyCap,
                           ybg::kDefaultConstructCap, seed);
        write_output(fac_out, ybg::certify_report(g, seed).dump(2));
        return 0;
    }

    if (exp->parsed()) {
        ybg::MatrixFile f = load_matrix_json(exp_in);
        if (exp_fmt == "json") {
            write_output(exp_out, ybg::matrix_to_json(f.matrix, f.partition).dump(2));
        } else if (exp_fmt == "matrixmarket") {
            std::ostringstream os;
            ybg::write_matrix_market(f.matrix, os);
            std::string text = os.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            write_output(exp_out, text);
        } else {
            throw ybg::IoError("export: unknown format " + exp_fmt);
        }
        return 0;
    }

    if (imp->parsed()) {
        ybg::DenseMatrix m = [&] {
            if (imp_fmt == "json") return load_matrix_json(imp_in).matrix;
            if (imp_fmt == "matrixmarket") {
                std::istringstream is(read_input(imp_in));
                return ybg::read_matrix_market(is);
            }
            throw ybg::IoError("import: unknown format " + imp_fmt);
        }();
        write_output(imp_out, ybg::matrix_to_json(m).dump(2));
        return 0;
    }

    return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
