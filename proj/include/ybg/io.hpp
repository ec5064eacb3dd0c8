#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ybg/block.hpp"
#include "ybg/entangle.hpp"
#include "ybg/factory.hpp"
#include "ybg/matrix.hpp"
#include "ybg/set_theoretic.hpp"

namespace ybg {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::json;

class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// --- matrix JSON ------------------------------------------------------------

inline Json matrix_to_json(const DenseMatrix& m,
                           const std::optional<BlockPartition>& partition = std::nullopt) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (const Complex& z : m.data()) entries.push_back(Json::array({z.real(), z.imag()}));
    j["entries"] = std::move(entries);
    if (partition) {
        j["partition"] = Json{{"row_blocks", partition->row_blocks},
                              {"col_blocks", partition->col_blocks}};
    }
    return j;
}

struct MatrixFile {
    DenseMatrix matrix;
    std::optional<BlockPartition> partition;
};

inline MatrixFile matrix_from_json(const Json& j) {
    try {
        const std::size_t rows = j.at("rows").get<std::size_t>();
        const std::size_t cols = j.at("cols").get<std::size_t>();
        const Json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows * cols)
            throw IoError("matrix JSON: entries length does not match rows*cols");
        std::vector<Complex> data;
        data.reserve(rows * cols);
        for (const Json& e : entries) {
            if (!e.is_array() || e.size() != 2)
                throw IoError("matrix JSON: each entry must be a [re, im] pair");
            data.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        MatrixFile out{DenseMatrix(rows, cols, std::move(data)), std::nullopt};
        if (j.contains("partition")) {
            BlockPartition p;
            p.row_blocks = j.at("partition").at("row_blocks").get<std::vector<std::size_t>>();
            p.col_blocks = j.at("partition").at("col_blocks").get<std::vector<std::size_t>>();
            validate_partition(p, out.matrix);
            out.partition = std::move(p);
        }
        return out;
    } catch (const Json::exception& e) {
        throw IoError(std::string("matrix JSON: ") + e.what());
    }
}

// --- solution JSON ----------------------------------------------------------

inline Json solution_to_json(const StSolution& s) {
    auto one_based = [](const std::vector<std::vector<std::size_t>>& t) {
        Json out = Json::array();
        for (const auto& row : t) {
            Json r = Json::array();
            for (std::size_t v : row) r.push_back(v + 1);
            out.push_back(std::move(r));
        }
        return out;
    };
    return Json{{"n", s.n}, {"sigma", one_based(s.sigma)}, {"gamma", one_based(s.gamma)}};
}

inline StSolution solution_from_json(const Json& j) {
    try {
        StSolution s;
        s.n = j.at("n").get<std::size_t>();
        auto zero_based = [&](const Json& t) {
            std::vector<std::vector<std::size_t>> out;
            for (const Json& row : t) {
                std::vector<std::size_t> r;
                for (const Json& v : row) {
                    const std::size_t x = v.get<std::size_t>();
                    if (x < 1 || x > s.n) throw IoError("solution JSON: value out of range");
                    r.push_back(x - 1);
                }
                out.push_back(std::move(r));
            }
            return out;
        };
        s.sigma = zero_based(j.at("sigma"));
        s.gamma = zero_based(j.at("gamma"));
        if (!tables_well_formed(s)) throw IoError("solution JSON: malformed tables");
        return s;
    } catch (const Json::exception& e) {
        throw IoError(std::string("solution JSON: ") + e.what());
    }
}

// --- report JSON ------------------------------------------------------------

inline Json state_to_json(const TwoQuditState& s) {
    Json amps = Json::array();
    for (const Complex& z : s.amplitudes) amps.push_back(Json::array({z.real(), z.imag()}));
    return Json{{"d", s.d}, {"amplitudes", std::move(amps)}};
}

inline Json verify_report(const std::string& subject, const RMatrixCertificate& cert,
                          std::uint64_t seed) {
    Json checks{{"ybe_residual", cert.residual},
                {"unitary", cert.unitary},
                {"invertible", cert.invertible},
                {"verdict", "n/a"},
                {"fully_verified", cert.fully_verified},
                {"valid", cert.valid}};
    return Json{{"subject", subject},
                {"checks", std::move(checks)},
                {"tool_version", kToolVersion},
                {"seed", seed}};
}

inline Json classify_report(const std::string& subject, const GateClassification& cls,
                            std::uint64_t seed,
                            std::optional<double> ybe_residual = std::nullopt,
                            std::optional<bool> invertible = std::nullopt) {
    Json checks{{"unitary", cls.unitary},
                {"verdict", cls.verdict == GateVerdict::Primitive ? "primitive" : "entangling"}};
    checks["ybe_residual"] = ybe_residual ? Json(*ybe_residual) : Json(nullptr);
    checks["invertible"] = invertible ? Json(*invertible) : Json(nullptr);
    if (cls.verdict == GateVerdict::Primitive) {
        checks["with_swap"] = cls.with_swap;
        checks["factors"] = Json::array({matrix_to_json(cls.factors.l1),
                                         matrix_to_json(cls.factors.l2)});
    } else if (cls.witness) {
        checks["witness"] = state_to_json(*cls.witness);
        checks["witness_image_rank"] = cls.witness_image_rank;
    }
    if (cls.non_unitary_warning) checks["warning"] = "matrix is not unitary";
    return Json{{"subject", subject},
                {"checks", std::move(checks)},
                {"tool_version", kToolVersion},
                {"seed", seed}};
}

inline Json certify_report(const GateCertificate& g, std::uint64_t seed) {
    std::ostringstream subject;
    subject << (g.kind == GateKind::Entangling ? "entangling" : "primitive") << "-gate d="
            << g.local_dim;
    Json j = classify_report(subject.str(), g.classification, seed, g.r_certificate.residual,
                             g.r_certificate.invertible);
    j["recipe"] = g.prime_recipe;
    j["local_dim"] = g.local_dim;
    j["matrix"] = matrix_to_json(g.r_certificate.matrix);
    j["checks"]["fully_verified"] = g.r_certificate.fully_verified;
    return j;
}

// --- Matrix Market ----------------------------------------------------------

inline void write_matrix_market(const DenseMatrix& m, std::ostream& os) {
    os << "%%MatrixMarket matrix coordinate complex general\n";
    std::size_t nnz = 0;
    for (const Complex& z : m.data())
        if (z != Complex{0.0, 0.0}) ++nnz;
    os << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
    os << std::setprecision(17);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            if (z == Complex{0.0, 0.0}) continue;
            os << (i + 1) << ' ' << (j + 1) << ' ' << z.real() << ' ' << z.imag() << '\n';
        }
}

inline DenseMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("matrix market: empty file");
    {
        std::istringstream hs(line);
        std::string banner, object, format, field, symmetry;
        hs >> banner >> object >> format >> field >> symmetry;
        if (banner != "%%MatrixMarket" || object != "matrix" || format != "coordinate" ||
            (field != "complex" && field != "real") || symmetry != "general")
            throw IoError("matrix market: malformed or unsupported header");
        const bool complex_field = field == "complex";
        while (std::getline(is, line)) {
            if (!line.empty() && line[0] != '%') break;
        }
        std::istringstream ds(line);
        std::size_t rows = 0, cols = 0, nnz = 0;
        if (!(ds >> rows >> cols >> nnz) || rows == 0 || cols == 0)
            throw IoError("matrix market: malformed size line");
        DenseMatrix m(rows, cols);
        for (std::size_t e = 0; e < nnz; ++e) {
            if (!std::getline(is, line)) throw IoError("matrix market: truncated entry list");
            std::istringstream es(line);
            std::size_t i = 0, j = 0;
            double re = 0.0, im = 0.0;
            if (!(es >> i >> j >> re) || (complex_field && !(es >> im)))
                throw IoError("matrix market: malformed entry");
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw IoError("matrix market: index out of bounds");
            m.set(i - 1, j - 1, Complex{re, im});
        }
        return m;
    }
}

inline void write_matrix_market_file(const DenseMatrix& m, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    write_matrix_market(m, os);
}

inline DenseMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open for reading: " + path);
    return read_matrix_market(is);
}

}  // namespace ybg
