#include "subbergman/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>


namespace subbergman {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("'" + path + "' is empty");
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("non-numeric cell '" + cell + "' in '" + path + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_matrix_rows(std::ostream& out, const Eigen::MatrixXcd& m, Eigen::Index r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << ',' << fmt(m(r, c).real()) << ',' << fmt(m(r, c).imag());
}

}  // namespace

void write_matrix_csv(const Eigen::MatrixXcd& m, const std::string& path) {
    auto out = open_out(path);
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? "," : "") << 'c' << c << "_re,c" << c << "_im";
    out << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        std::ostringstream row;
        write_matrix_rows(row, m, r);
        out << row.str().substr(1) << '\n';
    }
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

Eigen::MatrixXcd read_matrix_csv(const std::string& path) {
    const auto rows = read_numeric_csv(path);
    if (rows.empty()) return {};
    const auto cols = rows.front().size() / 2;
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != 2 * cols) throw std::runtime_error("ragged matrix row in '" + path + "'");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {rows[r][2 * c], rows[r][2 * c + 1]};
    }
    return m;
}

void write_witness_csv(const PickWitness& witness, const std::string& path) {
    if (witness.points.size() != static_cast<std::size_t>(witness.matrix.rows())) {
        throw std::invalid_argument("witness points and matrix disagree in size");
    }
    auto out = open_out(path);
    out << "z_re,z_im";
    for (Eigen::Index c = 0; c < witness.matrix.cols(); ++c) out << ",m" << c << "_re,m" << c << "_im";
    out << '\n';
    for (Eigen::Index r = 0; r < witness.matrix.rows(); ++r) {
        const cplx z = witness.points[static_cast<std::size_t>(r)].value();
        out << fmt(z.real()) << ',' << fmt(z.imag());
        write_matrix_rows(out, witness.matrix, r);
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

WitnessData read_witness_csv(const std::string& path) {
    const auto rows = read_numeric_csv(path);
    WitnessData data;
    const auto n = static_cast<Eigen::Index>(rows.size());
    data.matrix.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (row.size() != static_cast<std::size_t>(2 + 2 * n)) throw std::runtime_error("malformed witness row in '" + path + "'");
        data.points.emplace_back(cplx{row[0], row[1]});
        for (Eigen::Index c = 0; c < n; ++c)
            data.matrix(r, c) = {row[static_cast<std::size_t>(2 + 2 * c)], row[static_cast<std::size_t>(3 + 2 * c)]};
    }
    return data;
}

nlohmann::json spectrum_to_json(const SpectrumReport& report, double alpha, const std::string& symbol, std::size_t size) {
    nlohmann::json schatten = nlohmann::json::array();
    for (const auto& s : report.schatten) {
        schatten.push_back({{"p", s.p}, {"value", s.value}, {"tail_converged", s.tail_converged}});
    }
    nlohmann::json decay = std::isfinite(report.decay_exponent) ? nlohmann::json(report.decay_exponent) : nlohmann::json(nullptr);
    return {{"alpha", alpha},
            {"symbol", symbol},
            {"size", size},
            {"eigenvalues", report.eigenvalues},
            {"decay_exponent", decay},
            {"window", {report.window.first, report.window.last}},
            {"schatten", schatten}};
}

nlohmann::json pick_report_to_json(const PickReport& report, double alpha, const std::string& symbol,
                                   std::size_t points) {
    nlohmann::json j{{"alpha", alpha},
                     {"symbol", symbol},
                     {"points", points},
                     {"verdict", report.verdict == PickVerdict::psd_pass ? "psd_pass" : "fail"},
                     {"certificate", report.certificate()},
                     {"min_eigenvalue", report.min_eigenvalue},
                     {"trace", report.trace},
                     {"tolerance", report.tolerance},
                     {"trials", report.trials},
                     {"failing_trials", report.failing_trials},
                     {"worst_trial", report.worst_trial},
                     {"sampler_seed", report.sampler_seed},
                     {"hazards", report.hazards}};
    if (report.witness) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : report.witness->points) pts.push_back({p.value().real(), p.value().imag()});
        j["witness"] = {{"points", pts},
                        {"indices", report.witness->indices},
                        {"min_eigenvalue", report.witness->min_eigenvalue}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace subbergman
