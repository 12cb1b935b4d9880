#ifndef SUBBERGMAN_IO_HPP
#define SUBBERGMAN_IO_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include <json.hpp>

#include "subbergman/cnp.hpp"
#include "subbergman/operators.hpp"

namespace subbergman {

/// Header row c0_re,c0_im,c1_re,...; one row per matrix row, complex entries
/// as re,im column pairs.
void write_matrix_csv(const Eigen::MatrixXcd& m, const std::string& path);
Eigen::MatrixXcd read_matrix_csv(const std::string& path);

/// Witness export: header z_re,z_im,m0_re,m0_im,...; row i holds point i and
/// row i of the Pick matrix.
struct WitnessData {
    std::vector<DiskPoint> points;
    Eigen::MatrixXcd matrix;
};
void write_witness_csv(const PickWitness& witness, const std::string& path);
WitnessData read_witness_csv(const std::string& path);

/// {alpha, symbol, size, eigenvalues, decay_exponent, window, schatten}
nlohmann::json spectrum_to_json(const SpectrumReport& report, double alpha, const std::string& symbol, std::size_t size);

nlohmann::json pick_report_to_json(const PickReport& report, double alpha, const std::string& symbol,
                                   std::size_t points);

}  // namespace subbergman

#endif
