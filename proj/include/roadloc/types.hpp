#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <string>
#include <vector>

namespace roadloc {

/// Sensitivity floor: readings below this are treated as "no coverage".
inline constexpr double kFloorDbm = -140.0;

/// RSRP values are capped just below 0 dBm so that every stored sample
/// lies in [kFloorDbm, 0).
inline constexpr double kCeilDbm = -1e-3;

/// Number of aggregate feature kinds per base station (q).
inline constexpr int kFeatureKinds = 5;

/// One position's RSRP readings, one entry per base station in dBm.
/// Index 0 is the macro BS; indices 1..K-1 are small-cell BSs.
using SignalVector = Eigen::VectorXd;

/// 2D coordinate in meters.
using Position2D = Eigen::Vector2d;

/// Per-step signal gradients, (L-1) x K, in dB/m.
using GradientMatrix = Eigen::MatrixXd;

/// Aggregate feature vector of length q*K with fixed layout
/// [grad_1..grad_K, mean_1..mean_K, var_1..var_K, diff_1..diff_K,
///  range_1..range_K].
using FeatureSet = Eigen::VectorXd;

enum class FeatureKind : int {
    Gradient = 0,
    Mean = 1,
    Variance = 2,
    Difference = 3,
    Range = 4,
};

inline int feature_index(FeatureKind kind, int bs, int bs_count) {
    return static_cast<int>(kind) * bs_count + bs;
}

inline FeatureKind feature_kind_of(int index, int bs_count) {
    return static_cast<FeatureKind>(index / bs_count);
}

inline int feature_bs_of(int index, int bs_count) {
    return index % bs_count;
}

/// Ordered RSRP samples collected while traversing one road.
struct SignalSequence {
    std::string road_id;
    Eigen::MatrixX2d positions;  ///< L x 2, meters
    Eigen::MatrixXd rsrp;        ///< L x K, dBm

    int length() const { return static_cast<int>(rsrp.rows()); }
    int bs_count() const { return static_cast<int>(rsrp.cols()); }

    SignalVector signal_at(int j) const { return rsrp.row(j).transpose(); }
    Position2D position_at(int j) const { return positions.row(j).transpose(); }
};

/// A full measurement campaign: every mapped road plus shared metadata.
struct Scenario {
    int bs_count = 0;
    Eigen::MatrixX2d bs_positions;  ///< K x 2; zero rows when unknown
    std::vector<SignalSequence> roads;
    double sampling_interval = 0.0;  ///< meters between consecutive samples
    Eigen::AlignedBox2d bounds;

    int road_count() const { return static_cast<int>(roads.size()); }
};

/// Throws std::runtime_error if the sequence violates its invariants
/// (length >= 2, entries in [kFloorDbm, 0), distinct consecutive positions).
void validate(const SignalSequence& seq);

/// Throws std::runtime_error on duplicate road ids or mismatched BS counts.
void validate(const Scenario& scenario);

/// Copy of the scenario restricted to the first `bs_count` signal columns.
Scenario truncate_scenario(const Scenario& scenario, int bs_count);

}  // namespace roadloc
