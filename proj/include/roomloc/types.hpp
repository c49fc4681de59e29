#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roomloc {

inline constexpr const char* kVersion = "0.1.0";

/// Layout statistics per object: [mu(2), sigma(2), m1(2), m2(2), m3(2), sv(2)].
inline constexpr int kGeomFeatureDim = 12;

/// Caller misuse (bad argument, contract violation). CLI maps this to exit 2.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file. CLI maps this (and the other runtime errors) to exit 1.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a documented invariant.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Valid inputs that cannot be processed (e.g. a room with fewer than K images).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Keypoints of one object in one image. Coordinates are fractions of image
/// width/height in [0,1]; descriptor rows are unit vectors.
struct KeypointSet {
  Eigen::MatrixX2d points;      // N x 2
  Eigen::MatrixXd descriptors;  // N x Dp

  int size() const { return static_cast<int>(points.rows()); }
  int descriptor_dim() const { return static_cast<int>(descriptors.cols()); }

  /// Builds a KeypointSet from raw data, renormalizing each nonzero
  /// descriptor row to unit length. Throws validation_error on empty input,
  /// size mismatch, out-of-range coordinates, or a zero descriptor.
  static KeypointSet from_raw(Eigen::MatrixX2d points,
                              Eigen::MatrixXd descriptors);

  /// Checks all invariants; throws validation_error naming the violation.
  void validate() const;
};

/// One object instance seen in one image.
struct ObjectObservation {
  std::string scene_id;
  std::string room_id;
  std::string image_id;
  std::string object_id;
  KeypointSet keypoints;
};

/// Flattened C x Dp residual-aggregation appearance code; L2 norm is either 0
/// (degenerate all-zero residuals) or 1.
struct ObjectEmbedding {
  Eigen::VectorXd code;

  int dim() const { return static_cast<int>(code.size()); }
};

/// Component-wise arithmetic mean. Not re-normalized: cosine matching is
/// scale-invariant and the magnitude carries merge agreement.
ObjectEmbedding merge_embeddings(const std::vector<ObjectEmbedding>& embeddings);

/// 12-dimensional per-object layout statistic vector.
struct GeometricFeature {
  Eigen::Matrix<double, kGeomFeatureDim, 1> o =
      Eigen::Matrix<double, kGeomFeatureDim, 1>::Zero();

  double mu_x() const { return o[0]; }
  double mu_y() const { return o[1]; }
};

GeometricFeature merge_geometric(const std::vector<GeometricFeature>& features);

struct ObjectRecord {
  ObjectEmbedding embedding;
  GeometricFeature geom;
  int support_count = 1;  // number of images the object was merged from
};

struct RoomRecord {
  std::string room_id;
  std::map<std::string, ObjectRecord> objects;  // keyed by object_id
  std::optional<Eigen::VectorXd> room_geom_embedding;  // present iff >= 2 objects and net applied
};

struct RoomDatabase {
  std::string scene_id;
  int K = 1;
  std::vector<RoomRecord> rooms;  // sorted by room_id, ids unique
  std::string config_fingerprint;

  const RoomRecord* find_room(const std::string& room_id) const;
  void validate() const;
};

/// cos(a, b); defined as 0 when either vector has zero norm.
double cosine(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace roomloc
