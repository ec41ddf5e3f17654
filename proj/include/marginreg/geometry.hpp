#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace marginreg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Point3 = Vec3;  // positions in meters

/// Data or preconditions violated (bad files, broken invariants).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File system / format failures.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Optimization or numerical breakdown.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Named coordinate frame. Comparison is exact string equality.
struct FrameId {
    std::string name;

    bool operator==(const FrameId& o) const { return name == o.name; }
    bool operator!=(const FrameId& o) const { return name != o.name; }
};

namespace frames {
inline const FrameId camera{"camera"};
inline const FrameId specimen_scan{"specimen-scan"};
inline const FrameId cavity{"cavity"};
inline const FrameId marker{"marker"};
inline const FrameId phantom_world{"phantom-world"};
}  // namespace frames

struct RigidTransform {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    static RigidTransform identity() { return {}; }
};

struct SimilarityTransform {
    double scale = 1.0;
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    static SimilarityTransform identity() { return {}; }
};

struct PointCloud {
    FrameId frame;
    std::vector<Point3> points;
    std::optional<std::vector<Vec3>> colors;   // RGB in [0,1]
    std::optional<std::vector<Vec3>> normals;  // unit vectors

    std::size_t size() const { return points.size(); }
};

struct TriMesh {
    FrameId frame;
    std::vector<Point3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::optional<std::vector<int>> labels;  // 0 = unannotated, 1 = margin region
};

struct Fiducial {
    std::string label;
    Point3 position;
};

struct FiducialSet {
    FrameId frame;
    std::vector<Fiducial> entries;

    std::size_t size() const { return entries.size(); }
    std::vector<std::string> labels() const;
    std::vector<Point3> positions() const;
    const Fiducial& find(const std::string& label) const;
    /// Two sets correspond iff label sequences match exactly.
    bool corresponds_to(const FiducialSet& other) const;
};

// Validation. Throws validation_error describing the first violated invariant.
void validate(const FrameId& f);
void validate(const RigidTransform& t, double tol = 1e-9);
void validate(const SimilarityTransform& t, double tol = 1e-9);
void validate(const PointCloud& c);
void validate(const TriMesh& m);
void validate(const FiducialSet& s);

bool is_rotation(const Mat3& r, double tol = 1e-9);

/// Closest proper rotation in Frobenius norm (polar projection via SVD).
Mat3 orthonormalized(const Mat3& m);

Point3 apply_transform(const RigidTransform& t, const Point3& p);
Point3 apply_transform(const SimilarityTransform& t, const Point3& p);

std::vector<Point3> apply_transform(const RigidTransform& t, const std::vector<Point3>& pts);

PointCloud transformed(const PointCloud& c, const RigidTransform& t, const FrameId& new_frame);
TriMesh transformed(const TriMesh& m, const RigidTransform& t, const FrameId& new_frame);
TriMesh transformed(const TriMesh& m, const SimilarityTransform& t, const FrameId& new_frame);
FiducialSet transformed(const FiducialSet& s, const RigidTransform& t, const FrameId& new_frame);

RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform invert(const RigidTransform& t);

Vec3 centroid(const std::vector<Point3>& pts);

struct Aabb {
    Vec3 min = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 max = Vec3::Constant(-std::numeric_limits<double>::infinity());

    double volume() const;
};

Aabb bounding_box(const std::vector<Point3>& pts);

/// Uniform random rotation (quaternion method). Deterministic given the engine state.
Mat3 random_rotation(std::mt19937_64& rng);

}  // namespace marginreg
