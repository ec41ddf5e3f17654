#include "marginreg/geometry.hpp"

#include <cmath>
#include <limits>

namespace marginreg {

std::vector<std::string> FiducialSet::labels() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.label);
    return out;
}

std::vector<Point3> FiducialSet::positions() const {
    std::vector<Point3> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.position);
    return out;
}

const Fiducial& FiducialSet::find(const std::string& label) const {
    for (const auto& e : entries)
        if (e.label == label) return e;
    throw validation_error("no fiducial labeled '" + label + "'");
}

bool FiducialSet::corresponds_to(const FiducialSet& other) const {
    if (entries.size() != other.entries.size()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].label != other.entries[i].label) return false;
    return true;
}

void validate(const FrameId& f) {
    if (f.name.empty()) throw validation_error("empty frame name");
}

bool is_rotation(const Mat3& r, double tol) {
    const Mat3 err = r.transpose() * r - Mat3::Identity();
    if (err.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(r.determinant() - 1.0) <= tol;
}

void validate(const RigidTransform& t, double tol) {
    if (!t.rotation.allFinite() || !t.translation.allFinite())
        throw validation_error("non-finite rigid transform");
    if (!is_rotation(t.rotation, tol))
        throw validation_error("rotation is not orthonormal with det +1");
}

void validate(const SimilarityTransform& t, double tol) {
    if (!(t.scale > 0.0) || !std::isfinite(t.scale))
        throw validation_error("similarity scale must be positive");
    if (!t.rotation.allFinite() || !t.translation.allFinite())
        throw validation_error("non-finite similarity transform");
    if (!is_rotation(t.rotation, tol))
        throw validation_error("rotation is not orthonormal with det +1");
}

void validate(const PointCloud& c) {
    validate(c.frame);
    for (const auto& p : c.points)
        if (!p.allFinite()) throw validation_error("non-finite point in cloud");
    if (c.colors) {
        if (c.colors->size() != c.points.size())
            throw validation_error("color count does not match point count");
        for (const auto& col : *c.colors)
            if (col.minCoeff() < 0.0 || col.maxCoeff() > 1.0)
                throw validation_error("color component outside [0,1]");
    }
    if (c.normals) {
        if (c.normals->size() != c.points.size())
            throw validation_error("normal count does not match point count");
        for (const auto& n : *c.normals)
            if (std::abs(n.norm() - 1.0) > 1e-6)
                throw validation_error("normal is not unit length");
    }
}

void validate(const TriMesh& m) {
    validate(m.frame);
    const int n = static_cast<int>(m.vertices.size());
    for (const auto& v : m.vertices)
        if (!v.allFinite()) throw validation_error("non-finite mesh vertex");
    for (const auto& f : m.faces) {
        for (int idx : f)
            if (idx < 0 || idx >= n) throw validation_error("face index out of range");
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            throw validation_error("degenerate face with repeated vertex index");
    }
    if (m.labels && m.labels->size() != m.vertices.size())
        throw validation_error("label count does not match vertex count");
}

void validate(const FiducialSet& s) {
    validate(s.frame);
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (s.entries[i].label.empty()) throw validation_error("empty fiducial label");
        if (!s.entries[i].position.allFinite())
            throw validation_error("non-finite fiducial position");
        for (std::size_t j = i + 1; j < s.entries.size(); ++j)
            if (s.entries[i].label == s.entries[j].label)
                throw validation_error("duplicate fiducial label '" + s.entries[i].label + "'");
    }
}

Mat3 orthonormalized(const Mat3& m) {
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 r = svd.matrixU() * svd.matrixV().transpose();
    if (r.determinant() < 0.0) {
        Mat3 flip = Mat3::Identity();
        flip(2, 2) = -1.0;
        r = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    return r;
}

Point3 apply_transform(const RigidTransform& t, const Point3& p) {
    return t.rotation * p + t.translation;
}

Point3 apply_transform(const SimilarityTransform& t, const Point3& p) {
    return t.scale * (t.rotation * p) + t.translation;
}

std::vector<Point3> apply_transform(const RigidTransform& t, const std::vector<Point3>& pts) {
    std::vector<Point3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(apply_transform(t, p));
    return out;
}

PointCloud transformed(const PointCloud& c, const RigidTransform& t, const FrameId& new_frame) {
    PointCloud out = c;
    out.frame = new_frame;
    for (auto& p : out.points) p = apply_transform(t, p);
    if (out.normals)
        for (auto& n : *out.normals) n = t.rotation * n;
    return out;
}

TriMesh transformed(const TriMesh& m, const RigidTransform& t, const FrameId& new_frame) {
    TriMesh out = m;
    out.frame = new_frame;
    for (auto& v : out.vertices) v = apply_transform(t, v);
    return out;
}

TriMesh transformed(const TriMesh& m, const SimilarityTransform& t, const FrameId& new_frame) {
    TriMesh out = m;
    out.frame = new_frame;
    for (auto& v : out.vertices) v = apply_transform(t, v);
    return out;
}

FiducialSet transformed(const FiducialSet& s, const RigidTransform& t, const FrameId& new_frame) {
    FiducialSet out = s;
    out.frame = new_frame;
    for (auto& e : out.entries) e.position = apply_transform(t, e.position);
    return out;
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    // apply(compose(a,b), p) == apply(a, apply(b, p))
    RigidTransform out;
    out.rotation = a.rotation * b.rotation;
    out.translation = a.rotation * b.translation + a.translation;
    return out;
}

RigidTransform invert(const RigidTransform& t) {
    RigidTransform out;
    out.rotation = t.rotation.transpose();
    out.translation = -(out.rotation * t.translation);
    return out;
}

Vec3 centroid(const std::vector<Point3>& pts) {
    if (pts.empty()) throw validation_error("centroid of empty point set");
    Vec3 c = Vec3::Zero();
    for (const auto& p : pts) c += p;
    return c / static_cast<double>(pts.size());
}

double Aabb::volume() const {
    const Vec3 d = max - min;
    if ((d.array() < 0.0).any()) return 0.0;
    return d.x() * d.y() * d.z();
}

Aabb bounding_box(const std::vector<Point3>& pts) {
    Aabb box;
    for (const auto& p : pts) {
        box.min = box.min.cwiseMin(p);
        box.max = box.max.cwiseMax(p);
    }
    return box;
}

Mat3 random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector4d q;
    do {
        for (int i = 0; i < 4; ++i) q[i] = gauss(rng);
    } while (q.norm() < 1e-12);
    q.normalize();
    return Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
}

}  // namespace marginreg
