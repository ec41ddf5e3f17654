#pragma once

#include "marginreg/geometry.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace marginreg {

/// Static KD-tree over 3D points. Build once, query concurrently.
/// Ties on distance resolve to the lowest point index, matching an
/// exhaustive scan.
class KdTree3 {
public:
    KdTree3() = default;
    explicit KdTree3(const std::vector<Point3>& points);
    explicit KdTree3(const PointCloud& cloud) : KdTree3(cloud.points) {}

    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }

    /// Index and Euclidean distance (meters) of the nearest stored point.
    /// Throws validation_error("empty target") when the tree holds no points.
    std::pair<int, double> nearest(const Point3& query) const;

private:
    struct Node {
        int axis = -1;        // -1 marks a leaf
        double split = 0.0;
        int left = -1;
        int right = -1;
        int begin = 0;        // leaf range into order_
        int end = 0;
    };

    int build(int begin, int end);
    void search(int node, const Point3& q, int& best_idx, double& best_d2) const;

    std::vector<Point3> points_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;

    static constexpr int kLeafSize = 8;
};

/// Convenience single query; builds a tree per call. For repeated queries
/// against one cloud construct a KdTree3 directly.
std::pair<int, double> nearest_neighbor(const Point3& query, const PointCloud& cloud);

}  // namespace marginreg
