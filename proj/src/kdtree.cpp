#include "marginreg/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace marginreg {

KdTree3::KdTree3(const std::vector<Point3>& points) : points_(points) {
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0);
    if (!points_.empty()) {
        nodes_.reserve(2 * points_.size() / kLeafSize + 4);
        root_ = build(0, static_cast<int>(points_.size()));
    }
}

int KdTree3::build(int begin, int end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    if (end - begin <= kLeafSize) {
        nodes_[id].begin = begin;
        nodes_[id].end = end;
        return id;
    }

    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    for (int i = begin; i < end; ++i) {
        lo = lo.cwiseMin(points_[order_[i]]);
        hi = hi.cwiseMax(points_[order_[i]]);
    }
    int axis;
    (hi - lo).maxCoeff(&axis);

    const int mid = (begin + end) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](int a, int b) {
                         const double ca = points_[a][axis], cb = points_[b][axis];
                         return ca < cb || (ca == cb && a < b);
                     });

    const int split_point = order_[mid];
    nodes_[id].axis = axis;
    nodes_[id].split = points_[split_point][axis];
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void KdTree3::search(int node, const Point3& q, int& best_idx, double& best_d2) const {
    const Node& n = nodes_[node];
    if (n.axis < 0) {
        for (int i = n.begin; i < n.end; ++i) {
            const int idx = order_[i];
            const double d2 = (points_[idx] - q).squaredNorm();
            if (d2 < best_d2 || (d2 == best_d2 && idx < best_idx)) {
                best_d2 = d2;
                best_idx = idx;
            }
        }
        return;
    }
    const double delta = q[n.axis] - n.split;
    const int near = delta < 0.0 ? n.left : n.right;
    const int far = delta < 0.0 ? n.right : n.left;
    search(near, q, best_idx, best_d2);
    if (delta * delta <= best_d2)  // equality kept: an equidistant point may win on index
        search(far, q, best_idx, best_d2);
}

std::pair<int, double> KdTree3::nearest(const Point3& query) const {
    if (points_.empty()) throw validation_error("empty target");
    int best_idx = std::numeric_limits<int>::max();
    double best_d2 = std::numeric_limits<double>::infinity();
    search(root_, query, best_idx, best_d2);
    return {best_idx, std::sqrt(best_d2)};
}

std::pair<int, double> nearest_neighbor(const Point3& query, const PointCloud& cloud) {
    return KdTree3(cloud).nearest(query);
}

}  // namespace marginreg
