#ifndef VIEWSEL_MESH_HPP
#define VIEWSEL_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "viewsel/geometry.hpp"

namespace viewsel {

// Triangulated surface mesh with per-face centroid, unit normal and area
// cached at construction. Normal orientation follows the vertex winding
// (CCW seen from above for an upward-facing ground mesh).
class TriangleMesh {
public:
    TriangleMesh(std::vector<Point3> vertices, std::vector<std::array<int, 3>> faces,
                 int max_faces = kDefaultMaxFaces);

    static constexpr int kDefaultMaxFaces = 10000;

    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<Point3>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    const Point3& centroid(int f) const { return centroids_[f]; }
    const Vec3& normal(int f) const { return normals_[f]; }
    double area(int f) const { return areas_[f]; }
    double total_area() const { return total_area_; }

    // Corner positions of face f.
    std::array<Point3, 3> triangle(int f) const;

private:
    std::vector<Point3> vertices_;
    std::vector<std::array<int, 3>> faces_;
    std::vector<Point3> centroids_;
    std::vector<Vec3> normals_;
    std::vector<double> areas_;
    double total_area_ = 0.0;
};

// ASCII OBJ reader: v and f records, faces must be triangles; f entries may
// carry /vt/vn suffixes. Throws ParseError with the offending line.
TriangleMesh load_obj(const std::string& path, int max_faces = TriangleMesh::kDefaultMaxFaces);

struct MeshFilterOptions {
    bool enabled = false;
    int k_neighbors = 8;
    double sigma = 3.0;
};

// Drops faces whose mean distance to the k nearest face centroids exceeds
// mean + sigma * stddev of that statistic over the mesh; removes stray
// geometry far from the surface. Returns the kept mesh and reports dropped
// face indices of the input mesh.
TriangleMesh filter_outlier_faces(const TriangleMesh& mesh, const MeshFilterOptions& opts,
                                  std::vector<int>* dropped = nullptr);

// Downward-facing camera poses along a recorded flight.
struct CameraTrajectory {
    struct Pose {
        int id;
        Point3 position;
    };
    std::vector<Pose> poses;
    double fov_h;  // radians
    double fov_v;  // radians

    CameraTrajectory(std::vector<Pose> poses, double fov_h, double fov_v);

    const Pose& by_id(int id) const { return poses[index_of_[id]]; }

private:
    std::vector<int> index_of_;
};

// JSON list of {id, x, y, z}. Ids must be unique and dense (0..n-1).
CameraTrajectory load_trajectory(const std::string& path, double fov_h, double fov_v);

} // namespace viewsel

#endif
