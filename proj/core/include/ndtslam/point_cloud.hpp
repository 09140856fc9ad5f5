#pragma once

#include <filesystem>
#include <vector>

#include "ndtslam/geometry.hpp"

namespace ndtslam {

struct PointCloud {
  std::vector<Point3> points;
  double timestamp = 0.0;
  int frame_id = 0;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

// ASCII format: first line "POINTS <n>", then n lines "x y z" in meters.
PointCloud load_point_cloud(const std::filesystem::path& path);
void save_point_cloud(const PointCloud& cloud,
                      const std::filesystem::path& path);

// Keeps one point (the centroid) per cubic voxel of edge `leaf`. leaf <= 0
// returns the input unchanged. Output order follows sorted voxel indices.
PointCloud voxel_downsample(const PointCloud& cloud, double leaf);

PointCloud transform_cloud(const PointCloud& cloud, const Pose6D& pose);

}  // namespace ndtslam
