#pragma once

// File and video I/O boundary. This is the only header that touches
// OpenCV; the rest of the library works on plain float images so the
// generator and models stay dependency-free.

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>
#include <opencv2/videoio.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaugepipe/image.hpp"

namespace gauge {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline cv::Mat to_mat_bgr8(const Image3f& img) {
  cv::Mat m(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      const float* p = img.px(x, y);
      row[x] = cv::Vec3b(to_u8(p[2]), to_u8(p[1]), to_u8(p[0]));
    }
  }
  return m;
}

inline Image3f from_mat_bgr8(const cv::Mat& m) {
  cv::Mat bgr;
  if (m.channels() == 1)
    cv::cvtColor(m, bgr, cv::COLOR_GRAY2BGR);
  else if (m.channels() == 4)
    cv::cvtColor(m, bgr, cv::COLOR_BGRA2BGR);
  else
    bgr = m;
  Image3f img(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      img.set(x, y, {from_u8(row[x][2]), from_u8(row[x][1]),
                     from_u8(row[x][0])});
    }
  }
  return img;
}

inline void save_image_png(const Image3f& img, const std::string& path) {
  if (!cv::imwrite(path, to_mat_bgr8(img)))
    throw IoError("failed to write image: " + path);
}

inline Image3f load_image(const std::string& path) {
  cv::Mat m = cv::imread(path, cv::IMREAD_COLOR);
  if (m.empty()) throw IoError("failed to decode image: " + path);
  return from_mat_bgr8(m);
}

// Masks are stored as single-channel 8-bit PNGs holding raw class ids.
inline void save_mask_png(const Mask8& mask, const std::string& path) {
  cv::Mat m(mask.height, mask.width, CV_8UC1);
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      m.at<std::uint8_t>(y, x) = mask.at(x, y);
  if (!cv::imwrite(path, m))
    throw IoError("failed to write mask: " + path);
}

inline Mask8 load_mask(const std::string& path) {
  cv::Mat m = cv::imread(path, cv::IMREAD_GRAYSCALE);
  if (m.empty()) throw IoError("failed to decode mask: " + path);
  Mask8 mask(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y)
    for (int x = 0; x < m.cols; ++x) mask.at(x, y) = m.at<std::uint8_t>(y, x);
  return mask;
}

// Frame source abstraction: a single image, a directory of frames
// (sorted by name), or a video file decoded with OpenCV.
class FrameSource {
 public:
  static FrameSource from_path(const std::string& path) {
    namespace fs = std::filesystem;
    FrameSource src;
    if (fs::is_directory(path)) {
      for (const auto& e : fs::directory_iterator(path)) {
        const auto ext = e.path().extension().string();
        if (ext == ".png" || ext == ".jpg" || ext == ".jpeg" ||
            ext == ".bmp")
          src.paths_.push_back(e.path().string());
      }
      std::sort(src.paths_.begin(), src.paths_.end());
      if (src.paths_.empty())
        throw IoError("no image frames in directory: " + path);
    } else if (!fs::exists(path)) {
      throw IoError("input path does not exist: " + path);
    } else {
      const auto ext = fs::path(path).extension().string();
      if (ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp") {
        src.paths_.push_back(path);
      } else {
        src.video_ = std::make_shared<cv::VideoCapture>(path);
        if (!src.video_->isOpened())
          throw IoError("failed to open video: " + path);
      }
    }
    return src;
  }

  // Returns false at end of stream. Throws IoError on a mid-stream
  // decode failure so callers can emit partial results.
  bool next(Image3f& out, std::string& frame_id) {
    if (video_) {
      cv::Mat frame;
      if (!video_->read(frame)) return false;
      if (frame.empty()) throw IoError("video frame decode failure");
      out = from_mat_bgr8(frame);
      frame_id = "frame_" + std::to_string(frame_index_++);
      return true;
    }
    if (frame_index_ >= paths_.size()) return false;
    const std::string& p = paths_[frame_index_];
    frame_id = std::filesystem::path(p).stem().string();
    ++frame_index_;
    out = load_image(p);
    return true;
  }

 private:
  std::vector<std::string> paths_;
  std::shared_ptr<cv::VideoCapture> video_;
  size_t frame_index_ = 0;
};

}  // namespace gauge
