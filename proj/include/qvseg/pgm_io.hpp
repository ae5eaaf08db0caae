#pragma once

#include <filesystem>

#include "qvseg/video.hpp"

namespace qvseg {

// Reads one P2 (ASCII) or P5 (binary) PGM file.
Frame read_pgm(const std::filesystem::path& file, int& maxval_out);

// Writes P2 with the given maxval.
void write_pgm(const std::filesystem::path& file, const Frame& frame, int maxval);

// Directory of frame_0000.pgm, frame_0001.pgm, ... in frame order.
// m_exp/n_exp/q are derived from the file count, image size, and maxval
// (q = bit width of maxval); validate_video reports any mismatch.
Video read_video_pgm_dir(const std::filesystem::path& dir);

// Writes frame_%04d.pgm files. binary_scale emits 0/255 (maxval 255) instead
// of raw pixel values; it is meant for q = 1 segmentation masks.
void write_video_pgm_dir(const Video& video, const std::filesystem::path& dir,
                         bool binary_scale = false);

}  // namespace qvseg
