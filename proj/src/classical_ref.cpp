#include "qvseg/classical_ref.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qvseg {

Frame abs_diff_frames(const Frame& a, const Frame& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("frame row counts differ");
    }
    Frame out(a.size());
    for (size_t y = 0; y < a.size(); ++y) {
        if (a[y].size() != b[y].size()) {
            throw std::invalid_argument("frame row lengths differ");
        }
        out[y].resize(a[y].size());
        for (size_t x = 0; x < a[y].size(); ++x) {
            out[y][x] = static_cast<uint16_t>(std::abs(int(a[y][x]) - int(b[y][x])));
        }
    }
    return out;
}

Frame threshold_frame(const Frame& d, int threshold) {
    Frame out(d.size());
    for (size_t y = 0; y < d.size(); ++y) {
        out[y].resize(d[y].size());
        for (size_t x = 0; x < d[y].size(); ++x) {
            out[y][x] = d[y][x] >= threshold ? 1 : 0;
        }
    }
    return out;
}

Video classical_three_frame_diff(const Video& video, int threshold, BoundaryMode boundary) {
    require_valid(video);
    const size_t count = video.frame_count();
    Video out = Video::filled(video.m_exp, video.n_exp, 1);
    for (size_t j = 0; j < count; ++j) {
        size_t prev = j;
        size_t next = j;
        if (boundary == BoundaryMode::cyclic) {
            prev = (j + count - 1) % count;
            next = (j + 1) % count;
        } else {
            if (j > 0) prev = j - 1;
            if (j + 1 < count) next = j + 1;
        }
        const Frame d1 = threshold_frame(abs_diff_frames(video.frames[j], video.frames[prev]), threshold);
        const Frame d2 = threshold_frame(abs_diff_frames(video.frames[j], video.frames[next]), threshold);
        for (size_t y = 0; y < video.side(); ++y) {
            for (size_t x = 0; x < video.side(); ++x) {
                out.at(j, y, x) = d1[y][x] & d2[y][x];
            }
        }
    }
    return out;
}

}  // namespace qvseg
