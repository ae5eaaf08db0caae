#include "qvseg/video.hpp"

#include <stdexcept>

namespace qvseg {

Video Video::filled(int m_exp, int n_exp, int q, uint16_t value) {
    Video v;
    v.m_exp = m_exp;
    v.n_exp = n_exp;
    v.q = q;
    size_t side = size_t{1} << n_exp;
    v.frames.assign(size_t{1} << m_exp, Frame(side, std::vector<uint16_t>(side, value)));
    return v;
}

std::vector<std::string> validate_video(const Video& video) {
    std::vector<std::string> violations;
    if (video.m_exp < 1) {
        violations.push_back("m_exp must be at least 1");
    }
    if (video.n_exp < 1) {
        violations.push_back("n_exp must be at least 1");
    }
    if (video.q < 1 || video.q > 8) {
        violations.push_back("q must be in [1, 8], got " + std::to_string(video.q));
    }
    if (video.m_exp < 1 || video.n_exp < 1 || video.q < 1 || video.q > 8) {
        return violations;
    }

    const size_t want_frames = video.frame_count();
    const size_t side = video.side();
    if (video.frames.size() != want_frames) {
        std::string msg = "frame count " + std::to_string(video.frames.size()) + " is not 2^m_exp = " +
                          std::to_string(want_frames);
        if ((video.frames.size() & (video.frames.size() - 1)) != 0 || video.frames.empty()) {
            msg += " (not a power of two)";
        }
        violations.push_back(msg);
    }
    const uint32_t max_pixel = (uint32_t{1} << video.q) - 1;
    for (size_t j = 0; j < video.frames.size(); ++j) {
        const Frame& f = video.frames[j];
        if (f.size() != side) {
            violations.push_back("frame " + std::to_string(j) + " has " + std::to_string(f.size()) +
                                 " rows, expected " + std::to_string(side));
            continue;
        }
        for (size_t y = 0; y < f.size(); ++y) {
            if (f[y].size() != side) {
                violations.push_back("frame " + std::to_string(j) + " row " + std::to_string(y) + " has " +
                                     std::to_string(f[y].size()) + " columns, expected " +
                                     std::to_string(side));
                continue;
            }
            for (size_t x = 0; x < f[y].size(); ++x) {
                if (f[y][x] > max_pixel) {
                    violations.push_back("pixel (" + std::to_string(j) + "," + std::to_string(y) + "," +
                                         std::to_string(x) + ") = " + std::to_string(f[y][x]) +
                                         " exceeds 2^q - 1 = " + std::to_string(max_pixel));
                }
            }
        }
    }
    return violations;
}

void require_valid(const Video& video) {
    auto violations = validate_video(video);
    if (violations.empty()) {
        return;
    }
    std::string joined = "invalid video:";
    for (const auto& v : violations) {
        joined += "\n  " + v;
    }
    throw std::invalid_argument(joined);
}

}  // namespace qvseg
